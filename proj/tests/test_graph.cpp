#include <catch2/catch_amalgamated.hpp>

#include <ribbon/families.hpp>
#include <ribbon/orientation.hpp>
#include <ribbon/ribbon_graph.hpp>

using namespace ribbon;

namespace {

RibbonGraph interleaved_bouquet() {
    return build_graph({{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
}

RibbonGraph adjacent_bouquet() {
    return build_graph({{0, 1, 2, 3}}, {{0, 1}, {2, 3}});
}

RibbonGraph dumbbell() {
    return build_graph({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 2}, {4, 5}});
}

}  // namespace

TEST_CASE("build_graph assembles a one-vertex map", "[graph]") {
    auto g = interleaved_bouquet();
    REQUIRE(g.darts() == 4);
    REQUIRE(g.num_vertices() == 1);
    REQUIRE(g.num_edges() == 2);
    CHECK(g.rot(0) == 1);
    CHECK(g.rot(3) == 0);
    CHECK(g.mate(0) == 2);
    CHECK(g.mate(3) == 1);
    CHECK(g.vertex_of(2) == 0);
    CHECK(g.valency(0) == 4);
    CHECK(g.is_loop(g.edge_of(0)));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("build_graph keeps vertex ids in input order", "[graph]") {
    auto g = dumbbell();
    REQUIRE(g.num_vertices() == 2);
    CHECK(g.vertex_of(0) == 0);
    CHECK(g.vertex_of(5) == 1);
    CHECK(g.cycle(1) == std::vector<int>{3, 4, 5});
    CHECK_FALSE(g.is_loop(g.edge_of(0)));
    CHECK(g.is_loop(g.edge_of(1)));
}

TEST_CASE("build_graph rejects malformed input", "[graph]") {
    CHECK_THROWS_AS(build_graph({}, {}), std::invalid_argument);
    // valency below three
    CHECK_THROWS_AS(build_graph({{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}), std::invalid_argument);
    // dart out of range
    CHECK_THROWS_AS(build_graph({{0, 1, 2, 7}}, {{0, 2}, {1, 7}}), std::invalid_argument);
    // dart repeated in rotation
    CHECK_THROWS_AS(build_graph({{0, 1, 2, 2}}, {{0, 2}, {1, 3}}), std::invalid_argument);
    // pairing fixes a dart
    CHECK_THROWS_AS(build_graph({{0, 1, 2, 3}}, {{0, 0}, {1, 3}}), std::invalid_argument);
    // dart paired twice
    CHECK_THROWS_AS(build_graph({{0, 1, 2, 3}}, {{0, 2}, {0, 3}}), std::invalid_argument);
    // dart never paired
    CHECK_THROWS_AS(build_graph({{0, 1, 2, 3}}, {{0, 2}}), std::invalid_argument);
    // two components
    CHECK_THROWS_AS(
        build_graph({{0, 1, 2, 3}, {4, 5, 6, 7}}, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}),
        std::invalid_argument);
}

TEST_CASE("face tracing matches hand counts", "[graph]") {
    SECTION("interleaved loops fill a torus") {
        auto g = interleaved_bouquet();
        REQUIRE(g.faces().size() == 1);
        CHECK(g.faces()[0] == std::vector<int>{0, 3, 2, 1});
        auto [genus, punctures] = g.genus_punctures();
        CHECK(genus == 1);
        CHECK(punctures == 1);
    }
    SECTION("adjacent loops fill a three-holed sphere") {
        auto g = adjacent_bouquet();
        REQUIRE(g.faces().size() == 3);
        auto [genus, punctures] = g.genus_punctures();
        CHECK(genus == 0);
        CHECK(punctures == 3);
    }
    SECTION("dumbbell fills a three-holed sphere") {
        auto g = dumbbell();
        REQUIRE(g.faces().size() == 3);
        auto [genus, punctures] = g.genus_punctures();
        CHECK(genus == 0);
        CHECK(punctures == 3);
    }
    SECTION("interleaved octagon fills a genus-two surface") {
        auto g = build_graph({{0, 1, 2, 3, 4, 5, 6, 7}},
                             {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
        REQUIRE(g.faces().size() == 1);
        auto [genus, punctures] = g.genus_punctures();
        CHECK(genus == 2);
        CHECK(punctures == 1);
    }
}

TEST_CASE("loop necklaces are genus one with one face per vertex", "[graph]") {
    for (int k = 1; k <= 6; ++k) {
        auto [g, o] = build_Xk(k);
        REQUIRE(g.darts() == 4 * k);
        REQUIRE(g.num_vertices() == k);
        REQUIRE(g.num_edges() == 2 * k);
        CHECK(g.faces().size() == static_cast<size_t>(k));
        auto [genus, punctures] = g.genus_punctures();
        CHECK(genus == 1);
        CHECK(punctures == k);
        CHECK_NOTHROW(validate_orientation(g, o));
    }
}

TEST_CASE("permutation parity", "[orientation]") {
    CHECK(permutation_parity({}) == 1);
    CHECK(permutation_parity({0}) == 1);
    CHECK(permutation_parity({0, 1, 2}) == 1);
    CHECK(permutation_parity({1, 0, 2}) == -1);
    CHECK(permutation_parity({1, 2, 0}) == 1);
    CHECK(permutation_parity({3, 2, 1, 0}) == 1);
    CHECK(permutation_parity({1, 0, 3, 2}) == 1);
    CHECK(permutation_parity({0, 2, 1}) == -1);
}

TEST_CASE("orientation comparison flips sign per elementary change", "[orientation]") {
    auto [g, o] = build_Xk(3);
    CHECK(orientation_sign(g, o, o) == 1);

    Orientation swapped = o;
    std::swap(swapped.vertex_rank[0], swapped.vertex_rank[1]);
    CHECK(orientation_sign(g, o, swapped) == -1);
    CHECK(orientation_sign(g, swapped, o) == -1);

    Orientation reversed = o;
    reversed.tails[0] = g.mate(reversed.tails[0]);
    CHECK(orientation_sign(g, o, reversed) == -1);

    Orientation both = swapped;
    both.tails[0] = g.mate(both.tails[0]);
    CHECK(orientation_sign(g, o, both) == 1);

    Orientation cycled = o;  // three-cycle of ranks is even
    cycled.vertex_rank = {1, 2, 0};
    CHECK(orientation_sign(g, o, cycled) == 1);
}

TEST_CASE("necklace orientation differs from the default by one edge reversal", "[orientation]") {
    for (int k = 1; k <= 5; ++k) {
        auto [g, o] = build_Xk(k);
        CHECK(orientation_sign(g, o, default_orientation(g)) == -1);
    }
}

TEST_CASE("orientation validation", "[orientation]") {
    auto g = dumbbell();
    auto o = default_orientation(g);
    CHECK_NOTHROW(validate_orientation(g, o));

    Orientation short_ranks = o;
    short_ranks.vertex_rank.pop_back();
    CHECK_THROWS_AS(validate_orientation(g, short_ranks), std::invalid_argument);

    Orientation dup_ranks = o;
    dup_ranks.vertex_rank = {0, 0};
    CHECK_THROWS_AS(validate_orientation(g, dup_ranks), std::invalid_argument);

    Orientation bad_tail = o;
    bad_tail.tails[0] = 5;  // dart 5 belongs to a different edge
    CHECK_THROWS_AS(validate_orientation(g, bad_tail), std::invalid_argument);
}
