#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ribbon/chain.hpp>
#include <ribbon/families.hpp>

using namespace ribbon;

namespace {

RibbonGraph interleaved_bouquet() {
    return build_graph({{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
}

RibbonGraph adjacent_bouquet() {
    return build_graph({{0, 1, 2, 3}}, {{0, 1}, {2, 3}});
}

RibbonGraph theta_torus() {
    return build_graph({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
}

RibbonGraph dumbbell() {
    return build_graph({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 2}, {4, 5}});
}

RibbonGraph octagon() {
    return build_graph({{0, 1, 2, 3, 4, 5, 6, 7}}, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Orientation random_orientation(const RibbonGraph& g, std::mt19937& rng) {
    Orientation o = default_orientation(g);
    std::shuffle(o.vertex_rank.begin(), o.vertex_rank.end(), rng);
    for (int e = 0; e < g.num_edges(); ++e)
        if (rng() % 2) o.tails[e] = g.mate(o.tails[e]);
    return o;
}

}  // namespace

TEST_CASE("contracting the dumbbell bridge yields the adjacent bouquet", "[chain]") {
    auto g = dumbbell();
    auto o = default_orientation(g);
    int bridge = g.edge_of(0);
    REQUIRE_FALSE(g.is_loop(bridge));
    auto r = contract_edge(g, o, bridge);
    auto expect = adjacent_bouquet();
    CHECK(r.graph.cycles() == expect.cycles());
    CHECK(r.graph.edges() == expect.edges());
    CHECK(r.orientation.vertex_rank == std::vector<int>{0});
    CHECK(r.orientation.tails == std::vector<int>{0, 2});
}

TEST_CASE("contract_edge rejects loops and bad indices", "[chain]") {
    auto g = dumbbell();
    auto o = default_orientation(g);
    CHECK_THROWS_AS(contract_edge(g, o, g.edge_of(1)), std::invalid_argument);
    CHECK_THROWS_AS(contract_edge(g, o, 7), std::invalid_argument);
}

TEST_CASE("expansion then contraction is the identity", "[chain]") {
    std::vector<RibbonGraph> zoo{interleaved_bouquet(), adjacent_bouquet(), theta_torus(),
                                 dumbbell(), octagon(), build_Xk(3).first};
    for (const auto& g : zoo) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            int p = g.valency(v);
            for (int i = 0; i < p; ++i) {
                for (int a = 2; a + 2 <= p; ++a) {
                    auto g2 = expand_vertex(g, v, i, a);
                    REQUIRE(g2.num_vertices() == g.num_vertices() + 1);
                    auto [genus, punctures] = g.genus_punctures();
                    auto [genus2, punctures2] = g2.genus_punctures();
                    CHECK(genus2 == genus);
                    CHECK(punctures2 == punctures);
                    int e = g2.edge_of(g.darts());
                    auto r = contract_edge(g2, default_orientation(g2), e);
                    CHECK(r.graph.cycles() == g.cycles());
                    CHECK(r.graph.edges() == g.edges());
                }
            }
        }
    }
}

TEST_CASE("expansions enumerates every contiguous split", "[chain]") {
    CHECK(expansions(interleaved_bouquet()).size() == 4);  // valency 4: 4 starts, one width
    CHECK(expansions(theta_torus()).empty());              // valency 3 cannot split
    CHECK(expansions(octagon()).size() == 8 * 5);  // 8 starts, widths 2..6
}

TEST_CASE("boundary of the one-face theta vanishes termwise", "[chain]") {
    auto g = theta_torus();
    auto d = boundary(g, default_orientation(g));
    CHECK(d.empty());  // every contraction carries a reversing symmetry
}

TEST_CASE("boundary of the dumbbell is the adjacent bouquet", "[chain]") {
    auto d = boundary(dumbbell(), default_orientation(dumbbell()));
    REQUIRE(d.size() == 1);
    auto canon = canonicalize(adjacent_bouquet()).canon;
    CHECK(d.coefficient(canon) == 1);
}

TEST_CASE("boundary terms drop one vertex and keep the surface", "[chain]") {
    auto [g, o] = build_Xk(5);
    auto d = boundary(g, o);
    REQUIRE_FALSE(d.empty());
    for (const auto& [cg, c] : d.terms()) {
        CHECK(grade_of(cg.graph) == Grade{1, 5, 4});
        CHECK(c != 0);
    }
}

TEST_CASE("boundary squares to zero", "[chain]") {
    std::mt19937 rng(5150);
    std::vector<RibbonGraph> zoo{theta_torus(), dumbbell(), octagon(),
                                 build_Xk(2).first, build_Xk(3).first,
                                 build_Xk(4).first, build_Xk(5).first};
    // add some multi-vertex graphs obtained by splitting
    for (auto seed : {octagon(), build_Xk(2).first}) {
        auto once = expansions(seed);
        zoo.push_back(once[1 % once.size()]);
        auto twice = expansions(once[0]);
        if (!twice.empty()) zoo.push_back(twice[twice.size() / 2]);
    }
    for (const auto& g : zoo) {
        auto d = boundary(g, default_orientation(g));
        CHECK(boundary(d).empty());
        auto d2 = boundary(g, random_orientation(g, rng));
        CHECK(boundary(d2).empty());
    }
}

TEST_CASE("boundary respects decoration equivalence", "[chain]") {
    std::mt19937 rng(31337);
    auto [g, o] = build_Xk(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto o2 = random_orientation(g, rng);
        int s = orientation_sign(g, o, o2);
        CHECK(boundary(g, o) == boundary(g, o2, s));
    }
}

TEST_CASE("separating vertices", "[chain]") {
    CHECK(has_cut_vertex(adjacent_bouquet()));
    CHECK(has_cut_vertex(dumbbell()));
    CHECK_FALSE(has_cut_vertex(interleaved_bouquet()));
    CHECK_FALSE(has_cut_vertex(theta_torus()));
    CHECK_FALSE(has_cut_vertex(octagon()));
    for (int k = 1; k <= 5; ++k) CHECK_FALSE(has_cut_vertex(build_Xk(k).first));
    // two interleaved pairs wedged at one vertex
    auto wedge = build_graph({{0, 1, 2, 3, 4, 5, 6, 7}},
                             {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    CHECK(has_cut_vertex(wedge));
}

TEST_CASE("quotient projection drops separating-vertex terms", "[chain]") {
    Chain c;
    c.add(dumbbell(), default_orientation(dumbbell()), Rational(2));
    c.add(theta_torus(), default_orientation(theta_torus()), Rational(3));
    REQUIRE(c.size() == 2);
    auto q = quotient_project(c);
    REQUIRE(q.size() == 1);
    CHECK(q.coefficient(canonicalize(theta_torus()).canon) == 3);
}

TEST_CASE("chain arithmetic merges isomorphic terms", "[chain]") {
    std::mt19937 rng(7);
    auto g = theta_torus();
    auto o = default_orientation(g);
    Chain c;
    c.add(g, o, Rational(1, 2));
    // same class via a different presentation and decoration
    auto g2 = build_graph({{3, 4, 5}, {0, 1, 2}}, {{2, 5}, {0, 3}, {1, 4}});
    auto o2 = random_orientation(g2, rng);
    int rel = canonicalize(g2, o2).sign;
    c.add(g2, o2, Rational(rel, 2));
    REQUIRE(c.size() == 1);
    CHECK(c.coefficient(canonicalize(g).canon) == 1);
    c.add(g, o, Rational(-1));
    CHECK(c.empty());
    Chain z;
    z.add(interleaved_bouquet(), default_orientation(interleaved_bouquet()), Rational(5));
    CHECK(z.empty());  // reversing symmetry kills the class
}
