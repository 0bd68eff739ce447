#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ribbon/chain.hpp"
#include "ribbon/families.hpp"
#include "ribbon/trees.hpp"

namespace ribbon {

enum class EdgeKind { Big, Loop, Root, Internal, Leaf };

/// A cyclic word of tree ornaments: composition[j] counts the leaves of the
/// tree hung at big-cycle position j.
struct NecklaceSpec {
    std::vector<int> composition;
    std::vector<PlanarBinaryTree> trees;
};

struct Necklace {
    RibbonGraph graph;
    Orientation orientation;
    std::vector<EdgeKind> edge_kind;  // by edge id of graph
};

/// Assemble the spec into a map. Position j occupies darts [4*prefix_j,
/// 4*prefix_{j+1}): the cycle vertex u_j carries (entry, root, exit, then one
/// landing dart per tree leaf in right-to-left leaf order); each internal tree
/// node is a trivalent vertex (parent, left, right); every leaf edge runs from
/// its node back down to u_j. A one-leaf tree degenerates to a loop at u_j, so
/// the all-ones spec reproduces build_Xk dart for dart, decoration included.
/// Vertex order is u_0, its tree nodes in-order, u_1, ...; edges point along
/// the cycle (exit side) and away from u_j into the tree (parent side), with
/// leaf edges pointing from node to landing.
inline Necklace ornate_necklace(const NecklaceSpec& spec) {
    int n = static_cast<int>(spec.composition.size());
    if (n == 0) throw std::invalid_argument("empty composition");
    if (spec.trees.size() != spec.composition.size())
        throw std::invalid_argument("one tree per composition entry required");
    for (int j = 0; j < n; ++j) {
        if (spec.composition[j] < 1) throw std::invalid_argument("parts must be positive");
        if (spec.trees[j].leaf_count() != spec.composition[j])
            throw std::invalid_argument("tree leaf count must match its part");
    }

    std::vector<int> base(n + 1, 0);
    for (int j = 0; j < n; ++j) base[j + 1] = base[j] + 4 * spec.composition[j];

    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> tails;          // tail dart per pair, aligned with `pairs`
    std::vector<EdgeKind> kinds;     // aligned with `pairs`

    auto add_pair = [&](int a, int b, int tail, EdgeKind kind) {
        pairs.emplace_back(a, b);
        tails.push_back(tail);
        kinds.push_back(kind);
    };

    for (int j = 0; j < n; ++j) {
        int b = base[j];
        int i = spec.composition[j];
        std::vector<int> u_cycle;
        for (int d = b; d < b + 3 + i; ++d) u_cycle.push_back(d);
        cycles.push_back(std::move(u_cycle));

        add_pair(b + 2, base[(j + 1) % n], b + 2, EdgeKind::Big);

        if (i == 1) {
            add_pair(b + 1, b + 3, b + 1, EdgeKind::Loop);
            continue;
        }

        const PlanarBinaryTree& t = spec.trees[j];
        int tb = b + 3 + i;  // first tree dart
        // in-order slots for internal nodes and left-to-right leaf numbers
        std::vector<int> slot(t.internal_count(), -1);
        int next_slot = 0, next_leaf = 0;
        std::vector<std::pair<int, int>> leaf_hook;  // (child dart, leaf number)
        std::function<void(int)> visit = [&](int x) {
            if (t.left[x] != -1) visit(t.left[x]);
            slot[x] = next_slot++;
            if (t.right[x] != -1) visit(t.right[x]);
        };
        visit(0);
        auto parent_dart = [&](int x) { return tb + 3 * slot[x]; };
        auto landing = [&](int leaf) { return b + 3 + (i - 1 - leaf); };

        for (int m = 0; m < t.internal_count(); ++m)
            cycles.push_back({tb + 3 * m, tb + 3 * m + 1, tb + 3 * m + 2});

        add_pair(b + 1, parent_dart(0), b + 1, EdgeKind::Root);
        // second traversal emits leaves in left-to-right order
        std::function<void(int)> wire = [&](int x) {
            if (t.left[x] == -1)
                add_pair(parent_dart(x) + 1, landing(next_leaf++), parent_dart(x) + 1,
                         EdgeKind::Leaf);
            else
                wire(t.left[x]);
            if (t.right[x] == -1)
                add_pair(parent_dart(x) + 2, landing(next_leaf++), parent_dart(x) + 2,
                         EdgeKind::Leaf);
            else
                wire(t.right[x]);
        };
        next_leaf = 0;
        // internal edges
        for (int x = 0; x < t.internal_count(); ++x) {
            if (t.left[x] != -1)
                add_pair(parent_dart(x) + 1, parent_dart(t.left[x]), parent_dart(x) + 1,
                         EdgeKind::Internal);
            if (t.right[x] != -1)
                add_pair(parent_dart(x) + 2, parent_dart(t.right[x]), parent_dart(x) + 2,
                         EdgeKind::Internal);
        }
        wire(0);
    }

    Necklace out;
    out.graph = build_graph(cycles, pairs);
    out.orientation.vertex_rank.resize(out.graph.num_vertices());
    for (int v = 0; v < out.graph.num_vertices(); ++v) out.orientation.vertex_rank[v] = v;
    out.orientation.tails.resize(out.graph.num_edges());
    out.edge_kind.resize(out.graph.num_edges());
    for (size_t p = 0; p < pairs.size(); ++p) {
        int e = out.graph.edge_of(pairs[p].first);
        out.orientation.tails[e] = tails[p];
        out.edge_kind[e] = kinds[p];
    }
    return out;
}

namespace detail {

inline void compositions_rec(int rest, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = 1; part <= rest; ++part) {
        cur.push_back(part);
        compositions_rec(rest - part, cur, out);
        cur.pop_back();
    }
}

inline bool cyclic_minimal(const std::vector<int>& c) {
    int n = static_cast<int>(c.size());
    for (int r = 1; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            int a = c[(s + r) % n], b = c[s];
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace detail

/// Lexicographically minimal representatives of compositions of k up to
/// rotation.
inline std::vector<std::vector<int>> compositions_up_to_cycle(int k) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    detail::compositions_rec(k, cur, all);
    std::vector<std::vector<int>> out;
    for (auto& c : all)
        if (detail::cyclic_minimal(c)) out.push_back(std::move(c));
    return out;
}

/// Number of rotations fixing the composition.
inline int cyclic_symmetry_count(const std::vector<int>& c) {
    int n = static_cast<int>(c.size());
    int count = 0;
    for (int r = 0; r < n; ++r) {
        bool fixed = true;
        for (int s = 0; s < n && fixed; ++s) fixed = c[(s + r) % n] == c[s];
        if (fixed) ++count;
    }
    return count;
}

/// Visit every tuple of ornament shapes for one composition.
inline void for_each_ornament_choice(const std::vector<int>& composition,
                                     const std::function<void(const NecklaceSpec&)>& f) {
    int n = static_cast<int>(composition.size());
    std::vector<std::vector<PlanarBinaryTree>> menus;
    for (int i : composition) menus.push_back(binary_trees(i));
    std::vector<size_t> idx(n, 0);
    while (true) {
        NecklaceSpec spec;
        spec.composition = composition;
        for (int j = 0; j < n; ++j) spec.trees.push_back(menus[j][idx[j]]);
        f(spec);
        int pos = n - 1;
        while (pos >= 0 && ++idx[pos] == menus[pos].size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

/// Chain-level necklace for one composition: the sum, over every choice of
/// one ornament shape per position, of the assembled oriented graph.
inline Chain necklace_chain(const std::vector<int>& composition) {
    Chain out;
    for_each_ornament_choice(composition, [&](const NecklaceSpec& spec) {
        auto nk = ornate_necklace(spec);
        out.add(nk.graph, nk.orientation, 1);
    });
    return out;
}

/// Visit every necklace of total weight k: each cyclic composition class once,
/// every tuple of tree shapes, with the class coefficient (-1)^n / |symmetry|.
inline void for_each_necklace(int k,
                              const std::function<void(const NecklaceSpec&, const Rational&)>& f) {
    for (const auto& comp : compositions_up_to_cycle(k)) {
        int n = static_cast<int>(comp.size());
        Rational coeff(n % 2 == 0 ? 1 : -1, cyclic_symmetry_count(comp));
        for_each_ornament_choice(comp,
                                 [&](const NecklaceSpec& spec) { f(spec, coeff); });
    }
}

/// The weight-k necklace chain. Requires odd k >= 3: for even k the cyclic
/// rotation of a necklace can reverse orientation, so the per-class
/// coefficient (-1)^n / |symmetry| would depend on which rotation of the
/// composition is taken as the representative, and no well-defined chain
/// exists. (rotation_orientation_sign in the tests exhibits such a flip.)
inline Chain Z(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("Z(k) requires odd k >= 3");
    Chain out;
    for_each_necklace(k, [&](const NecklaceSpec& spec, const Rational& coeff) {
        auto nk = ornate_necklace(spec);
        out.add(nk.graph, nk.orientation, coeff);
    });
    return out;
}

/// Coefficient of the k-vertex loop necklace class in a chain, measured
/// against that graph's own reference decoration. Requires k = 1 mod 4 and
/// k >= 5: for every other k the loop necklace class is zero and the
/// functional does not exist.
inline Rational theta(int k, const Chain& c) {
    if (k < 5 || k % 4 != 1)
        throw std::invalid_argument(
            "theta(k, .) requires k = 1 mod 4, k >= 5 (the reference class "
            "vanishes otherwise)");
    auto [xg, xo] = build_Xk(k);
    auto cz = canonicalize(xg, xo);
    Rational coeff = c.coefficient(cz.canon);
    return cz.sign > 0 ? coeff : -coeff;
}

}  // namespace ribbon
