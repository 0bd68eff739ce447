#pragma once

#include <stdexcept>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Orientation data: a total order on vertices (vertex_rank is a permutation
/// of 0..V-1) plus a direction per edge (tails[e] is the tail dart). Two
/// decorations represent the same orientation iff they differ by an even
/// number of vertex transpositions and edge reversals.
struct Orientation {
    std::vector<int> vertex_rank;
    std::vector<int> tails;
};

inline Orientation default_orientation(const RibbonGraph& g) {
    Orientation o;
    o.vertex_rank.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) o.vertex_rank[v] = v;
    o.tails.reserve(g.num_edges());
    for (const auto& [lo, hi] : g.edges()) o.tails.push_back(lo);
    return o;
}

inline void validate_orientation(const RibbonGraph& g, const Orientation& o) {
    if (static_cast<int>(o.vertex_rank.size()) != g.num_vertices())
        throw std::invalid_argument("vertex order has wrong length");
    std::vector<char> seen(g.num_vertices(), 0);
    for (int r : o.vertex_rank) {
        if (r < 0 || r >= g.num_vertices() || seen[r])
            throw std::invalid_argument("vertex order is not a permutation");
        seen[r] = 1;
    }
    if (static_cast<int>(o.tails.size()) != g.num_edges())
        throw std::invalid_argument("tail list has wrong length");
    for (int e = 0; e < g.num_edges(); ++e) {
        if (o.tails[e] != g.edges()[e].first && o.tails[e] != g.edges()[e].second)
            throw std::invalid_argument("tail dart does not belong to its edge");
    }
}

inline int permutation_parity(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int transpositions = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

/// Sign relating two decorations of the same graph.
inline int orientation_sign(const RibbonGraph& g, const Orientation& a, const Orientation& b) {
    // Permutation taking a's vertex sequence to b's.
    std::vector<int> at_rank(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) at_rank[a.vertex_rank[v]] = v;
    std::vector<int> perm(g.num_vertices());
    for (int r = 0; r < g.num_vertices(); ++r) perm[r] = b.vertex_rank[at_rank[r]];
    int sign = permutation_parity(perm);
    for (int e = 0; e < g.num_edges(); ++e)
        if (a.tails[e] != b.tails[e]) sign = -sign;
    return sign;
}

}  // namespace ribbon
