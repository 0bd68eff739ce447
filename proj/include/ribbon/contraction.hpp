#pragma once

#include <stdexcept>
#include <vector>

#include "ribbon/orientation.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct OrientedGraph {
    RibbonGraph graph;
    Orientation orientation;
};

/// Contract a non-loop edge, merging its head vertex into its tail vertex.
/// The decoration is first normalized (tail vertex rank 0, head rank 1,
/// compensating with one extra edge reversal when that permutation is odd), so
/// the contraction itself carries no sign: the merged vertex takes rank 0 and
/// the rotation (tail successors, then head successors).
inline OrientedGraph contract_edge(const RibbonGraph& g, const Orientation& o, int e) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("edge out of range");
    if (g.is_loop(e)) throw std::invalid_argument("cannot contract a loop");
    int t = o.tails[e], h = g.mate(t);
    int u = g.vertex_of(t), w = g.vertex_of(h);

    int V = g.num_vertices();
    std::vector<int> by_rank(V);
    for (int v = 0; v < V; ++v) by_rank[o.vertex_rank[v]] = v;
    std::vector<int> new_rank(V);
    new_rank[u] = 0;
    new_rank[w] = 1;
    int next = 2;
    for (int r = 0; r < V; ++r) {
        int v = by_rank[r];
        if (v != u && v != w) new_rank[v] = next++;
    }
    std::vector<int> perm(V);
    for (int v = 0; v < V; ++v) perm[o.vertex_rank[v]] = new_rank[v];
    bool flip_needed = permutation_parity(perm) < 0;

    std::vector<int> merged;
    for (int d = g.rot(t); d != t; d = g.rot(d)) merged.push_back(d);
    for (int d = g.rot(h); d != h; d = g.rot(d)) merged.push_back(d);

    std::vector<int> relabel(g.darts(), -1);
    int nd = 0;
    for (int d = 0; d < g.darts(); ++d)
        if (d != t && d != h) relabel[d] = nd++;

    std::vector<std::vector<int>> cycles;
    std::vector<int> cycle_vertex;
    int anchor = std::min(u, w);
    for (int v = 0; v < V; ++v) {
        if (v == anchor) {
            std::vector<int> c;
            c.reserve(merged.size());
            for (int d : merged) c.push_back(relabel[d]);
            cycles.push_back(std::move(c));
            cycle_vertex.push_back(u);
        } else if (v == u || v == w) {
            continue;
        } else {
            std::vector<int> c;
            for (int d : g.cycle(v)) c.push_back(relabel[d]);
            cycles.push_back(std::move(c));
            cycle_vertex.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        pairs.emplace_back(relabel[g.edges()[f].first], relabel[g.edges()[f].second]);
    }

    OrientedGraph out;
    out.graph = build_graph(cycles, pairs);
    out.orientation.vertex_rank.resize(out.graph.num_vertices());
    for (size_t i = 0; i < cycles.size(); ++i) {
        int v = cycle_vertex[i];
        out.orientation.vertex_rank[i] = (v == u) ? 0 : new_rank[v] - 1;
    }
    out.orientation.tails.resize(out.graph.num_edges());
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        int tl = relabel[o.tails[f]];
        out.orientation.tails[out.graph.edge_of(tl)] = tl;
    }
    if (flip_needed)
        out.orientation.tails[0] = out.graph.mate(out.orientation.tails[0]);
    return out;
}

/// Split vertex v into two: arc of `a` darts starting at rotation position `i`
/// of the stored cycle versus the rest, joined by a fresh edge whose darts 2E
/// and 2E+1 lead the two new cycles. Contracting that edge undoes the split.
inline RibbonGraph expand_vertex(const RibbonGraph& g, int v, int i, int a) {
    int p = g.valency(v);
    if (a < 2 || p - a < 2)
        throw std::invalid_argument("both arcs need at least two darts");
    int n = g.darts();
    const auto& c = g.cycle(v);
    std::vector<int> v1{n}, v2{n + 1};
    for (int j = 0; j < a; ++j) v1.push_back(c[(i + j) % p]);
    for (int j = a; j < p; ++j) v2.push_back(c[(i + j) % p]);
    auto cycles = g.cycles();
    cycles[v] = std::move(v1);
    cycles.push_back(std::move(v2));
    auto pairs = g.edges();
    pairs.emplace_back(n, n + 1);
    return build_graph(cycles, pairs);
}

/// Every one-edge expansion of g (all vertices, all contiguous splits).
inline std::vector<RibbonGraph> expansions(const RibbonGraph& g) {
    std::vector<RibbonGraph> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int p = g.valency(v);
        for (int i = 0; i < p; ++i)
            for (int a = 2; a + 2 <= p; ++a)
                out.push_back(expand_vertex(g, v, i, a));
    }
    return out;
}

}  // namespace ribbon
