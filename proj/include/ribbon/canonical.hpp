#pragma once

#include <algorithm>
#include <vector>

#include "ribbon/orientation.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct SignedAutomorphism {
    std::vector<int> dart_map;
    int sign = 1;
};

/// A map relabeled to its minimal encoding. `code` is rot followed by mate on
/// the canonical labels; equal codes mean isomorphic maps. `zero` marks graphs
/// carrying an orientation-reversing automorphism; chains never store them.
struct CanonicalGraph {
    RibbonGraph graph;
    std::vector<int> code;
    bool zero = false;
};

inline bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.code == b.code;
}
inline bool operator<(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.code < b.code;
}

/// Deterministic traversal from a start dart. Each vertex's darts receive
/// consecutive labels in rotation order from the dart through which the vertex
/// was first reached, vertices in BFS discovery order.
inline std::vector<int> bfs_labeling(const RibbonGraph& g, int start) {
    std::vector<int> label(g.darts(), -1);
    std::vector<char> done(g.num_vertices(), 0);
    std::vector<int> queue{start};
    size_t head = 0;
    int next = 0;
    while (head < queue.size()) {
        int a = queue[head++];
        int v = g.vertex_of(a);
        if (done[v]) continue;
        done[v] = 1;
        int d = a;
        do {
            label[d] = next++;
            d = g.rot(d);
        } while (d != a);
        d = a;
        do {
            queue.push_back(g.mate(d));
            d = g.rot(d);
        } while (d != a);
    }
    return label;
}

inline std::vector<int> encode_with(const RibbonGraph& g, const std::vector<int>& label) {
    int n = g.darts();
    std::vector<int> code(2 * n);
    for (int d = 0; d < n; ++d) {
        code[label[d]] = label[g.rot(d)];
        code[n + label[d]] = label[g.mate(d)];
    }
    return code;
}

inline RibbonGraph graph_from_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size()) / 2;
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        std::vector<int> c;
        int x = d;
        do {
            c.push_back(x);
            seen[x] = 1;
            x = code[x];
        } while (x != d);
        cycles.push_back(std::move(c));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int d = 0; d < n; ++d)
        if (code[n + d] > d) pairs.emplace_back(d, code[n + d]);
    return build_graph(cycles, pairs);
}

/// Sign of a graph automorphism: parity of its vertex permutation times a
/// reversal sign per edge whose direction it flips. Independent of the
/// reference decoration.
inline int automorphism_sign(const RibbonGraph& g, const std::vector<int>& dart_map) {
    std::vector<int> vperm(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        vperm[v] = g.vertex_of(dart_map[g.cycle(v)[0]]);
    int sign = permutation_parity(vperm);
    for (const auto& [lo, hi] : g.edges()) {
        int image = dart_map[lo];
        if (image > g.mate(image)) sign = -sign;
    }
    return sign;
}

namespace detail {

struct CodeSearch {
    std::vector<int> best_code;
    std::vector<int> best_label;
    std::vector<int> minimal_starts;
};

inline CodeSearch minimal_codes(const RibbonGraph& g) {
    const int n = g.darts();
    CodeSearch out;
    std::vector<int> label(n), order(n), queue, code(2 * n);
    std::vector<char> done(g.num_vertices());
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        // Rebuild the traversal of bfs_labeling with shared buffers,
        // comparing the code against the best one as it is produced: the
        // rotation half comes out in label order during the walk, the mate
        // half right after.  cmp: 0 while equal to best, -1 once strictly
        // smaller; abandon the start the moment it is strictly larger.
        std::fill(label.begin(), label.end(), -1);
        std::fill(done.begin(), done.end(), 0);
        queue.clear();
        queue.push_back(s);
        size_t head = 0;
        int next = 0;
        int cmp = out.best_code.empty() ? -1 : 0;
        while (head < queue.size()) {
            int a = queue[head++];
            int v = g.vertex_of(a);
            if (done[v]) continue;
            done[v] = 1;
            int base = next;
            int d = a;
            do {
                label[d] = next;
                order[next] = d;
                ++next;
                d = g.rot(d);
            } while (d != a);
            for (int p = base; p < next; ++p) {
                int value = p + 1 < next ? p + 1 : base;
                code[p] = value;
                if (cmp == 0) {
                    if (value != out.best_code[p])
                        cmp = value < out.best_code[p] ? -1 : 1;
                }
            }
            if (cmp > 0) break;
            d = a;
            do {
                queue.push_back(g.mate(d));
                d = g.rot(d);
            } while (d != a);
        }
        if (cmp > 0) continue;
        for (int p = 0; p < n; ++p) {
            int value = label[g.mate(order[p])];
            code[n + p] = value;
            if (cmp == 0) {
                if (value != out.best_code[n + p])
                    cmp = value < out.best_code[n + p] ? -1 : 1;
            }
            if (cmp > 0) break;
        }
        if (cmp > 0) continue;
        if (cmp < 0) {
            out.best_code = code;
            out.best_label = label;
            out.minimal_starts = {s};
        } else {
            out.minimal_starts.push_back(s);
        }
    }
    return out;
}

inline std::vector<int> compose_automorphism(const RibbonGraph& g,
                                             const std::vector<int>& base_label,
                                             const std::vector<int>& other_label) {
    std::vector<int> inv(g.darts());
    for (int d = 0; d < g.darts(); ++d) inv[other_label[d]] = d;
    std::vector<int> dart_map(g.darts());
    for (int d = 0; d < g.darts(); ++d) dart_map[d] = inv[base_label[d]];
    return dart_map;
}

}  // namespace detail

/// Full automorphism group (it acts freely on darts, so one element per
/// minimal start), each with its orientation sign.
inline std::vector<SignedAutomorphism> automorphisms(const RibbonGraph& g) {
    auto search = detail::minimal_codes(g);
    std::vector<SignedAutomorphism> out;
    for (int s : search.minimal_starts) {
        auto label = bfs_labeling(g, s);
        SignedAutomorphism a;
        a.dart_map = detail::compose_automorphism(g, search.best_label, label);
        a.sign = automorphism_sign(g, a.dart_map);
        out.push_back(std::move(a));
    }
    return out;
}

struct Canonicalized {
    CanonicalGraph canon;
    int sign = 1;               // relates the input orientation to the canonical one
    std::vector<int> labeling;  // input dart -> canonical dart
};

/// The canonical decoration of a canonically labeled graph: vertices in label
/// order, edges directed from the lower dart.
inline Orientation canonical_orientation(const RibbonGraph& g) {
    return default_orientation(g);
}

inline Canonicalized canonicalize(const RibbonGraph& g, const Orientation& o) {
    auto search = detail::minimal_codes(g);
    Canonicalized result;
    result.labeling = search.best_label;
    result.canon.graph = graph_from_code(search.best_code);
    result.canon.code = std::move(search.best_code);

    for (int s : search.minimal_starts) {
        auto label = bfs_labeling(g, s);
        auto dart_map = detail::compose_automorphism(g, result.labeling, label);
        if (automorphism_sign(g, dart_map) < 0) {
            result.canon.zero = true;
            break;
        }
    }

    // Pull the canonical decoration back through the labeling and compare.
    const auto& label = result.labeling;
    Orientation pulled;
    std::vector<std::pair<int, int>> base_and_vertex;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int base = g.darts();
        for (int d : g.cycle(v)) base = std::min(base, label[d]);
        base_and_vertex.emplace_back(base, v);
    }
    std::sort(base_and_vertex.begin(), base_and_vertex.end());
    pulled.vertex_rank.resize(g.num_vertices());
    for (int r = 0; r < g.num_vertices(); ++r) pulled.vertex_rank[base_and_vertex[r].second] = r;
    pulled.tails.reserve(g.num_edges());
    for (const auto& [lo, hi] : g.edges())
        pulled.tails.push_back(label[lo] < label[hi] ? lo : hi);
    result.sign = orientation_sign(g, o, pulled);
    return result;
}

inline Canonicalized canonicalize(const RibbonGraph& g) {
    return canonicalize(g, default_orientation(g));
}

/// Unoriented canonical code, for dehydrated dedup sets.
inline std::vector<int> canonical_code(const RibbonGraph& g) {
    return detail::minimal_codes(g).best_code;
}

}  // namespace ribbon
