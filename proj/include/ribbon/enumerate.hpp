#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ribbon/canonical.hpp"
#include "ribbon/chain.hpp"

namespace ribbon {

/// Thrown when a computation would exceed the configured dart-count cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxDarts = 30;

/// All isomorphism classes with the given surface invariants and vertex
/// count whose orientation classes are nonzero, sorted by canonical encoding.
struct GradedBasis {
    Grade grade;
    std::vector<CanonicalGraph> graphs;
};

/// Largest vertex count possible for the invariants (g, m): every vertex has
/// valency at least 3, so 3k <= 2E = 2(k + 2g - 2 + m).
inline int max_grade(int g, int m) { return 4 * g + 2 * m - 4; }

/// Dart count of a graph with k vertices and invariants (g, m).
inline int dart_count(int g, int m, int k) { return 2 * (k + 2 * g - 2 + m); }

namespace detail {

inline void check_enumeration_args(int g, int m, int k) {
    if (g < 0 || m < 0 || k < 1)
        throw std::invalid_argument(
            "enumeration needs g >= 0, m >= 0, and vertex count k >= 1");
}

inline void check_dart_cap(int g, int m, int k, int max_darts) {
    int darts = dart_count(g, m, k);
    if (darts > max_darts)
        throw ResourceLimitError(
            "grade (" + std::to_string(g) + ", " + std::to_string(m) + ", " +
            std::to_string(k) + ") needs " + std::to_string(darts) +
            " darts, over the cap of " + std::to_string(max_darts));
}

/// Enumerate fixed-point-free pairings of the darts 0..n-1 by backtracking:
/// the lowest unpaired dart is matched with every larger unpaired dart.
/// Pairings are reported as (low dart, high dart) edge lists.
inline void for_each_pairing(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    std::vector<int> mate(n, -1);
    std::vector<std::pair<int, int>> edges;
    std::function<void(int)> rec = [&](int d) {
        while (d < n && mate[d] != -1) ++d;
        if (d == n) {
            f(edges);
            return;
        }
        for (int c = d + 1; c < n; ++c) {
            if (mate[c] != -1) continue;
            mate[d] = c;
            mate[c] = d;
            edges.emplace_back(d, c);
            rec(d + 1);
            edges.pop_back();
            mate[d] = -1;
            mate[c] = -1;
        }
    };
    rec(0);
}

/// Nonincreasing sequences of exactly k parts >= 3 summing to total.
inline std::vector<std::vector<int>> valency_sequences(int total, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int rem, int parts, int cap) {
        if (parts == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int p = std::min(cap, rem - 3 * (parts - 1)); p >= 3; --p) {
            cur.push_back(p);
            rec(rem - p, parts - 1, p);
            cur.pop_back();
        }
    };
    rec(total, k, total);
    return out;
}

}  // namespace detail

/// Every isomorphism class (zero classes included) with one vertex and the
/// given invariants: all pairings of a single rotation cycle, filtered by
/// (genus, punctures) and deduplicated canonically.
inline std::vector<CanonicalGraph> single_vertex_classes(int g, int m) {
    int edges = 2 * g - 1 + m;
    if (edges < 2) return {};  // a lone vertex needs valency >= 3, hence >= 4
    std::vector<std::vector<int>> rotation{std::vector<int>(2 * edges)};
    for (int d = 0; d < 2 * edges; ++d) rotation[0][d] = d;
    std::set<CanonicalGraph> classes;
    detail::for_each_pairing(2 * edges, [&](const std::vector<std::pair<int, int>>& pairing) {
        RibbonGraph graph = build_graph(rotation, pairing);
        auto [gg, mm] = graph.genus_punctures();
        if (gg != g || mm != m) return;
        classes.insert(canonicalize(graph).canon);
    });
    return {classes.begin(), classes.end()};
}

/// Every class obtainable by splitting one vertex of one of the given
/// classes (zero classes included on both sides).  Since contracting any
/// non-loop edge of a (k+1)-vertex graph yields a k-vertex graph of the same
/// invariants, iterating this from the single-vertex classes is exhaustive.
inline std::vector<CanonicalGraph> expand_classes(
    const std::vector<CanonicalGraph>& prev, int threads = 1) {
    int n = std::max(1, threads);
    std::vector<std::set<CanonicalGraph>> local(n);
    auto work = [&](int t) {
        for (size_t i = t; i < prev.size(); i += n)
            for (const RibbonGraph& e : expansions(prev[i].graph))
                local[t].insert(canonicalize(e).canon);
    };
    if (n == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::set<CanonicalGraph> merged;
    for (auto& s : local) merged.merge(s);
    return {merged.begin(), merged.end()};
}

/// All isomorphism classes (zero classes included) for vertex counts
/// 1..k_limit at the given invariants; index [k-1] holds grade k.  Defaults
/// to every possible grade.
inline std::vector<std::vector<CanonicalGraph>> all_classes(
    int g, int m, int k_limit = -1, int max_darts = kDefaultMaxDarts,
    int threads = 1) {
    if (k_limit < 0) k_limit = max_grade(g, m);
    if (k_limit < 1) return {};
    detail::check_dart_cap(g, m, k_limit, max_darts);
    std::vector<std::vector<CanonicalGraph>> grades;
    grades.push_back(single_vertex_classes(g, m));
    for (int k = 2; k <= k_limit; ++k)
        grades.push_back(expand_classes(grades.back(), threads));
    return grades;
}

/// The nonzero classes with exactly k vertices, sorted by canonical encoding.
inline GradedBasis enumerate_graphs(int g, int m, int k,
                                    int max_darts = kDefaultMaxDarts,
                                    int threads = 1) {
    detail::check_enumeration_args(g, m, k);
    GradedBasis basis{Grade{g, m, k}, {}};
    if (k > max_grade(g, m)) return basis;
    detail::check_dart_cap(g, m, k, max_darts);
    auto grades = all_classes(g, m, k, max_darts, threads);
    for (const CanonicalGraph& c : grades[k - 1])
        if (!c.zero) basis.graphs.push_back(c);
    return basis;
}

/// Independent generation for cross-checking: assign every valency sequence
/// (parts >= 3 summing to 2E), try every pairing of the darts, and keep the
/// connected graphs with the right invariants.  Exponential in the dart
/// count; intended for small grades only.
inline GradedBasis enumerate_graphs_direct(int g, int m, int k,
                                           int max_darts = kDefaultMaxDarts) {
    detail::check_enumeration_args(g, m, k);
    GradedBasis basis{Grade{g, m, k}, {}};
    if (k > max_grade(g, m)) return basis;
    detail::check_dart_cap(g, m, k, max_darts);
    int darts = dart_count(g, m, k);
    std::set<CanonicalGraph> classes;
    for (const auto& valencies : detail::valency_sequences(darts, k)) {
        std::vector<std::vector<int>> rotation;
        int next = 0;
        for (int p : valencies) {
            std::vector<int> cycle(p);
            for (int i = 0; i < p; ++i) cycle[i] = next++;
            rotation.push_back(std::move(cycle));
        }
        detail::for_each_pairing(darts, [&](const std::vector<std::pair<int, int>>& pairing) {
            RibbonGraph graph;
            try {
                graph = build_graph(rotation, pairing);
            } catch (const std::invalid_argument&) {
                return;  // disconnected
            }
            auto [gg, mm] = graph.genus_punctures();
            if (gg != g || mm != m) return;
            classes.insert(canonicalize(graph).canon);
        });
    }
    for (const CanonicalGraph& c : classes)
        if (!c.zero) basis.graphs.push_back(c);
    return basis;
}

}  // namespace ribbon
