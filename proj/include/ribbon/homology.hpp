#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ribbon/enumerate.hpp"
#include "ribbon/matrix.hpp"

namespace ribbon {

/// Matrix of the edge-contraction boundary from the span of `upper` to the
/// span of `lower`: column j expands the boundary of upper.graphs[j] in the
/// lower basis.
inline SparseMatrixQ boundary_matrix(const GradedBasis& lower,
                                     const GradedBasis& upper) {
    std::map<CanonicalGraph, int> row_of;
    for (size_t i = 0; i < lower.graphs.size(); ++i)
        row_of.emplace(lower.graphs[i], static_cast<int>(i));
    SparseMatrixQ m;
    m.rows = static_cast<int>(lower.graphs.size());
    m.cols = static_cast<int>(upper.graphs.size());
    for (size_t j = 0; j < upper.graphs.size(); ++j) {
        const RibbonGraph& g = upper.graphs[j].graph;
        Chain db = boundary(g, canonical_orientation(g));
        for (const auto& [cls, coeff] : db.terms()) {
            auto it = row_of.find(cls);
            if (it == row_of.end())
                throw std::logic_error(
                    "boundary left the enumerated basis; enumeration is "
                    "incomplete");
            m.add(it->second, static_cast<int>(j), coeff);
        }
    }
    return m;
}

/// Convenience overload enumerating both bases.
inline SparseMatrixQ boundary_matrix(int g, int m, int k,
                                     int max_darts = kDefaultMaxDarts,
                                     int threads = 1) {
    detail::check_enumeration_args(g, m, k);
    if (k < 2) {
        // there are no graphs below one vertex, so the boundary vanishes
        SparseMatrixQ out;
        out.cols = static_cast<int>(enumerate_graphs(g, m, k, max_darts, threads)
                                        .graphs.size());
        return out;
    }
    auto grades = all_classes(g, m, k, max_darts, threads);
    GradedBasis lower{Grade{g, m, k - 1}, {}};
    GradedBasis upper{Grade{g, m, k}, {}};
    for (const auto& c : grades[k - 2])
        if (!c.zero) lower.graphs.push_back(c);
    for (const auto& c : grades[k - 1])
        if (!c.zero) upper.graphs.push_back(c);
    return boundary_matrix(lower, upper);
}

/// One row of the homology table for a fixed (g, m).
struct GradeSummary {
    int vertices = 0;             // the grade k
    int basis_size = 0;           // nonzero classes at this grade
    int boundary_rank = 0;        // rank of the map out of this grade
    int betti = 0;                // dim ker d_k − rank d_{k+1}
    int cohomological_degree = 0; // 4g + 2m − 4 − k
};

/// Full table over every grade 1..max_grade(g, m).
inline std::vector<GradeSummary> homology_summary(
    int g, int m, int max_darts = kDefaultMaxDarts, int threads = 1) {
    int top = max_grade(g, m);
    if (top < 1) return {};
    auto grades = all_classes(g, m, top, max_darts, threads);
    std::vector<GradedBasis> bases;
    for (int k = 1; k <= top; ++k) {
        GradedBasis b{Grade{g, m, k}, {}};
        for (const auto& c : grades[k - 1])
            if (!c.zero) b.graphs.push_back(c);
        bases.push_back(std::move(b));
    }
    std::vector<int> rank(top + 2, 0);  // rank[k] = rank of d_k, zero at ends
    for (int k = 2; k <= top; ++k)
        rank[k] = rank_over_Q(boundary_matrix(bases[k - 2], bases[k - 1]));
    std::vector<GradeSummary> out;
    for (int k = 1; k <= top; ++k) {
        GradeSummary row;
        row.vertices = k;
        row.basis_size = static_cast<int>(bases[k - 1].graphs.size());
        row.boundary_rank = rank[k];
        row.betti = row.basis_size - rank[k] - rank[k + 1];
        row.cohomological_degree = 4 * g + 2 * m - 4 - k;
        out.push_back(row);
    }
    return out;
}

/// Betti numbers indexed by grade (entry [k-1] is b_k).
inline std::vector<int> betti_numbers(int g, int m,
                                      int max_darts = kDefaultMaxDarts,
                                      int threads = 1) {
    std::vector<int> out;
    for (const auto& row : homology_summary(g, m, max_darts, threads))
        out.push_back(row.betti);
    return out;
}

/// Alternating sum of the grade dimensions, with nonzero isomorphism classes
/// as the dimension count.
inline long long euler_characteristic(int g, int m,
                                      int max_darts = kDefaultMaxDarts,
                                      int threads = 1) {
    int top = max_grade(g, m);
    if (top < 1) return 0;
    auto grades = all_classes(g, m, top, max_darts, threads);
    long long chi = 0;
    for (int k = 1; k <= top; ++k) {
        long long nonzero = 0;
        for (const auto& c : grades[k - 1])
            if (!c.zero) ++nonzero;
        chi += (k % 2 == 0 ? nonzero : -nonzero);
    }
    return chi;
}

}  // namespace ribbon
