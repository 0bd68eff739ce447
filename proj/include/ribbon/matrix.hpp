#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

/// Sparse matrix over the rationals: dimensions plus (row, col, value)
/// triples with unique positions and no explicit zeros.
struct SparseMatrixQ {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, Rational>> entries;

    void add(int r, int c, const Rational& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("matrix entry outside declared shape");
        if (v != 0) entries.emplace_back(r, c, v);
    }
};

/// Exact rank by fraction-free (Bareiss) elimination: rows are scaled to
/// integers, then each elimination step uses the cross-multiplication rule
///   a_ij <- (p * a_ij - a_ic * a_rj) / previous_pivot,
/// whose divisions are exact.  Pivots are chosen to limit fill-in.  No
/// floating point is involved anywhere.
inline int rank_over_Q(const SparseMatrixQ& m) {
    std::vector<std::map<int, Int>> rows;
    {
        std::vector<std::map<int, Rational>> raw(m.rows);
        for (const auto& [r, c, v] : m.entries) {
            auto [it, fresh] = raw[r].emplace(c, v);
            if (!fresh)
                throw std::invalid_argument("duplicate matrix entry position");
        }
        for (auto& row : raw) {
            if (row.empty()) continue;
            Int scale = 1;
            for (const auto& [c, v] : row)
                scale = lcm(scale, denominator(v));
            std::map<int, Int> cooked;
            for (const auto& [c, v] : row)
                cooked.emplace(c, numerator(v) * (scale / denominator(v)));
            rows.push_back(std::move(cooked));
        }
    }

    int rank = 0;
    Int previous_pivot = 1;
    std::vector<bool> done(rows.size(), false);
    while (true) {
        // column populations among the remaining rows
        std::map<int, int> col_count;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!done[i])
                for (const auto& [c, v] : rows[i]) ++col_count[c];
        // pick the nonzero position with the cheapest elimination estimate
        size_t pivot_row = rows.size();
        int pivot_col = -1;
        long long best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            for (const auto& [c, v] : rows[i]) {
                long long cost = static_cast<long long>(rows[i].size() - 1) *
                                 (col_count[c] - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pivot_row = i;
                    pivot_col = c;
                }
            }
        }
        if (pivot_col < 0) break;

        // Sylvester's identity guarantees each division below is exact, but
        // only if every remaining row is rescaled every step — including
        // rows with no entry in the pivot column.
        const Int p = rows[pivot_row][pivot_col];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || done[i]) continue;
            auto hit = rows[i].find(pivot_col);
            const Int a = hit == rows[i].end() ? Int(0) : hit->second;
            std::map<int, Int> next;
            auto it = rows[i].begin();
            auto jt = rows[pivot_row].begin();
            while (it != rows[i].end() || jt != rows[pivot_row].end()) {
                int c;
                Int value;
                if (jt == rows[pivot_row].end() ||
                    (it != rows[i].end() && it->first < jt->first)) {
                    c = it->first;
                    value = p * it->second;
                    ++it;
                } else if (it == rows[i].end() || jt->first < it->first) {
                    c = jt->first;
                    value = -a * jt->second;
                    ++jt;
                } else {
                    c = it->first;
                    value = p * it->second - a * jt->second;
                    ++it;
                    ++jt;
                }
                if (c == pivot_col || value == 0) continue;
                next.emplace(c, value / previous_pivot);
            }
            rows[i] = std::move(next);
        }
        done[pivot_row] = true;
        previous_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace ribbon
