#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ribbon/orientation.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// The genus-one surface with one puncture triangulated by k four-valent
/// vertices on a central cycle, one loop per vertex. Vertex j owns darts
/// 4j..4j+3: entry from the previous vertex, loop out, exit to the next
/// vertex, loop back, in rotation order.
inline std::pair<RibbonGraph, Orientation> build_Xk(int k) {
    if (k < 1) throw std::invalid_argument("build_Xk: k must be positive");
    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < k; ++j) {
        cycles.push_back({4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3});
        pairs.emplace_back(4 * j + 1, 4 * j + 3);
        pairs.emplace_back(4 * j + 2, 4 * ((j + 1) % k));
    }
    RibbonGraph g = build_graph(cycles, pairs);
    Orientation o = default_orientation(g);
    for (int j = 0; j < k; ++j) {
        o.tails[g.edge_of(4 * j + 1)] = 4 * j + 1;
        o.tails[g.edge_of(4 * j + 2)] = 4 * j + 2;
    }
    return {std::move(g), std::move(o)};
}

}  // namespace ribbon
