#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

/// Connected combinatorial map: darts 0..2E-1, a rotation permutation whose
/// cycles are the vertices (cyclic dart order), and a fixed-point-free pairing
/// involution whose orbits are the edges. Every vertex has valency >= 3.
class RibbonGraph {
public:
    RibbonGraph() = default;

    int darts() const { return darts_; }
    int num_vertices() const { return static_cast<int>(cycles_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    int rot(int d) const { return rot_[d]; }
    int mate(int d) const { return mate_[d]; }
    int vertex_of(int d) const { return dart_vertex_[d]; }
    int edge_of(int d) const { return dart_edge_[d]; }
    int valency(int v) const { return static_cast<int>(cycles_[v].size()); }

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    const std::vector<int>& cycle(int v) const { return cycles_[v]; }
    // Edge e as (lower dart, higher dart); edges are sorted by lower dart.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool is_loop(int e) const {
        return dart_vertex_[edges_[e].first] == dart_vertex_[edges_[e].second];
    }

    /// Face cycles of rot∘mate, each rotated to start at its lowest dart,
    /// listed in order of that dart. Faces partition the darts.
    std::vector<std::vector<int>> faces() const {
        std::vector<char> seen(darts_, 0);
        std::vector<std::vector<int>> out;
        for (int d0 = 0; d0 < darts_; ++d0) {
            if (seen[d0]) continue;
            std::vector<int> face;
            int d = d0;
            do {
                face.push_back(d);
                seen[d] = 1;
                d = rot_[mate_[d]];
            } while (d != d0);
            out.push_back(std::move(face));
        }
        return out;
    }

    /// (genus, punctures) from V - E + m = 2 - 2g.
    std::pair<int, int> genus_punctures() const {
        int m = static_cast<int>(faces().size());
        int twice_g = 2 - num_vertices() + num_edges() - m;
        if (twice_g < 0 || twice_g % 2 != 0)
            throw std::logic_error("map does not close up to an orientable surface");
        return {twice_g / 2, m};
    }

    friend RibbonGraph build_graph(const std::vector<std::vector<int>>& rotation,
                                   const std::vector<std::pair<int, int>>& pairing);

private:
    int darts_ = 0;
    std::vector<int> rot_;
    std::vector<int> mate_;
    std::vector<int> dart_vertex_;
    std::vector<int> dart_edge_;
    std::vector<std::vector<int>> cycles_;
    std::vector<std::pair<int, int>> edges_;
};

/// Validates and assembles a map. Vertex ids follow the order of `rotation`;
/// each stored cycle is rotated to start at its lowest dart.
inline RibbonGraph build_graph(const std::vector<std::vector<int>>& rotation,
                               const std::vector<std::pair<int, int>>& pairing) {
    RibbonGraph g;
    int n = 0;
    for (const auto& c : rotation) n += static_cast<int>(c.size());
    if (n == 0) throw std::invalid_argument("empty dart set");
    if (n % 2 != 0) throw std::invalid_argument("odd number of darts");

    g.darts_ = n;
    g.rot_.assign(n, -1);
    g.mate_.assign(n, -1);
    g.dart_vertex_.assign(n, -1);
    g.dart_edge_.assign(n, -1);

    std::vector<char> seen(n, 0);
    for (int v = 0; v < static_cast<int>(rotation.size()); ++v) {
        const auto& c = rotation[v];
        if (c.size() < 3)
            throw std::invalid_argument("vertex of valency " + std::to_string(c.size()) +
                                        " (3 required)");
        for (size_t i = 0; i < c.size(); ++i) {
            int d = c[i];
            if (d < 0 || d >= n) throw std::invalid_argument("dart out of range");
            if (seen[d]) throw std::invalid_argument("rotation is not a permutation");
            seen[d] = 1;
            g.rot_[d] = c[(i + 1) % c.size()];
            g.dart_vertex_[d] = v;
        }
        auto rotated = c;
        std::rotate(rotated.begin(), std::min_element(rotated.begin(), rotated.end()),
                    rotated.end());
        g.cycles_.push_back(std::move(rotated));
    }

    if (static_cast<int>(pairing.size()) * 2 != n)
        throw std::invalid_argument("pairing does not cover the darts");
    for (auto [a, b] : pairing) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("pairing dart out of range");
        if (a == b) throw std::invalid_argument("pairing has a fixed point");
        if (g.mate_[a] != -1 || g.mate_[b] != -1)
            throw std::invalid_argument("pairing is not an involution");
        g.mate_[a] = b;
        g.mate_[b] = a;
    }

    for (auto [a, b] : pairing) {
        int lo = std::min(a, b), hi = std::max(a, b);
        g.edges_.emplace_back(lo, hi);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        g.dart_edge_[g.edges_[e].first] = e;
        g.dart_edge_[g.edges_[e].second] = e;
    }

    // Connectivity over darts via rot and mate.
    std::vector<char> reach(n, 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {g.rot_[d], g.mate_[d]}) {
            if (!reach[e]) {
                reach[e] = 1;
                ++count;
                stack.push_back(e);
            }
        }
    }
    if (count != n) throw std::invalid_argument("graph is disconnected");
    return g;
}

}  // namespace ribbon
