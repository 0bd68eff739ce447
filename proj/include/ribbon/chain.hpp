#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "ribbon/canonical.hpp"
#include "ribbon/contraction.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

struct Grade {
    int genus = 0;
    int punctures = 0;
    int vertices = 0;
    friend bool operator==(const Grade&, const Grade&) = default;
};

inline Grade grade_of(const RibbonGraph& g) {
    auto [genus, punctures] = g.genus_punctures();
    return {genus, punctures, g.num_vertices()};
}

namespace detail {

struct DartUnion {
    std::vector<int> parent;
    explicit DartUnion(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// True if splitting v's rotation cycle into the contiguous arcs
/// [i, i+a) and the rest tears the graph apart.
inline bool split_disconnects(const RibbonGraph& g, int v, int i, int a) {
    detail::DartUnion uf(g.darts());
    for (int d = 0; d < g.darts(); ++d) uf.unite(d, g.mate(d));
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (x == v) continue;
        const auto& c = g.cycle(x);
        for (size_t j = 1; j < c.size(); ++j) uf.unite(c[0], c[j]);
    }
    const auto& c = g.cycle(v);
    int p = g.valency(v);
    for (int j = 1; j < a; ++j) uf.unite(c[i % p], c[(i + j) % p]);
    for (int j = 1; j < p - a; ++j) uf.unite(c[(i + a) % p], c[(i + a + j) % p]);
    return uf.find(c[i % p]) != uf.find(c[(i + a) % p]);
}

/// A vertex is separating when some contiguous split of its rotation cycle
/// into two nonempty arcs disconnects the graph (this covers wedges of loops,
/// where classical vertex removal would not).
inline bool is_cut_vertex(const RibbonGraph& g, int v) {
    int p = g.valency(v);
    for (int a = 1; a <= p / 2; ++a)
        for (int i = 0; i < p; ++i)
            if (split_disconnects(g, v, i, a)) return true;
    return false;
}

inline bool has_cut_vertex(const RibbonGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_cut_vertex(g, v)) return true;
    return false;
}

/// Formal rational combination of isomorphism classes. Terms are keyed by
/// canonical code; classes with an orientation-reversing symmetry are zero and
/// never stored.
class Chain {
public:
    Chain() = default;

    void add(const CanonicalGraph& cg, const Rational& c) {
        if (cg.zero || c == 0) return;
        auto it = terms_.find(cg);
        if (it == terms_.end()) {
            terms_.emplace(cg, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const RibbonGraph& g, const Orientation& o, const Rational& c) {
        auto cz = canonicalize(g, o);
        add(cz.canon, cz.sign > 0 ? c : -c);
    }

    Chain& operator+=(const Chain& other) {
        for (const auto& [cg, c] : other.terms_) add(cg, c);
        return *this;
    }

    Chain& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [cg, c] : terms_) c *= s;
        return *this;
    }

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<CanonicalGraph, Rational>& terms() const { return terms_; }

    Rational coefficient(const CanonicalGraph& cg) const {
        auto it = terms_.find(cg);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator*(const Rational& s, Chain a) { return a *= s; }

private:
    std::map<CanonicalGraph, Rational> terms_;
};

/// Sum of all single-edge contractions, with signs carried by the induced
/// decorations.
inline Chain boundary(const RibbonGraph& g, const Orientation& o, const Rational& coeff = 1) {
    Chain out;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) continue;
        auto r = contract_edge(g, o, e);
        out.add(r.graph, r.orientation, coeff);
    }
    return out;
}

inline Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [cg, coeff] : c.terms())
        out += boundary(cg.graph, canonical_orientation(cg.graph), coeff);
    return out;
}

/// Image in the quotient by classes with a separating vertex.
inline Chain quotient_project(const Chain& c) {
    Chain out;
    for (const auto& [cg, coeff] : c.terms())
        if (!has_cut_vertex(cg.graph)) out.add(cg, coeff);
    return out;
}

}  // namespace ribbon
