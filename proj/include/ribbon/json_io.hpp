#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ribbon/canonical.hpp"
#include "ribbon/chain.hpp"
#include "ribbon/orientation.hpp"
#include "ribbon/rational.hpp"
#include "ribbon/ribbon_graph.hpp"

// JSON encodings used by the command-line tool and the sample files.
//
// Graph object:
//   { "rotation": [[darts of vertex 0 in cyclic order], ...],
//     "pairing":  [[dart, dart], ...],
//     "vertex_order": [...],            (optional)
//     "tails": [...] }                  (optional)
// "vertex_order" lists the vertex ids in their chosen order (entry i is the
// i-th vertex); "tails" holds the chosen tail dart of each edge, by edge
// index. The two decoration keys come and go together; when absent, the
// reference decoration (vertices in index order, lower dart of each edge as
// tail) fills in.
//
// Chain object:
//   { "terms": [ { "coeff": "p/q", "code": [...], "graph": {...} }, ... ] }
// Terms are listed in canonical-code order, so equal chains serialize to
// byte-identical JSON.

namespace ribbon {

// Exact rational as "numerator/denominator", denominator always present and
// positive: "0/1", "-1/5", "7/1".
inline std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline nlohmann::json graph_to_json(const RibbonGraph& g) {
    nlohmann::json rotation = nlohmann::json::array();
    for (const auto& cycle : g.cycles()) rotation.push_back(cycle);
    nlohmann::json pairing = nlohmann::json::array();
    for (const auto& [lo, hi] : g.edges()) pairing.push_back({lo, hi});
    return {{"rotation", rotation}, {"pairing", pairing}};
}

inline nlohmann::json oriented_graph_to_json(const RibbonGraph& g, const Orientation& o) {
    nlohmann::json j = graph_to_json(g);
    // vertex_rank[v] = position of v; the JSON form lists vertices by position
    std::vector<int> order(o.vertex_rank.size());
    for (size_t v = 0; v < o.vertex_rank.size(); ++v) order[o.vertex_rank[v]] = static_cast<int>(v);
    j["vertex_order"] = order;
    j["tails"] = o.tails;
    return j;
}

inline RibbonGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
    if (!j.contains("rotation") || !j.contains("pairing"))
        throw std::invalid_argument("graph JSON needs 'rotation' and 'pairing' arrays");
    std::vector<std::vector<int>> rotation;
    for (const auto& cycle : j.at("rotation")) rotation.push_back(cycle.get<std::vector<int>>());
    std::vector<std::pair<int, int>> pairing;
    for (const auto& edge : j.at("pairing")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument("each pairing entry must be a two-dart array");
        pairing.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    return build_graph(rotation, pairing);
}

// Graph plus decoration; the reference orientation fills in when absent.
inline std::pair<RibbonGraph, Orientation> oriented_graph_from_json(const nlohmann::json& j) {
    RibbonGraph g = graph_from_json(j);
    bool has_order = j.contains("vertex_order");
    bool has_tails = j.contains("tails");
    if (has_order != has_tails)
        throw std::invalid_argument(
            "'vertex_order' and 'tails' must be given together");
    if (!has_order) return {g, default_orientation(g)};
    auto order = j.at("vertex_order").get<std::vector<int>>();
    if (static_cast<int>(order.size()) != g.num_vertices())
        throw std::invalid_argument("'vertex_order' must list every vertex once");
    Orientation o;
    o.vertex_rank.assign(order.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || v >= g.num_vertices() || o.vertex_rank[v] != -1)
            throw std::invalid_argument("'vertex_order' must list every vertex once");
        o.vertex_rank[v] = static_cast<int>(i);
    }
    o.tails = j.at("tails").get<std::vector<int>>();
    validate_orientation(g, o);
    return {g, o};
}

inline nlohmann::json chain_to_json(const Chain& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [cg, coeff] : c.terms()) {
        terms.push_back({{"coeff", rational_string(coeff)},
                         {"code", cg.code},
                         {"graph", graph_to_json(cg.graph)}});
    }
    return {{"terms", terms}};
}

}  // namespace ribbon
