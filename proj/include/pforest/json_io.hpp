#pragma once

// JSON serialization for forests and gadget instances. All writers emit
// key-sorted objects with a top-level "schema": 1 so serialized output is
// byte-stable across runs and suitable for golden-file comparison.

#include <string>
#include <vector>

#include "json.hpp"
#include "pforest/forest.hpp"
#include "pforest/graph.hpp"
#include "pforest/reductions.hpp"

namespace pforest {

inline constexpr int kJsonSchemaVersion = 1;

// {"edges": [[u,v],...], "size": k, "proper": bool,
//  "even_degree_vertices": [...], "schema": 1}
inline nlohmann::json forest_json(const Graph& g,
                                  const std::vector<Edge>& forest) {
    std::vector<Edge> sorted = forest;
    for (auto& e : sorted) e = make_edge(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());

    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : sorted) edges.push_back({u, v});

    std::vector<int> deg = forest_degrees(g.n(), sorted);
    nlohmann::json even = nlohmann::json::array();
    bool proper = true;
    for (int v = 0; v < g.n(); ++v) {
        if (deg[v] % 2 == 0) even.push_back(v);
        if (deg[v] == 0) proper = false;
    }
    return nlohmann::json{{"edges", std::move(edges)},
                          {"size", sorted.size()},
                          {"proper", proper},
                          {"even_degree_vertices", std::move(even)},
                          {"schema", kJsonSchemaVersion}};
}

inline std::vector<Edge> forest_edges_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw error("forest json: missing \"edges\" array");
    std::vector<Edge> out;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw error("forest json: edge entries must be integer pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

inline nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return nlohmann::json{{"n", g.n()}, {"edges", std::move(edges)}};
}

// {"graph": {"n":..., "edges": [...]}, "roles": {label: id},
//  "params": {name: value}, "schema": 1}
inline nlohmann::json gadget_json(const GadgetInstance& inst) {
    return nlohmann::json{{"graph", graph_json(inst.graph)},
                          {"roles", inst.roles},
                          {"params", inst.params},
                          {"schema", kJsonSchemaVersion}};
}

}  // namespace pforest
