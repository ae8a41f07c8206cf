#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

// True when forest is a spanning forest of g with induced trees, no isolated
// vertex, and exactly one vertex of even degree.
inline bool is_proper_one_perfect_forest(const Graph& g,
                                         const std::vector<Edge>& forest) {
    auto deg = forest_degrees(g.n(), forest);
    int even_count = 0;
    std::vector<std::uint8_t> bits(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (deg[v] == 0) return false;
        bits[v] = static_cast<std::uint8_t>(deg[v] % 2);
        even_count += deg[v] % 2 == 0;
    }
    if (even_count != 1) return false;
    return !find_forest_violation(g, ParityTarget(std::move(bits)), forest);
}

// 1-perfect forest of a connected odd-order graph with the even-degree
// vertex pinned at x: attach a pendant to x, take an all-odd forest of the
// grown graph, and drop the pendant edge again.
inline std::vector<Edge> one_perfect_forest(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw error("one forest: vertex out of range");
    if (g.n() % 2 == 0) throw error("one forest: order must be odd");
    if (!is_connected(g)) throw error("one forest: graph must be connected");
    std::vector<Edge> grown_edges = g.edges();
    grown_edges.push_back({x, g.n()});
    Graph grown(g.n() + 1, grown_edges);
    auto full = exists_f_parity_forest(grown, ParityTarget::all_ones(g.n() + 1));
    if (!full) throw error("one forest: augmented graph became infeasible");
    std::vector<Edge> forest;
    for (auto e : *full)
        if (e.second < g.n()) forest.push_back(e);
    if (forest.size() + 1 != full->size())
        throw error("one forest: pendant edge was not used");
    if (find_forest_violation(g, ParityTarget::all_ones_except(g.n(), x), forest))
        throw error("one forest: result fails verification");
    return forest;
}

// Membership in the family of connected graphs whose blocks are all complete
// graphs of odd order. Disconnected graphs are outside the family.
inline bool is_class_B(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const auto& block : block_decomposition(g).blocks) {
        if (block.size() % 2 == 0) return false;
        if (!is_complete(g, block)) return false;
    }
    return true;
}

// For an edge xy of an even-order graph with g-{x,y} connected: a vertex
// whose deletion leaves a graph outside the complete-odd-block family,
// checking x first, or nullopt when both deletions land inside it (which
// forces N[x] = N[y]).
inline std::optional<int> deletable_endpoint(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw error("block witness: xy must be an edge");
    if (!is_class_B(delete_vertices(g, {x}).graph)) return x;
    if (!is_class_B(delete_vertices(g, {y}).graph)) return y;
    return std::nullopt;
}

namespace detail {

inline std::vector<Edge> zero_perfect_forest(const Graph& g) {
    auto forest = exists_f_parity_forest(g, ParityTarget::all_ones(g.n()));
    if (!forest) throw error("one forest: even piece became infeasible");
    return *forest;
}

inline std::vector<Edge> map_edges(const std::vector<Edge>& edges,
                                   const VertexMap& map) {
    std::vector<Edge> out;
    for (auto [a, b] : edges)
        out.push_back(make_edge(map.old_of_new[a], map.old_of_new[b]));
    return out;
}

inline std::vector<int> complement_of(const Graph& g, const std::vector<int>& part) {
    std::vector<char> gone(g.n(), 0);
    for (int v : part) gone[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) rest.push_back(v);
    return rest;
}

inline std::vector<Edge> proper_one_rec(const Graph& g);

inline std::vector<Edge> checked_proper_one_rec(const Subgraph& sub) {
    auto forest = proper_one_rec(sub.graph);
    if (!is_proper_one_perfect_forest(sub.graph, forest))
        throw error("one forest: recursive result fails verification");
    return map_edges(forest, sub.map);
}

// Recursion for a proper 1-perfect forest; g is connected, of odd order
// n >= 3, and outside the complete-odd-block family.
inline std::vector<Edge> proper_one_rec(const Graph& g) {
    int n = g.n();
    if (n == 3) {
        if (g.m() != 2) throw error("one forest: three-vertex case is not a path");
        return g.edges();
    }

    auto cuts = cut_vertices(g);
    if (!cuts.empty()) {
        // A cut vertex whose removal leaves an even component: recurse on
        // whichever side stays outside the family and pin the other side's
        // even-degree vertex at the cut.
        for (int x : cuts) {
            auto removed = delete_vertices(g, {x});
            for (const auto& comp : connected_components(removed.graph)) {
                if (comp.size() % 2 != 0) continue;
                std::vector<int> side1;
                for (int z : comp) side1.push_back(removed.map.old_of_new[z]);
                side1.push_back(x);
                auto sub1 = induced_subgraph(g, side1);
                std::vector<int> side2 = complement_of(g, side1);
                side2.push_back(x);
                auto sub2 = induced_subgraph(g, side2);
                std::vector<Edge> fi, fj;
                if (!is_class_B(sub1.graph)) {
                    fi = checked_proper_one_rec(sub1);
                    fj = map_edges(
                        one_perfect_forest(sub2.graph, sub2.map.new_of_old[x]),
                        sub2.map);
                } else if (!is_class_B(sub2.graph)) {
                    fi = checked_proper_one_rec(sub2);
                    fj = map_edges(
                        one_perfect_forest(sub1.graph, sub1.map.new_of_old[x]),
                        sub1.map);
                } else {
                    throw error("one forest: both cut sides fell in the family");
                }
                fi.insert(fi.end(), fj.begin(), fj.end());
                std::sort(fi.begin(), fi.end());
                return fi;
            }
        }
        // All components at every cut vertex are odd: both sides of the
        // first cut are even-order, and two all-odd forests meet at the cut
        // vertex, which becomes the unique even-degree vertex.
        int x = cuts[0];
        auto removed = delete_vertices(g, {x});
        auto comp = connected_components(removed.graph)[0];
        std::vector<int> side1;
        for (int z : comp) side1.push_back(removed.map.old_of_new[z]);
        side1.push_back(x);
        auto sub1 = induced_subgraph(g, side1);
        std::vector<int> side2 = complement_of(g, side1);
        side2.push_back(x);
        auto sub2 = induced_subgraph(g, side2);
        auto forest = map_edges(zero_perfect_forest(sub1.graph), sub1.map);
        auto other = map_edges(zero_perfect_forest(sub2.graph), sub2.map);
        forest.insert(forest.end(), other.begin(), other.end());
        std::sort(forest.begin(), forest.end());
        return forest;
    }

    // Two-connected case: split along an induced three-vertex path.
    auto p = find_induced_p3(g);
    if (!p) throw error("one forest: no induced path in an incomplete graph");
    auto [p1, p2, p3] = *p;
    auto removed = delete_vertices(g, {p2, p3});
    std::vector<int> c1;
    for (const auto& comp : connected_components(removed.graph)) {
        bool hit = false;
        for (int z : comp)
            if (removed.map.old_of_new[z] == p1) hit = true;
        if (!hit) continue;
        for (int z : comp) c1.push_back(removed.map.old_of_new[z]);
        break;
    }

    if (c1.size() % 2 == 1) {
        // Odd component: pin its even-degree vertex at p1, cover the rest
        // with an all-odd forest, and tie p1 to p2 if it ended up isolated.
        auto subc = induced_subgraph(g, c1);
        auto f1_local = one_perfect_forest(subc.graph, subc.map.new_of_old[p1]);
        bool p1_isolated =
            forest_degrees(subc.graph.n(), f1_local)[subc.map.new_of_old[p1]] == 0;
        auto forest = map_edges(f1_local, subc.map);
        auto subr = induced_subgraph(g, complement_of(g, c1));
        auto rest = map_edges(zero_perfect_forest(subr.graph), subr.map);
        forest.insert(forest.end(), rest.begin(), rest.end());
        if (p1_isolated) forest.push_back(make_edge(p1, p2));
        std::sort(forest.begin(), forest.end());
        return forest;
    }

    // Even component: drop whichever of p2, p3 leaves the grown component
    // outside the family, recurse there, and cover the remainder.
    std::vector<int> grown = c1;
    grown.push_back(p2);
    grown.push_back(p3);
    auto gp = induced_subgraph(g, grown);
    auto witness =
        deletable_endpoint(gp.graph, gp.map.new_of_old[p2], gp.map.new_of_old[p3]);
    if (!witness) throw error("one forest: no witness for the even component");
    int dropped = gp.map.old_of_new[*witness];
    std::vector<int> side1 = c1;
    side1.push_back(dropped == p2 ? p3 : p2);
    auto sub1 = induced_subgraph(g, side1);
    auto forest = checked_proper_one_rec(sub1);
    auto sub2 = induced_subgraph(g, complement_of(g, side1));
    auto rest = map_edges(zero_perfect_forest(sub2.graph), sub2.map);
    forest.insert(forest.end(), rest.begin(), rest.end());
    std::sort(forest.begin(), forest.end());
    return forest;
}

}  // namespace detail

// Proper 1-perfect forest of a connected odd-order graph, or nullopt exactly
// when every block is a complete graph of odd order.
inline std::optional<std::vector<Edge>> proper_one_perfect_forest(const Graph& g) {
    if (g.n() % 2 == 0) throw error("proper one forest: order must be odd");
    if (g.n() < 3) throw error("proper one forest: at least three vertices required");
    if (!is_connected(g)) throw error("proper one forest: graph must be connected");
    if (is_class_B(g)) return std::nullopt;
    auto forest = detail::proper_one_rec(g);
    if (!is_proper_one_perfect_forest(g, forest))
        throw error("proper one forest: result fails verification");
    return forest;
}

}  // namespace pforest
