#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

struct CutReduction {
    Subgraph sub;    // reduced graph plus the mapping back to input ids
    Edge e;          // the avoided edge in reduced ids
    ParityTarget f;  // adjusted target in reduced ids
};

// Shrinks the instance at cut vertex x: keep the component of g-x holding
// e's endpoints, together with x itself. The target at x is reset so the
// kept piece has an even sum; the answer for (g, e, f) equals the answer
// for the reduced instance, and forests for the discarded pieces always
// exist and can be solved independently.
inline CutReduction reduce_at_cut_vertex(const Graph& g, Edge e,
                                         const ParityTarget& f, int x) {
    if (f.n() != g.n()) throw error("cut reduction: target length mismatch");
    if (!g.has_edge(e.first, e.second)) throw error("cut reduction: edge not in graph");
    auto removed = delete_vertices(g, {x});
    int anchor = e.first != x ? e.first : e.second;
    std::vector<int> keep;
    for (const auto& comp : connected_components(removed.graph)) {
        bool hit = false;
        for (int v : comp)
            if (removed.map.old_of_new[v] == anchor) hit = true;
        if (!hit) continue;
        for (int v : comp) keep.push_back(removed.map.old_of_new[v]);
        break;
    }
    int piece_sum = 0;
    for (int v : keep) piece_sum += f[v];
    keep.push_back(x);
    auto sub = induced_subgraph(g, keep);
    std::vector<std::uint8_t> bits(sub.graph.n(), 0);
    for (int i = 0; i < sub.graph.n(); ++i) {
        int old = sub.map.old_of_new[i];
        bits[i] = old == x ? static_cast<std::uint8_t>(piece_sum % 2) : f[old];
    }
    Edge mapped = make_edge(sub.map.new_of_old[e.first], sub.map.new_of_old[e.second]);
    return {std::move(sub), mapped, ParityTarget(std::move(bits))};
}

// Feasible case on a graph without cut vertices. When an endpoint of e has
// target zero it is deleted and the rest is solved directly; the deleted
// endpoint survives as an isolated vertex, so e is avoided. Otherwise both
// endpoints have target one and the sum is at least four: pick the lowest
// other vertex w with target one, route a (u,v)-path through w, grow a
// spanning tree around that path without raising w's degree past two, split
// the tree at w, give w to the side whose target sum is odd, and solve the
// two sides separately. u and v land on opposite sides, so no tree can use e.
inline std::vector<Edge> construct_2connected_case(const Graph& g, Edge e,
                                                   const ParityTarget& f) {
    if (f.sum() == 0) return {};
    auto [u, v] = e;
    if (f[u] == 0 || f[v] == 0) {
        int drop = f[u] == 0 ? u : v;
        auto rest = delete_vertices(g, {drop});
        std::vector<std::uint8_t> bits(rest.graph.n());
        for (int i = 0; i < rest.graph.n(); ++i)
            bits[i] = f[rest.map.old_of_new[i]];
        auto inner = exists_f_parity_forest(rest.graph, ParityTarget(std::move(bits)));
        if (!inner) throw error("avoid edge: endpoint deletion became infeasible");
        std::vector<Edge> forest;
        for (auto [a, b] : *inner)
            forest.push_back(make_edge(rest.map.old_of_new[a], rest.map.old_of_new[b]));
        std::sort(forest.begin(), forest.end());
        return forest;
    }

    int w = -1;
    for (int z = 0; z < g.n() && w < 0; ++z)
        if (z != u && z != v && f[z] == 1) w = z;
    if (w < 0) throw error("avoid edge: no third odd-target vertex");
    auto path = two_disjoint_paths_through(g, w, u, v);
    if (!path) throw error("avoid edge: no through-path in a graph without cut vertices");

    std::vector<int> tree_parent(g.n(), -1);
    std::vector<char> in_tree(g.n(), 0);
    std::deque<int> frontier;
    for (std::size_t i = 0; i < path->size(); ++i) {
        int z = (*path)[i];
        in_tree[z] = 1;
        if (i > 0) tree_parent[z] = (*path)[i - 1];
        frontier.push_back(z);
    }
    tree_parent[(*path)[0]] = -1;
    int covered = static_cast<int>(path->size());
    while (!frontier.empty()) {
        int t = frontier.front();
        frontier.pop_front();
        if (t == w) continue;
        for (int q : g.neighbors(t)) {
            if (in_tree[q]) continue;
            in_tree[q] = 1;
            tree_parent[q] = t;
            frontier.push_back(q);
            ++covered;
        }
    }
    if (covered != g.n())
        throw error("avoid edge: spanning tree growth stalled at the split vertex");

    // Children of w in the rooted tree hang off the u-side unless they are
    // w's path successor, so side membership follows the path split.
    std::vector<char> side(g.n(), 0);  // 1 = u side, 2 = v side
    auto path_pos = std::find(path->begin(), path->end(), w);
    std::vector<int> order;
    for (int z = 0; z < g.n(); ++z)
        if (z != w) order.push_back(z);
    // Assign sides by walking parents until reaching a path vertex.
    auto side_of = [&](int z) {
        while (std::find(path->begin(), path->end(), z) == path->end())
            z = tree_parent[z];
        if (z == w) throw error("avoid edge: split vertex gained a subtree");
        return std::find(path->begin(), path_pos, z) != path_pos ? 1 : 2;
    };
    for (int z : order) side[z] = static_cast<char>(side_of(z));

    int odd_side_sum = 0;
    for (int z : order)
        if (side[z] == 1) odd_side_sum += f[z];
    side[w] = odd_side_sum % 2 == 1 ? 1 : 2;

    std::vector<Edge> forest;
    for (int which = 1; which <= 2; ++which) {
        std::vector<int> members;
        for (int z = 0; z < g.n(); ++z)
            if (side[z] == which) members.push_back(z);
        auto part = induced_subgraph(g, members);
        std::vector<std::uint8_t> bits(part.graph.n());
        for (int i = 0; i < part.graph.n(); ++i)
            bits[i] = f[part.map.old_of_new[i]];
        auto inner = exists_f_parity_forest(part.graph, ParityTarget(std::move(bits)));
        if (!inner) throw error("avoid edge: side subgraph became infeasible");
        for (auto [a, b] : *inner)
            forest.push_back(make_edge(part.map.old_of_new[a], part.map.old_of_new[b]));
    }
    std::sort(forest.begin(), forest.end());
    return forest;
}

// Decides whether g has an f-parity perfect forest avoiding e, returning one
// when it exists and nullopt when it does not. Requires a connected graph
// and an even-sum target; the instance shrinks at cut vertices until the
// remainder has none, where the answer is no exactly when e's endpoints are
// the only vertices with target one.
inline std::optional<std::vector<Edge>> decide_avoid_edge(const Graph& g, Edge e,
                                                          const ParityTarget& f) {
    if (f.n() != g.n()) throw error("avoid edge: target length mismatch");
    if (!g.has_edge(e.first, e.second)) throw error("avoid edge: edge not in graph");
    if (f.sum() % 2 != 0) throw error("avoid edge: target sum is odd");
    if (!is_connected(g)) throw error("avoid edge: graph must be connected");

    std::vector<Edge> forest;
    Graph cur = g;
    Edge cur_e = e;
    ParityTarget cur_f = f;
    std::vector<int> to_input(g.n());
    for (int i = 0; i < g.n(); ++i) to_input[i] = i;

    for (;;) {
        auto cuts = cut_vertices(cur);
        if (cuts.empty()) {
            auto [u, v] = cur_e;
            if (cur_f[u] == 1 && cur_f[v] == 1 && cur_f.sum() == 2)
                return std::nullopt;
            for (auto [a, b] : construct_2connected_case(cur, cur_e, cur_f))
                forest.push_back(make_edge(to_input[a], to_input[b]));
            break;
        }
        int x = cuts[0];
        // Solve every discarded piece outright; only the piece holding e
        // constrains the answer.
        auto removed = delete_vertices(cur, {x});
        int anchor = cur_e.first != x ? cur_e.first : cur_e.second;
        for (const auto& comp : connected_components(removed.graph)) {
            std::vector<int> olds;
            bool hit = false;
            for (int z : comp) {
                int old = removed.map.old_of_new[z];
                olds.push_back(old);
                if (old == anchor) hit = true;
            }
            if (hit) continue;
            int piece_sum = 0;
            for (int old : olds) piece_sum += cur_f[old];
            olds.push_back(x);
            auto piece = induced_subgraph(cur, olds);
            std::vector<std::uint8_t> bits(piece.graph.n());
            for (int i = 0; i < piece.graph.n(); ++i) {
                int old = piece.map.old_of_new[i];
                bits[i] = old == x ? static_cast<std::uint8_t>(piece_sum % 2)
                                   : cur_f[old];
            }
            auto inner = exists_f_parity_forest(piece.graph, ParityTarget(std::move(bits)));
            if (!inner) throw error("avoid edge: split-off piece became infeasible");
            for (auto [a, b] : *inner)
                forest.push_back(make_edge(to_input[piece.map.old_of_new[a]],
                                           to_input[piece.map.old_of_new[b]]));
        }
        auto reduced = reduce_at_cut_vertex(cur, cur_e, cur_f, x);
        std::vector<int> next_map(reduced.sub.graph.n());
        for (int i = 0; i < reduced.sub.graph.n(); ++i)
            next_map[i] = to_input[reduced.sub.map.old_of_new[i]];
        cur = reduced.sub.graph;
        cur_e = reduced.e;
        cur_f = reduced.f;
        to_input = std::move(next_map);
    }

    std::sort(forest.begin(), forest.end());
    if (find_forest_violation(g, f, forest))
        throw error("avoid edge: assembled forest fails verification");
    if (std::find(forest.begin(), forest.end(), make_edge(e.first, e.second)) !=
        forest.end())
        throw error("avoid edge: assembled forest uses the avoided edge");
    return forest;
}

}  // namespace pforest
