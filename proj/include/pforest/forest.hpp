#pragma once

// f-parity perfect forests: spanning forests whose trees are induced
// subgraphs of the host and whose vertex degrees match a prescribed parity
// target f. Existence for even-sum targets is constructive: XOR paths
// between odd-target vertices, then reduce the subgraph to an induced forest
// by deleting cycles and swapping chords for their tree paths, both of which
// preserve every degree parity.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

struct ParityTarget {
    std::vector<std::uint8_t> bits;

    ParityTarget() = default;
    explicit ParityTarget(std::vector<std::uint8_t> b) : bits(std::move(b)) {
        for (auto x : bits)
            if (x > 1) throw error("parity target: bits must be 0 or 1");
    }

    static ParityTarget zeros(int n) {
        return ParityTarget(std::vector<std::uint8_t>(n, 0));
    }
    static ParityTarget all_ones(int n) {
        return ParityTarget(std::vector<std::uint8_t>(n, 1));
    }
    static ParityTarget all_ones_except(int n, int v) {
        if (v < 0 || v >= n) throw error("parity target: vertex out of range");
        std::vector<std::uint8_t> b(n, 1);
        b[v] = 0;
        return ParityTarget(std::move(b));
    }

    int n() const { return static_cast<int>(bits.size()); }
    int operator[](int v) const { return bits[v]; }
    int sum() const { return std::accumulate(bits.begin(), bits.end(), 0); }
    bool even_sum() const { return sum() % 2 == 0; }

    friend bool operator==(const ParityTarget&, const ParityTarget&) = default;
};

inline std::vector<int> forest_degrees(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

// First check that fails, or none. Kinds, in the order they are checked:
//   "edge"   an edge not present in the host (or listed twice); witness u,v
//   "cycle"  the forest has a cycle; witness is the cycle vertex sequence
//   "chord"  a host edge inside one tree is missing from it; witness u,v
//   "parity" deg(v) mod 2 differs from f(v); witness v
struct ForestViolation {
    std::string kind;
    std::vector<int> vertices;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace detail

inline std::optional<ForestViolation> find_forest_violation(
    const Graph& g, const ParityTarget& f, const std::vector<Edge>& forest) {
    if (f.n() != g.n()) throw error("parity target length != vertex count");

    std::vector<Edge> sorted = forest;
    for (auto& e : sorted) e = make_edge(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto [u, v] = sorted[i];
        if (g.edge_index(u, v) < 0 || (i > 0 && sorted[i] == sorted[i - 1]))
            return ForestViolation{"edge", {u, v}};
    }

    detail::UnionFind uf(g.n());
    std::vector<std::vector<int>> partial_adj(g.n());
    for (auto [u, v] : sorted) {
        if (!uf.unite(u, v)) {
            // Cycle closed by (u,v): walk u -> v through edges added so far.
            std::vector<int> par(g.n(), -2);
            par[u] = -1;
            std::vector<int> queue{u};
            for (std::size_t qi = 0; qi < queue.size() && par[v] == -2; ++qi)
                for (int w : partial_adj[queue[qi]])
                    if (par[w] == -2) {
                        par[w] = queue[qi];
                        queue.push_back(w);
                    }
            std::vector<int> cyc;
            for (int x = v; x != -1; x = par[x]) cyc.push_back(x);
            std::reverse(cyc.begin(), cyc.end());
            return ForestViolation{"cycle", cyc};
        }
        partial_adj[u].push_back(v);
        partial_adj[v].push_back(u);
    }

    std::vector<char> in_forest(g.m(), 0);
    for (auto [u, v] : sorted) in_forest[g.edge_index(u, v)] = 1;
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges()[i];
        if (!in_forest[i] && uf.find(u) == uf.find(v))
            return ForestViolation{"chord", {u, v}};
    }

    auto deg = forest_degrees(g.n(), sorted);
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] % 2 != f[v]) return ForestViolation{"parity", {v}};
    return std::nullopt;
}

inline bool is_f_parity_forest(const Graph& g, const ParityTarget& f,
                               const std::vector<Edge>& forest) {
    return !find_forest_violation(g, f, forest).has_value();
}

// Shortest path between two vertices of the same component, as a vertex
// sequence; neighbors are scanned in ascending order.
inline std::vector<int> bfs_path(const Graph& g, int a, int b) {
    std::vector<int> par(g.n(), -2);
    par[a] = -1;
    std::vector<int> queue{a};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (v == b) break;
        for (int w : g.neighbors(v))
            if (par[w] == -2) {
                par[w] = v;
                queue.push_back(w);
            }
    }
    if (par[b] == -2) throw error("bfs_path: endpoints in different components");
    std::vector<int> path;
    for (int x = b; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Spanning subgraph whose degree parities match f, built by XOR-ing one path
// between consecutive odd-target vertices (ascending) of each component.
// Each path flips the parity of exactly its two endpoints, so after pairing
// all odd-target vertices every parity is met. Requires an even target sum
// in every component.
inline std::vector<Edge> xor_paths_subgraph(const Graph& g,
                                            const ParityTarget& f) {
    if (f.n() != g.n()) throw error("parity target length != vertex count");
    std::vector<char> in(g.m(), 0);
    for (const auto& comp : connected_components(g)) {
        std::vector<int> odd;
        for (int v : comp)
            if (f[v]) odd.push_back(v);
        if (odd.size() % 2 != 0) throw infeasible("component-odd-sum");
        for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
            auto path = bfs_path(g, odd[i], odd[i + 1]);
            for (std::size_t j = 0; j + 1 < path.size(); ++j)
                in[g.edge_index(path[j], path[j + 1])] ^= 1;
        }
    }
    std::vector<Edge> out;
    for (int i = 0; i < g.m(); ++i)
        if (in[i]) out.push_back(g.edges()[i]);
    return out;
}

namespace detail {

// A cycle in the subgraph selected by `in`, as edge indices, or empty. DFS
// roots and neighbors ascend, so the result is deterministic.
inline std::vector<int> find_subgraph_cycle(const Graph& g,
                                            const std::vector<char>& in) {
    const int n = g.n();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < g.m(); ++i)
        if (in[i]) {
            auto [u, v] = g.edges()[i];
            adj[u].push_back({v, i});
            adj[v].push_back({u, i});
        }
    std::vector<int> parent_v(n, -1), parent_e(n, -1);
    std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 done
    struct Frame {
        int v;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        std::vector<Frame> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            if (fr.next < adj[v].size()) {
                auto [w, eidx] = adj[v][fr.next++];
                if (eidx == parent_e[v]) continue;
                if (state[w] == 1) {
                    // Back edge to an ancestor: cycle w ... v plus (v,w).
                    std::vector<int> cyc{eidx};
                    for (int x = v; x != w; x = parent_v[x])
                        cyc.push_back(parent_e[x]);
                    return cyc;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    parent_v[w] = v;
                    parent_e[w] = eidx;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

// Unique tree path between a and b in the forest selected by `in`, as edge
// indices.
inline std::vector<int> subgraph_tree_path(const Graph& g,
                                           const std::vector<char>& in, int a,
                                           int b) {
    const int n = g.n();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < g.m(); ++i)
        if (in[i]) {
            auto [u, v] = g.edges()[i];
            adj[u].push_back({v, i});
            adj[v].push_back({u, i});
        }
    std::vector<int> par_v(n, -2), par_e(n, -1);
    par_v[a] = -1;
    std::vector<int> queue{a};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (auto [w, eidx] : adj[queue[qi]])
            if (par_v[w] == -2) {
                par_v[w] = queue[qi];
                par_e[w] = eidx;
                queue.push_back(w);
            }
    if (par_v[b] == -2) throw error("subgraph_tree_path: disconnected endpoints");
    std::vector<int> path;
    for (int x = b; x != a; x = par_v[x]) path.push_back(par_e[x]);
    return path;
}

}  // namespace detail

// Reduce a spanning subgraph to an induced forest without changing any
// degree parity. Deleting a cycle drops every cycle vertex by exactly two;
// swapping a chord for its tree path drops the interior vertices by two and
// leaves the chord endpoints unchanged. Both strictly shrink the edge set,
// so the loop terminates. Cycles are removed first; chords are then handled
// in ascending host edge order.
inline std::vector<Edge> minimize_to_forest(const Graph& g,
                                            const std::vector<Edge>& subgraph) {
    std::vector<char> in(g.m(), 0);
    for (auto [u, v] : subgraph) {
        int idx = g.edge_index(u, v);
        if (idx < 0) throw error("minimize_to_forest: edge not in host");
        if (in[idx]) throw error("minimize_to_forest: duplicate edge");
        in[idx] = 1;
    }
    while (true) {
        auto cyc = detail::find_subgraph_cycle(g, in);
        if (!cyc.empty()) {
            for (int idx : cyc) in[idx] = 0;
            continue;
        }
        detail::UnionFind uf(g.n());
        for (int i = 0; i < g.m(); ++i)
            if (in[i]) uf.unite(g.edges()[i].first, g.edges()[i].second);
        int chord = -1;
        for (int i = 0; i < g.m() && chord < 0; ++i) {
            auto [u, v] = g.edges()[i];
            if (!in[i] && uf.find(u) == uf.find(v)) chord = i;
        }
        if (chord < 0) break;
        auto [u, v] = g.edges()[chord];
        for (int idx : detail::subgraph_tree_path(g, in, u, v)) in[idx] = 0;
        in[chord] = 1;
    }
    std::vector<Edge> out;
    for (int i = 0; i < g.m(); ++i)
        if (in[i]) out.push_back(g.edges()[i]);
    return out;
}

// An f-parity perfect forest of g, or none. One exists exactly when every
// component's target sum is even; the graph may be disconnected.
inline std::optional<std::vector<Edge>> exists_f_parity_forest(
    const Graph& g, const ParityTarget& f) {
    if (f.n() != g.n()) throw error("parity target length != vertex count");
    for (const auto& comp : connected_components(g)) {
        int s = 0;
        for (int v : comp) s += f[v];
        if (s % 2 != 0) return std::nullopt;
    }
    return minimize_to_forest(g, xor_paths_subgraph(g, f));
}

}  // namespace pforest
