#pragma once

// Brute-force reference implementations for every decision and optimization
// problem in the library, usable only at desk scale. The enumeration engine
// walks edge subsets depth-first and prunes three ways, each sound for
// f-parity perfect forests:
//   cycle    including an edge inside one component is never legal
//   chord    once two components merge, any other host edge between them is
//            doomed (included later: cycle; excluded: chord), so the merge
//            is refused unless the merging edge is the only one
//   parity   when a vertex's last incident edge is decided its degree parity
//            is final and must match the target
// The surviving leaves are exactly the f-parity perfect forests, emitted in
// ascending edge-mask order (bit i = host edge i).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pforest/cnf.hpp"
#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

struct OracleOptions {
    int edge_cap = 22;              // refuse hosts with more edges
    std::uint64_t node_budget = 0;  // DFS safety valve; 0 means unlimited
    std::vector<Edge> require;      // edges every forest must contain
    std::vector<Edge> forbid;       // edges no forest may contain
    int min_size = 0;               // emit only forests with >= this many edges
};

namespace detail {

struct ForestEnumerator {
    const Graph& g;
    const ParityTarget& f;
    const OracleOptions& opts;
    const std::function<bool(const std::vector<Edge>&)>& visit;

    std::vector<int> parent, comp_size;
    std::vector<int> deg_in, remaining;
    std::vector<char> in;
    std::vector<std::int8_t> forced;  // 0 free, 1 required, -1 forbidden
    std::uint64_t nodes = 0;
    bool stopped = false;

    ForestEnumerator(const Graph& g_, const ParityTarget& f_,
                     const OracleOptions& o,
                     const std::function<bool(const std::vector<Edge>&)>& v)
        : g(g_), f(f_), opts(o), visit(v) {}

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool run() {
        const int n = g.n(), m = g.m();
        if (f.n() != n) throw error("oracle: parity target length != vertex count");
        if (m > opts.edge_cap) throw error("oracle: edge cap exceeded");
        forced.assign(m, 0);
        for (auto [u, v] : opts.require) {
            int idx = g.edge_index(u, v);
            if (idx < 0) throw error("oracle: required edge not in host");
            forced[idx] = 1;
        }
        for (auto [u, v] : opts.forbid) {
            int idx = g.edge_index(u, v);
            if (idx < 0) throw error("oracle: forbidden edge not in host");
            if (forced[idx] == 1) throw error("oracle: edge both required and forbidden");
            forced[idx] = -1;
        }
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0 && f[v] != 0) return true;  // empty stream

        parent.resize(n);
        comp_size.assign(n, 1);
        for (int v = 0; v < n; ++v) parent[v] = v;
        deg_in.assign(n, 0);
        remaining.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            ++remaining[u];
            ++remaining[v];
        }
        in.assign(m, 0);
        rec(m - 1);
        return !stopped;
    }

    // Vertex parity is settled once no incident edge is undecided.
    bool parity_ok(int v) const {
        return remaining[v] > 0 || deg_in[v] % 2 == f[v];
    }

    void rec(int i) {
        if (stopped) return;
        if (opts.node_budget && ++nodes > opts.node_budget)
            throw error("oracle: node budget exceeded");
        if (i < 0) {
            std::vector<Edge> forest;
            for (int j = 0; j < g.m(); ++j)
                if (in[j]) forest.push_back(g.edges()[j]);
            if (static_cast<int>(forest.size()) >= opts.min_size)
                if (!visit(forest)) stopped = true;
            return;
        }
        auto [u, v] = g.edges()[i];

        // Even including every remaining undecided edge cannot reach min_size.
        int included = 0;
        for (int x : deg_in) included += x;
        included /= 2;
        if (included + i + 1 < opts.min_size) return;

        // Exclude branch first: masks ascend.
        if (forced[i] != 1 && find(u) != find(v)) {
            --remaining[u];
            --remaining[v];
            if (parity_ok(u) && parity_ok(v)) rec(i - 1);
            ++remaining[u];
            ++remaining[v];
        }
        if (stopped) return;

        // Include branch.
        if (forced[i] == -1) return;
        int ru = find(u), rv = find(v);
        if (ru == rv) return;
        for (int j = 0; j < g.m(); ++j) {
            if (j == i || in[j]) continue;
            int ra = find(g.edges()[j].first), rb = find(g.edges()[j].second);
            if ((ra == ru && rb == rv) || (ra == rv && rb == ru)) return;
        }
        if (comp_size[ru] < comp_size[rv]) std::swap(ru, rv);
        parent[rv] = ru;
        comp_size[ru] += comp_size[rv];
        in[i] = 1;
        ++deg_in[u];
        ++deg_in[v];
        --remaining[u];
        --remaining[v];
        if (parity_ok(u) && parity_ok(v)) rec(i - 1);
        ++remaining[u];
        ++remaining[v];
        --deg_in[u];
        --deg_in[v];
        in[i] = 0;
        comp_size[ru] -= comp_size[rv];
        parent[rv] = rv;
    }
};

}  // namespace detail

// Streams every f-parity perfect forest of g passing the option filters, in
// ascending edge-mask order. The visitor returns false to stop; the function
// returns false iff the visitor stopped the stream.
inline bool enumerate_parity_forests(
    const Graph& g, const ParityTarget& f, const OracleOptions& opts,
    const std::function<bool(const std::vector<Edge>&)>& visit) {
    detail::ForestEnumerator e(g, f, opts, visit);
    return e.run();
}

inline bool enumerate_parity_forests(
    const Graph& g, const ParityTarget& f,
    const std::function<bool(const std::vector<Edge>&)>& visit) {
    return enumerate_parity_forests(g, f, OracleOptions{}, visit);
}

inline std::vector<std::vector<Edge>> all_parity_forests(
    const Graph& g, const ParityTarget& f, const OracleOptions& opts = {}) {
    std::vector<std::vector<Edge>> out;
    enumerate_parity_forests(g, f, opts, [&](const std::vector<Edge>& forest) {
        out.push_back(forest);
        return true;
    });
    return out;
}

// Smallest f-parity perfect forest (first in stream order among ties), or
// none. Stops early once the degree-sum lower bound is met.
inline std::optional<std::vector<Edge>> bf_min_forest(const Graph& g,
                                                      const ParityTarget& f,
                                                      OracleOptions opts = {}) {
    int lower = (f.sum() + 1) / 2;
    std::optional<std::vector<Edge>> best;
    enumerate_parity_forests(g, f, opts, [&](const std::vector<Edge>& forest) {
        if (!best || forest.size() < best->size()) best = forest;
        return static_cast<int>(best->size()) > lower;
    });
    return best;
}

// Largest all-odd-degree perfect forest, or none.
inline std::optional<std::vector<Edge>> bf_max_zero_forest(
    const Graph& g, OracleOptions opts = {}) {
    auto f = ParityTarget::all_ones(g.n());
    std::optional<std::vector<Edge>> best;
    enumerate_parity_forests(g, f, opts, [&](const std::vector<Edge>& forest) {
        if (!best || forest.size() > best->size()) best = forest;
        return static_cast<int>(best->size()) < g.n() - 1;
    });
    return best;
}

inline std::optional<std::vector<Edge>> bf_exists_forest(
    const Graph& g, const ParityTarget& f, OracleOptions opts = {}) {
    std::optional<std::vector<Edge>> found;
    enumerate_parity_forests(g, f, opts, [&](const std::vector<Edge>& forest) {
        found = forest;
        return false;
    });
    return found;
}

inline std::optional<std::vector<Edge>> bf_exists_avoiding(
    const Graph& g, Edge e, const ParityTarget& f, OracleOptions opts = {}) {
    opts.forbid.push_back(e);
    return bf_exists_forest(g, f, opts);
}

inline std::optional<std::vector<Edge>> bf_exists_containing(
    const Graph& g, Edge e, const ParityTarget& f, OracleOptions opts = {}) {
    opts.require.push_back(e);
    return bf_exists_forest(g, f, opts);
}

// A 0-perfect forest with at least |V|-2 edges, or none. Such a forest has
// at most two trees: either the host itself is an all-odd spanning tree, or
// the vertex set splits into two induced all-odd-degree trees. Enumerates
// bipartitions with adjacency bitmasks.
inline std::optional<std::vector<Edge>> bf_two_tree_zero_forest(const Graph& g) {
    const int n = g.n();
    if (n > 26) throw error("bf_two_tree_zero_forest: vertex cap exceeded");
    if (n == 0) return std::vector<Edge>{};
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    auto part_ok = [&](std::uint32_t s) {
        int verts = 0, degsum = 0;
        for (int v = 0; v < n; ++v) {
            if (!(s >> v & 1)) continue;
            ++verts;
            int d = std::popcount(adj[v] & s);
            if (d % 2 == 0) return false;
            degsum += d;
        }
        if (degsum != 2 * (verts - 1)) return false;
        // Connected: bitmask flood fill from the lowest member.
        std::uint32_t start = s & (~s + 1), seen = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v] & s & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == s;
    };
    auto collect = [&](std::uint32_t s) {
        std::vector<Edge> forest;
        for (auto [u, v] : g.edges()) {
            bool su = s >> u & 1, sv = s >> v & 1;
            if (su == sv) forest.push_back({u, v});
        }
        return forest;
    };
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    if (part_ok(full)) return collect(full);
    for (std::uint32_t s = 1; s < full; s += 2)  // vertex 0 stays on one side
        if (part_ok(s) && part_ok(full & ~s)) return collect(s);
    return std::nullopt;
}

// First induced cycle through both marked edges, as a vertex sequence with
// the e1 endpoints first and last, or none. Cycles are in bijection with
// induced paths between the endpoints of e1 whose only off-path adjacency
// is e1 itself.
inline std::optional<std::vector<int>> bf_induced_cycle_through(
    const Graph& g, Edge e1, Edge e2, int vertex_cap = 14) {
    if (g.n() > vertex_cap) throw error("bf_induced_cycle_through: vertex cap exceeded");
    e1 = make_edge(e1.first, e1.second);
    e2 = make_edge(e2.first, e2.second);
    if (g.edge_index(e1.first, e1.second) < 0 || g.edge_index(e2.first, e2.second) < 0)
        throw error("bf_induced_cycle_through: marked edge not in host");
    if (e1 == e2) throw error("bf_induced_cycle_through: marked edges must differ");
    const int a = e1.first, b = e1.second;

    std::vector<int> path{a};
    std::vector<char> on_path(g.n(), 0);
    on_path[a] = 1;
    std::optional<std::vector<int>> result;

    // Extending w must keep the path induced: w may touch only the last
    // vertex, except that the final vertex b is allowed its edge back to a.
    auto extend = [&](auto&& self, bool has_e2) -> bool {
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (result) return true;
            if (on_path[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) {
                if (g.has_edge(w, path[i]) && !(w == b && path[i] == a)) ok = false;
            }
            if (!ok) continue;
            Edge step = make_edge(last, w);
            bool has = has_e2 || step == e2;
            if (w == b) {
                if (path.size() >= 2 && has) {
                    path.push_back(b);
                    result = path;
                    return true;
                }
                continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            self(self, has);
            on_path[w] = 0;
            path.pop_back();
            if (result) return true;
        }
        return result.has_value();
    };
    extend(extend, false);
    return result;
}

// First induced path from s to t with at least min_edges edges, as a vertex
// sequence, or none. Exhaustive DFS over induced paths; neighbors scanned in
// ascending order.
inline std::optional<std::vector<int>> bf_induced_path_through(
    const Graph& g, int s, int t, int min_edges, int vertex_cap = 60) {
    if (g.n() > vertex_cap)
        throw error("bf_induced_path_through: vertex cap exceeded");
    if (s < 0 || s >= g.n() || t < 0 || t >= g.n() || s == t)
        throw error("bf_induced_path_through: bad endpoints");

    std::vector<int> path{s};
    std::vector<char> on_path(g.n(), 0);
    on_path[s] = 1;
    std::optional<std::vector<int>> result;

    // Extending w must keep the path induced: w may touch only the current
    // last vertex. Paths never continue through t, so t is checked as a
    // terminal extension only.
    auto extend = [&](auto&& self) -> void {
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (result) return;
            if (on_path[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) ok = false;
            if (!ok) continue;
            if (w == t) {
                if (static_cast<int>(path.size()) >= min_edges) {
                    path.push_back(t);
                    result = path;
                    return;
                }
                continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            self(self);
            on_path[w] = 0;
            path.pop_back();
            if (result) return;
        }
    };
    extend(extend);
    return result;
}

// Truth-table 3-SAT. First satisfying assignment in ascending mask order
// (variable 1 is the least significant bit), or none.
inline std::optional<Assignment> bf_satisfiable(const CnfInstance& cnf) {
    cnf.validate();
    if (cnf.num_vars > 20) throw error("bf_satisfiable: variable cap exceeded");
    for (std::uint32_t mask = 0; mask < (1u << cnf.num_vars); ++mask) {
        Assignment a(cnf.num_vars);
        for (int i = 0; i < cnf.num_vars; ++i) a[i] = mask >> i & 1;
        if (satisfies(cnf, a)) return a;
    }
    return std::nullopt;
}

inline std::optional<Assignment> bf_nae_satisfiable(const CnfInstance& cnf) {
    cnf.validate();
    if (cnf.num_vars > 20) throw error("bf_nae_satisfiable: variable cap exceeded");
    for (std::uint32_t mask = 0; mask < (1u << cnf.num_vars); ++mask) {
        Assignment a(cnf.num_vars);
        for (int i = 0; i < cnf.num_vars; ++i) a[i] = mask >> i & 1;
        if (nae_satisfies(cnf, a)) return a;
    }
    return std::nullopt;
}

// Maximum independent set by subset enumeration; first maximum in ascending
// mask order.
inline std::vector<int> bf_max_independent_set(const Graph& g) {
    const int n = g.n();
    if (n > 20) throw error("bf_max_independent_set: vertex cap exceeded");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::uint32_t best = 0;
    int best_size = 0;
    std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t s = 0; s <= full && n > 0; ++s) {
        if (std::popcount(s) <= best_size) continue;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((s >> v & 1) && (adj[v] & s)) independent = false;
        if (independent) {
            best = s;
            best_size = std::popcount(s);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (best >> v & 1) out.push_back(v);
    return out;
}

// Minimum-weight perfect matching on explicit edge weights by recursive
// pairing of the lowest unmatched vertex; weight[u][v] < 0 marks a non-edge.
// Returns total weight and the matching, or none if no perfect matching.
inline std::optional<std::pair<long long, std::vector<Edge>>>
bf_min_weight_perfect_matching(const std::vector<std::vector<long long>>& w) {
    const int n = static_cast<int>(w.size());
    if (n > 12) throw error("bf_min_weight_perfect_matching: vertex cap exceeded");
    for (const auto& row : w)
        if (static_cast<int>(row.size()) != n)
            throw error("bf_min_weight_perfect_matching: weight matrix not square");
    if (n % 2 != 0) return std::nullopt;

    std::optional<long long> best;
    std::vector<Edge> best_matching, current;
    std::vector<char> matched(n, 0);
    auto rec = [&](auto&& self, int matched_count, long long weight) -> void {
        if (matched_count == n) {
            if (!best || weight < *best) {
                best = weight;
                best_matching = current;
            }
            return;
        }
        int u = 0;
        while (matched[u]) ++u;
        matched[u] = 1;
        for (int v = u + 1; v < n; ++v) {
            if (matched[v] || w[u][v] < 0) continue;
            matched[v] = 1;
            current.push_back({u, v});
            self(self, matched_count + 2, weight + w[u][v]);
            current.pop_back();
            matched[v] = 0;
        }
        matched[u] = 0;
    };
    rec(rec, 0, 0);
    if (!best) return std::nullopt;
    return std::make_pair(*best, best_matching);
}

}  // namespace pforest
