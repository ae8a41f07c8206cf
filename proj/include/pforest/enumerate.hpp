#pragma once

// Exhaustive enumeration of non-isomorphic graphs on up to eight vertices,
// by single-vertex augmentation with canonical-form deduplication, plus the
// seeded random generators the property tests are driven by.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

constexpr int kMaxEnumerationVertices = 8;

// Bit index of the pair (i,j), i < j, in lexicographic pair order.
inline int pair_bit(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::uint64_t graph_mask(const Graph& g) {
    if (g.n() > kMaxEnumerationVertices) throw error("graph_mask: too many vertices");
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_bit(g.n(), u, v);
    return mask;
}

inline Graph mask_graph(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_bit(n, i, j) & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

namespace detail {

// Minimizes, over all vertex orderings, the packed sequence of adjacency
// columns (column k = adjacency of position k against positions 0..k-1,
// earlier columns more significant). Branch and bound on the shared prefix.
struct CanonicalSearch {
    int n = 0;
    std::array<std::uint32_t, 8> adj{};
    std::array<int, 9> shift{};
    std::array<int, 8> perm{};
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t prefix = 0;
    std::uint32_t used = 0;

    void run(int pos) {
        if (pos == n) {
            best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint32_t col = 0;
            for (int k = 0; k < pos; ++k)
                col |= ((adj[v] >> perm[k]) & 1u) << k;
            std::uint64_t p = prefix | (std::uint64_t{col} << shift[pos]);
            if (p > (best >> shift[pos] << shift[pos])) continue;
            perm[pos] = v;
            used |= 1u << v;
            std::uint64_t saved = prefix;
            prefix = p;
            run(pos + 1);
            prefix = saved;
            used &= ~(1u << v);
        }
    }
};

}  // namespace detail

// Canonical key: equal exactly for isomorphic graphs (n <= 8).
inline std::uint64_t canonical_signature(int n, std::uint64_t mask) {
    if (n > kMaxEnumerationVertices) throw error("canonical_signature: too many vertices");
    if (n <= 1) return 0;
    detail::CanonicalSearch s;
    s.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_bit(n, i, j) & 1) {
                s.adj[i] |= 1u << j;
                s.adj[j] |= 1u << i;
            }
    int total = n * (n - 1) / 2;
    int below = total;
    for (int pos = 0; pos < n; ++pos) {
        s.shift[pos] = below - pos >= 0 ? below - pos : 0;
        below -= pos;
    }
    s.run(0);
    return s.best;
}

inline std::uint64_t canonical_signature(const Graph& g) {
    return canonical_signature(g.n(), graph_mask(g));
}

// One representative mask per isomorphism class on n vertices, ascending.
inline std::vector<std::uint64_t> all_graph_masks(int n) {
    if (n < 0 || n > kMaxEnumerationVertices)
        throw error("all_graph_masks: vertex count out of range");
    std::vector<std::uint64_t> level{0};  // the empty graph on 0 or 1 vertices
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (std::uint64_t parent : level) {
            // Re-index the parent's pairs from k-1 to k vertices.
            std::uint64_t base = 0;
            for (int i = 0; i < k - 1; ++i)
                for (int j = i + 1; j < k - 1; ++j)
                    if (parent >> pair_bit(k - 1, i, j) & 1)
                        base |= std::uint64_t{1} << pair_bit(k, i, j);
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                std::uint64_t child = base;
                for (int i = 0; i < k - 1; ++i)
                    if (nb >> i & 1) child |= std::uint64_t{1} << pair_bit(k, i, k - 1);
                if (seen.insert(canonical_signature(k, child)).second)
                    next.push_back(child);
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    for (std::uint64_t mask : all_graph_masks(n)) out.push_back(mask_graph(n, mask));
    return out;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

// Uniform random recursive tree plus each remaining pair independently with
// probability extra_edge_prob. Always connected.
inline Graph random_connected_graph(std::mt19937& rng, int n,
                                    double extra_edge_prob) {
    if (n <= 0) throw error("random_connected_graph: need at least one vertex");
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.insert(make_edge(pick(rng), v));
    }
    std::bernoulli_distribution coin(extra_edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Edge e{u, v};
            if (!edges.count(e) && coin(rng)) edges.insert(e);
        }
    return Graph(n, {edges.begin(), edges.end()});
}

// Arbitrary random graph; components may be many.
inline Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
    if (n < 0) throw error("random_graph: negative vertex count");
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random parity target whose sum is even in every component, so an f-parity
// forest exists.
inline ParityTarget random_even_parity_target(std::mt19937& rng, const Graph& g) {
    std::vector<std::uint8_t> bits(g.n());
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() % 2);
    for (const auto& comp : connected_components(g)) {
        int s = 0;
        for (int v : comp) s += bits[v];
        if (s % 2 != 0) bits[comp.back()] ^= 1;
    }
    return ParityTarget(std::move(bits));
}

// Random parity target with even total sum but possibly odd component sums.
inline ParityTarget random_even_sum_target(std::mt19937& rng, int n) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() % 2);
    int s = 0;
    for (auto b : bits) s += b;
    if (s % 2 != 0 && n > 0) bits[n - 1] ^= 1;
    return ParityTarget(std::move(bits));
}

}  // namespace pforest
