#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"
#include "pforest/matching.hpp"

namespace pforest {

// Smallest f-parity perfect forest via a weighted matching reduction, or
// nullopt when some component has an odd target sum.
//
// The auxiliary graph replaces each vertex v_i by a copy set X_i whose size
// is n or n-1, chosen so that |X_i| = f(v_i) (mod 2). Copies in different
// sets are adjacent with weight one exactly when the underlying vertices are
// adjacent; inside each set a zero-weight matching pairs consecutive copies,
// leaving the highest copy exposed when |X_i| is odd. A perfect matching
// must therefore use 2k_i + f(v_i) cross edges at X_i for some k_i >= 0, so
// minimum matching weight equals the minimum size of a subgraph whose degree
// parities meet f, and any such minimum is a perfect forest.
inline std::optional<std::vector<Edge>> min_parity_forest(const Graph& g,
                                                          const ParityTarget& f) {
    if (f.n() != g.n()) throw error("min forest: target length mismatch");
    for (const auto& comp : connected_components(g)) {
        int sum = 0;
        for (int v : comp) sum += f[v];
        if (sum % 2 != 0) return std::nullopt;
    }
    int n = g.n();
    if (n == 0) return std::vector<Edge>{};

    std::vector<int> size(n), offset(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        size[i] = (n % 2 == f[i] % 2) ? n : n - 1;
        offset[i + 1] = offset[i] + size[i];
    }
    int aux_n = offset[n];
    if (aux_n > kMaxMatchingVertices)
        throw error("min forest: graph too large for the matching reduction");

    std::vector<std::vector<long long>> w(aux_n,
                                          std::vector<long long>(aux_n, -1));
    for (int i = 0; i < n; ++i)
        for (int a = offset[i] + 1; a < offset[i + 1]; a += 2)
            w[a - 1][a] = w[a][a - 1] = 0;
    for (auto [u, v] : g.edges())
        for (int a = offset[u]; a < offset[u + 1]; ++a)
            for (int b = offset[v]; b < offset[v + 1]; ++b)
                w[a][b] = w[b][a] = 1;

    auto matched = min_weight_perfect_matching(w);
    if (!matched)
        throw error("min forest: auxiliary graph lost its perfect matching");

    std::vector<int> owner(aux_n);
    for (int i = 0; i < n; ++i)
        std::fill(owner.begin() + offset[i], owner.begin() + offset[i + 1], i);
    std::map<Edge, int> multiplicity;
    for (auto [a, b] : matched->second) {
        int i = owner[a];
        int j = owner[b];
        if (i != j) ++multiplicity[make_edge(i, j)];
    }
    std::vector<Edge> forest;
    for (auto [e, count] : multiplicity)
        if (count % 2 == 1) forest.push_back(e);
    if (find_forest_violation(g, f, forest))
        throw error("min forest: extracted subgraph fails verification");
    return forest;
}

}  // namespace pforest
