#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pforest/matching.hpp"
#include "pforest/oracle.hpp"

using pforest::Edge;

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix empty_matrix(int n) { return Matrix(n, std::vector<long long>(n, -1)); }

void set_edge(Matrix& w, int a, int b, long long x) { w[a][b] = w[b][a] = x; }

Matrix random_matrix(std::mt19937& rng, int n, double edge_prob) {
    Matrix w = empty_matrix(n);
    std::bernoulli_distribution keep(edge_prob);
    std::uniform_int_distribution<long long> weight(0, 100);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng)) set_edge(w, i, j, weight(rng));
    return w;
}

// Reference maximum weight matching by direct recursion over the first
// uncovered vertex: skip it or match it to any admissible partner.
long long brute_max_weight(const Matrix& w, std::vector<bool>& used, int from) {
    int n = static_cast<int>(w.size());
    int u = from;
    while (u < n && used[u]) ++u;
    if (u == n) return 0;
    used[u] = true;
    long long best = brute_max_weight(w, used, u + 1);
    for (int v = u + 1; v < n; ++v) {
        if (used[v] || w[u][v] < 0) continue;
        used[v] = true;
        best = std::max(best, w[u][v] + brute_max_weight(w, used, u + 1));
        used[v] = false;
    }
    used[u] = false;
    return best;
}

long long brute_max_weight(const Matrix& w) {
    std::vector<bool> used(w.size(), false);
    return brute_max_weight(w, used, 0);
}

void check_valid_perfect(const Matrix& w, long long total,
                         const std::vector<Edge>& pairs) {
    int n = static_cast<int>(w.size());
    std::vector<bool> seen(n, false);
    long long sum = 0;
    for (auto [u, v] : pairs) {
        REQUIRE(u < v);
        REQUIRE_FALSE(seen[u]);
        REQUIRE_FALSE(seen[v]);
        seen[u] = seen[v] = true;
        REQUIRE(w[u][v] >= 0);
        sum += w[u][v];
    }
    REQUIRE(static_cast<int>(pairs.size()) * 2 == n);
    REQUIRE(sum == total);
}

}  // namespace

TEST_CASE("matching hand cases") {
    SECTION("single edge") {
        Matrix w = empty_matrix(2);
        set_edge(w, 0, 1, 7);
        REQUIRE(pforest::max_weight_matching(w).weight == 7);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 7);
        REQUIRE(pm->second == std::vector<Edge>{{0, 1}});
    }
    SECTION("path separates maximum weight from perfect") {
        Matrix w = empty_matrix(4);
        set_edge(w, 0, 1, 10);
        set_edge(w, 1, 2, 100);
        set_edge(w, 2, 3, 10);
        REQUIRE(pforest::max_weight_matching(w).weight == 100);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 20);
        REQUIRE(pm->second == std::vector<Edge>{{0, 1}, {2, 3}});
    }
    SECTION("four-cycle picks the cheaper alternation") {
        Matrix w = empty_matrix(4);
        set_edge(w, 0, 1, 1);
        set_edge(w, 1, 2, 2);
        set_edge(w, 2, 3, 3);
        set_edge(w, 0, 3, 4);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 4);
        REQUIRE(pm->second == std::vector<Edge>{{0, 1}, {2, 3}});
    }
    SECTION("star has no perfect matching") {
        Matrix w = empty_matrix(4);
        set_edge(w, 0, 1, 1);
        set_edge(w, 0, 2, 1);
        set_edge(w, 0, 3, 1);
        REQUIRE_FALSE(pforest::min_weight_perfect_matching(w).has_value());
    }
    SECTION("zero-weight edges still count for perfection") {
        Matrix w = empty_matrix(4);
        set_edge(w, 0, 1, 0);
        set_edge(w, 1, 2, 0);
        set_edge(w, 2, 3, 0);
        set_edge(w, 0, 3, 0);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 0);
        check_valid_perfect(w, pm->first, pm->second);
    }
    SECTION("odd order and empty input") {
        REQUIRE_FALSE(pforest::min_weight_perfect_matching(empty_matrix(3)).has_value());
        auto none = pforest::min_weight_perfect_matching(empty_matrix(0));
        REQUIRE(none.has_value());
        REQUIRE(none->first == 0);
        REQUIRE(none->second.empty());
    }
    SECTION("triangle plus pendant needs the blossom step") {
        // Vertices 0,1,2 form a triangle, 3 hangs off 2. The only perfect
        // matching is {01, 23} even though 01 is the heaviest edge to avoid
        // greedily.
        Matrix w = empty_matrix(4);
        set_edge(w, 0, 1, 90);
        set_edge(w, 1, 2, 1);
        set_edge(w, 0, 2, 1);
        set_edge(w, 2, 3, 50);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 140);
        REQUIRE(pm->second == std::vector<Edge>{{0, 1}, {2, 3}});
    }
}

TEST_CASE("matching input validation") {
    Matrix ragged{{-1, 1}, {1, -1, 2}};
    REQUIRE_THROWS_AS(pforest::max_weight_matching(ragged), pforest::error);
    Matrix skew{{-1, 1}, {2, -1}};
    REQUIRE_THROWS_AS(pforest::min_weight_perfect_matching(skew), pforest::error);
    Matrix huge = empty_matrix(2);
    set_edge(huge, 0, 1, pforest::kMaxMatchingWeight + 1);
    REQUIRE_THROWS_AS(pforest::max_weight_matching(huge), pforest::error);
}

TEST_CASE("maximum weight matching agrees with direct recursion") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Matrix w = random_matrix(rng, n, 0.5);
        auto got = pforest::max_weight_matching(w);
        REQUIRE(got.weight == brute_max_weight(w));
        long long sum = 0;
        std::vector<bool> seen(n, false);
        for (auto [u, v] : got.pairs) {
            REQUIRE_FALSE(seen[u]);
            REQUIRE_FALSE(seen[v]);
            seen[u] = seen[v] = true;
            REQUIRE(w[u][v] >= 0);
            sum += w[u][v];
        }
        REQUIRE(sum == got.weight);
    }
}

TEST_CASE("minimum weight perfect matching agrees with brute force") {
    std::mt19937 rng(99177);
    int feasible = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Matrix w = random_matrix(rng, n, 0.6);
        auto fast = pforest::min_weight_perfect_matching(w);
        auto slow = pforest::bf_min_weight_perfect_matching(w);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            REQUIRE(fast->first == slow->first);
            check_valid_perfect(w, fast->first, fast->second);
            ++feasible;
        }
    }
    REQUIRE(feasible > 200);
}

TEST_CASE("matching at moderate scale") {
    SECTION("alternating cycle") {
        // Even cycle with weights alternating 1 and 100: the two perfect
        // matchings cost 50 and 5000.
        int n = 100;
        Matrix w = empty_matrix(n);
        for (int i = 0; i < n; ++i)
            set_edge(w, i, (i + 1) % n, i % 2 == 0 ? 1 : 100);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 50);
        check_valid_perfect(w, pm->first, pm->second);
    }
    SECTION("complete graph with uniform weights") {
        int n = 60;
        Matrix w = empty_matrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) set_edge(w, i, j, 3);
        auto pm = pforest::min_weight_perfect_matching(w);
        REQUIRE(pm.has_value());
        REQUIRE(pm->first == 90);
        check_valid_perfect(w, pm->first, pm->second);
    }
    SECTION("runs are deterministic") {
        std::mt19937 rng(31007);
        Matrix w = random_matrix(rng, 40, 0.3);
        auto a = pforest::min_weight_perfect_matching(w);
        auto b = pforest::min_weight_perfect_matching(w);
        REQUIRE(a == b);
    }
}
