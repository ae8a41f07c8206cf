#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pforest/enumerate.hpp"
#include "pforest/min_forest.hpp"
#include "pforest/oracle.hpp"

using pforest::Edge;
using pforest::Graph;
using pforest::ParityTarget;

namespace {

bool has_perfect_matching(const Graph& g) {
    std::vector<std::vector<long long>> w(g.n(),
                                          std::vector<long long>(g.n(), -1));
    for (auto [u, v] : g.edges()) w[u][v] = w[v][u] = 0;
    return pforest::bf_min_weight_perfect_matching(w).has_value();
}

}  // namespace

TEST_CASE("minimum forest fixtures") {
    SECTION("six-vertex sample has minimum size 4") {
        Graph sample(6, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
        auto best = pforest::min_parity_forest(sample, ParityTarget::all_ones(6));
        REQUIRE(best.has_value());
        REQUIRE(best->size() == 4);
        REQUIRE(pforest::is_f_parity_forest(sample, ParityTarget::all_ones(6), *best));
    }
    SECTION("zero target gives the empty forest") {
        Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        auto best = pforest::min_parity_forest(c5, ParityTarget::zeros(5));
        REQUIRE(best.has_value());
        REQUIRE(best->empty());
    }
    SECTION("single edge between the two odd vertices") {
        Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
        std::vector<std::uint8_t> bits{0, 1, 1, 0};
        auto best = pforest::min_parity_forest(path, ParityTarget(bits));
        REQUIRE(best.has_value());
        REQUIRE(*best == std::vector<Edge>{{1, 2}});
    }
    SECTION("odd component sum is infeasible") {
        Graph path(3, {{0, 1}, {1, 2}});
        std::vector<std::uint8_t> bits{1, 0, 0};
        REQUIRE_FALSE(pforest::min_parity_forest(path, ParityTarget(bits)).has_value());
        REQUIRE_FALSE(
            pforest::min_parity_forest(Graph(1, {}), ParityTarget::all_ones(1))
                .has_value());
    }
    SECTION("disconnected graphs work per component") {
        Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
        std::vector<std::uint8_t> bits{1, 1, 0, 1, 1, 0};
        auto best = pforest::min_parity_forest(two_triangles, ParityTarget(bits));
        REQUIRE(best.has_value());
        REQUIRE(*best == std::vector<Edge>{{0, 1}, {3, 4}});

        std::vector<std::uint8_t> lopsided{1, 0, 0, 1, 0, 0};
        REQUIRE_FALSE(
            pforest::min_parity_forest(two_triangles, ParityTarget(lopsided))
                .has_value());
    }
    SECTION("empty graph") {
        auto best = pforest::min_parity_forest(Graph(0, {}), ParityTarget::zeros(0));
        REQUIRE(best.has_value());
        REQUIRE(best->empty());
    }
}

TEST_CASE("minimum forest matches brute force on all small connected graphs") {
    std::mt19937 rng(7321);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& g : pforest::connected_graphs(n)) {
            std::vector<ParityTarget> targets;
            if (n % 2 == 0) targets.push_back(ParityTarget::all_ones(n));
            targets.push_back(pforest::random_even_parity_target(rng, g));
            for (const auto& f : targets) {
                auto fast = pforest::min_parity_forest(g, f);
                auto slow = pforest::bf_min_forest(g, f);
                REQUIRE(fast.has_value());
                REQUIRE(slow.has_value());
                REQUIRE(fast->size() == slow->size());
                REQUIRE(pforest::is_f_parity_forest(g, f, *fast));
            }
        }
    }
}

TEST_CASE("minimum forest matches brute force on random graphs") {
    std::mt19937 rng(90125);
    pforest::OracleOptions wide;
    wide.edge_cap = 30;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = pforest::random_connected_graph(rng, n, 0.3);
        if (g.m() > wide.edge_cap) continue;
        auto f = pforest::random_even_parity_target(rng, g);
        auto fast = pforest::min_parity_forest(g, f);
        auto slow = pforest::bf_min_forest(g, f, wide);
        REQUIRE(fast.has_value());
        REQUIRE(slow.has_value());
        REQUIRE(fast->size() == slow->size());
        REQUIRE(pforest::is_f_parity_forest(g, f, *fast));
    }
}

TEST_CASE("all-odd minimum hits half the order exactly for matchable graphs") {
    std::mt19937 rng(5150);
    int matchable = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 * (2 + static_cast<int>(rng() % 4));
        Graph g = pforest::random_connected_graph(rng, n, 0.25);
        auto best = pforest::min_parity_forest(g, ParityTarget::all_ones(n));
        REQUIRE(best.has_value());
        bool half = static_cast<int>(best->size()) == n / 2;
        REQUIRE(half == has_perfect_matching(g));
        matchable += half;
    }
    REQUIRE(matchable > 20);
    REQUIRE(matchable < 120);
}
