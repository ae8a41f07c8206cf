#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

inline constexpr int kMaxMatchingVertices = 600;
inline constexpr long long kMaxMatchingWeight = 1'000'000;

namespace detail {

// Primal-dual blossom method for maximum weight matching in general graphs,
// O(n^3). Vertices are 1-based internally; ids above n_ denote contracted
// blossoms. Edge weights must be positive; a zero weight marks a non-edge.
class Blossom {
public:
    explicit Blossom(int n)
        : n_(n),
          size_(2 * n + 2),
          g_(size_, std::vector<Arc>(size_)),
          lab_(size_, 0),
          match_(size_, 0),
          slack_(size_, 0),
          st_(size_, 0),
          pa_(size_, 0),
          s_(size_, 0),
          vis_(size_, 0),
          flower_(size_),
          flower_from_(size_, std::vector<int>(n + 1, 0)) {
        for (int u = 0; u < size_; ++u)
            for (int v = 0; v < size_; ++v) g_[u][v] = Arc{u, v, 0};
    }

    void add_edge(int u, int v, long long w) {
        g_[u + 1][v + 1].w = w;
        g_[v + 1][u + 1].w = w;
    }

    // Runs the search; returns total weight and the number of matched pairs.
    std::pair<long long, int> run() {
        std::fill(match_.begin(), match_.end(), 0);
        std::fill(st_.begin(), st_.end(), 0);
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
        }
        long long w_max = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        int pairs = 0;
        while (matching()) ++pairs;
        long long total = 0;
        for (int u = 1; u <= n_; ++u)
            if (match_[u] && match_[u] < u) total += g_[u][match_[u]].w;
        return {total, pairs};
    }

    // Post-run partner of u, or -1 when u is unmatched.
    int mate(int u) const { return match_[u + 1] - 1; }

private:
    struct Arc {
        int u = 0;
        int v = 0;
        long long w = 0;
    };

    long long e_delta(const Arc& e) const {
        return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
    }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x]))
            slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0)
                update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int sub : flower_[x]) q_push(sub);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int sub : flower_[x]) set_st(sub, b);
    }

    int get_pr(int b, int xr) {
        int pr = static_cast<int>(
            std::find(flower_[b].begin(), flower_[b].end(), xr) -
            flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u <= n_) return;
        Arc e = g_[u][v];
        int xr = flower_from_[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++vis_t_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == vis_t_) return u;
            vis_[u] = vis_t_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        if (n_x_ >= size_) throw error("matching: blossom id overflow");
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int xs : flower_[b]) set_st(xs, xs);
        int xr = flower_from_[b][g_[b][pa_[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (int i = pr + 1; i < static_cast<int>(flower_[b].size()); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Arc& e) {
        int u = st_[e.u];
        int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (e_delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            long long d = std::numeric_limits<long long>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, e_delta(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += d * 2;
                    else if (s_[b] == 1)
                        lab_[b] -= d * 2;
                }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(g_[slack_[x]][x]) == 0)
                    if (on_found_edge(g_[slack_[x]][x])) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_;
    int size_;
    int n_x_ = 0;
    int vis_t_ = 0;
    std::vector<std::vector<Arc>> g_;
    std::vector<long long> lab_;
    std::vector<int> match_;
    std::vector<int> slack_;
    std::vector<int> st_;
    std::vector<int> pa_;
    std::vector<int> s_;
    std::vector<int> vis_;
    std::deque<int> q_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
};

// Checks shape and bounds shared by the matrix-based matching entry points.
inline int validate_weight_matrix(const std::vector<std::vector<long long>>& w) {
    int n = static_cast<int>(w.size());
    if (n > kMaxMatchingVertices) throw error("matching: too many vertices");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(w[i].size()) != n)
            throw error("matching: weight matrix is not square");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (w[i][j] != w[j][i])
                throw error("matching: weight matrix is not symmetric");
            if (w[i][j] > kMaxMatchingWeight)
                throw error("matching: weight exceeds supported range");
        }
    }
    return n;
}

}  // namespace detail

struct Matching {
    long long weight = 0;
    std::vector<Edge> pairs;
};

// Maximum weight matching. Entries below zero mark non-edges; the diagonal
// is ignored. Zero-weight edges cannot change the total weight, so they may
// be absent from the reported matching.
inline Matching max_weight_matching(const std::vector<std::vector<long long>>& w) {
    int n = detail::validate_weight_matrix(w);
    detail::Blossom solver(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i][j] > 0) solver.add_edge(i, j, w[i][j]);
    Matching out;
    out.weight = solver.run().first;
    for (int u = 0; u < n; ++u) {
        int v = solver.mate(u);
        if (v > u) out.pairs.push_back({u, v});
    }
    return out;
}

// Minimum weight perfect matching. Entries below zero mark non-edges; the
// diagonal is ignored. Returns the total weight together with the matched
// pairs, or nullopt when no perfect matching exists. Implemented by flipping
// weights around a constant large enough that maximizing the flipped total
// first maximizes cardinality and then minimizes the original total.
inline std::optional<std::pair<long long, std::vector<Edge>>>
min_weight_perfect_matching(const std::vector<std::vector<long long>>& w) {
    int n = detail::validate_weight_matrix(w);
    if (n % 2 == 1) return std::nullopt;
    if (n == 0) return std::make_pair(0LL, std::vector<Edge>{});
    long long w_max = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i][j] >= 0) w_max = std::max(w_max, w[i][j]);
    long long big = w_max + 1;
    long long base = static_cast<long long>(n) * big + 1;
    detail::Blossom solver(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i][j] >= 0) solver.add_edge(i, j, base + big - w[i][j]);
    auto [flipped_total, pairs] = solver.run();
    (void)flipped_total;
    if (pairs * 2 != n) return std::nullopt;
    long long total = 0;
    std::vector<Edge> matching;
    for (int u = 0; u < n; ++u) {
        int v = solver.mate(u);
        if (v > u) {
            total += w[u][v];
            matching.push_back({u, v});
        }
    }
    return std::make_pair(total, matching);
}

}  // namespace pforest
