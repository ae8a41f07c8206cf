#pragma once

// Hardness-gadget builders with full vertex-role metadata, plus both witness
// directions for each reduction:
//
//   nae_*             not-all-equal 3-SAT  <->  0-perfect forests with
//                     |V|-2 edges in a chain of near-clique blocks
//   indset_*          independent set of size k-2  <->  long induced paths /
//                     large 0-perfect forests in a doubled-copy graph
//   induced_cycle_*   3-SAT  <->  induced cycles through two marked edges
//   containing_edge_instance
//                     induced cycle through two marked edges  <->  0-perfect
//                     forest containing a marked edge
//
// Vertex ids follow a fixed documented layout (variable blocks first in index
// order, then pendant leaves ascending by attachment, then clause vertices)
// so serialized instances are byte-stable. Every converter validates the
// witness it receives and re-verifies the witness it produces.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pforest/cnf.hpp"
#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

struct GadgetInstance {
    Graph graph;
    std::map<std::string, int> roles;   // label -> vertex id, bijective
    std::map<std::string, int> params;  // construction constants (n, m, k, marked edges)
};

namespace detail {

inline void add_role(std::map<std::string, int>& roles, const std::string& label,
                     int id) {
    if (!roles.emplace(label, id).second)
        throw error("gadget: duplicate role label " + label);
}

inline void check_roles_cover(const GadgetInstance& inst) {
    std::vector<char> seen(inst.graph.n(), 0);
    for (const auto& [label, id] : inst.roles) {
        if (id < 0 || id >= inst.graph.n())
            throw error("gadget: role id out of range: " + label);
        if (seen[id]) throw error("gadget: two roles share a vertex: " + label);
        seen[id] = 1;
    }
    for (int v = 0; v < inst.graph.n(); ++v)
        if (!seen[v]) throw error("gadget: vertex without a role");
}

// A path given as a vertex sequence: pairwise distinct, consecutive vertices
// adjacent, and no other adjacencies among its vertices.
inline void check_induced_path(const Graph& g, const std::vector<int>& path,
                               const std::string& what) {
    if (path.size() < 2) throw error(what + ": path too short");
    for (int v : path)
        if (v < 0 || v >= g.n()) throw error(what + ": path vertex out of range");
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error(what + ": repeated path vertex");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw error(what + ": consecutive path vertices not adjacent");
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (g.has_edge(path[i], path[j]))
                throw error(what + ": path is not induced");
}

// A cycle given as a vertex sequence (closing edge implicit): pairwise
// distinct, cyclically consecutive vertices adjacent, no chords, and both
// marked edges among the cycle edges.
inline void check_induced_cycle(const Graph& g, const std::vector<int>& cyc,
                                Edge e1, Edge e2, const std::string& what) {
    const std::size_t len = cyc.size();
    if (len < 3) throw error(what + ": cycle too short");
    for (int v : cyc)
        if (v < 0 || v >= g.n()) throw error(what + ": cycle vertex out of range");
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error(what + ": repeated cycle vertex");
    std::set<Edge> cycle_edges;
    for (std::size_t i = 0; i < len; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % len];
        if (!g.has_edge(u, v))
            throw error(what + ": consecutive cycle vertices not adjacent");
        cycle_edges.insert(make_edge(u, v));
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            if (j == i + 1 || (i == 0 && j == len - 1)) continue;
            if (g.has_edge(cyc[i], cyc[j]))
                throw error(what + ": cycle has a chord");
        }
    if (!cycle_edges.count(make_edge(e1.first, e1.second)) ||
        !cycle_edges.count(make_edge(e2.first, e2.second)))
        throw error(what + ": cycle misses a marked edge");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Not-all-equal 3-SAT  ->  0-perfect forest with |V|-2 edges.
//
// Per variable i, a six-vertex block {x1,z1,y1,x2,z2,y2} carrying all edges
// except x1y1 and x2y2; consecutive blocks joined by the complete bipartite
// junction {y1,y2} x {x1,x2}; a pendant leaf on every block vertex except
// x1^1, x2^1, y1^n, y2^n; per clause j two vertices c_j, c_j' wired to y2^i
// for a positive literal on variable i and to y1^i for a negated one
// (repeated literals wire once). |V| = 12n - 4 + 2m.
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::array<const char*, 6> kNaeBlock = {"x1", "z1", "y1",
                                                         "x2", "z2", "y2"};

inline std::string nae_label(int i, int off) {
    return std::string(kNaeBlock[off]) + "^" + std::to_string(i);
}

}  // namespace detail

inline GadgetInstance nae_gadget(const CnfInstance& cnf) {
    cnf.validate();
    const int n = cnf.num_vars;
    const int m = static_cast<int>(cnf.clauses.size());
    if (n == 0 || m == 0) throw error("nae_gadget: empty cnf");

    std::map<std::string, int> roles;
    std::vector<Edge> edges;
    auto vb = [](int i, int off) { return 6 * (i - 1) + off; };

    for (int i = 1; i <= n; ++i) {
        for (int off = 0; off < 6; ++off)
            detail::add_role(roles, detail::nae_label(i, off), vb(i, off));
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                if ((a == 0 && b == 2) || (a == 3 && b == 5)) continue;
                edges.push_back(make_edge(vb(i, a), vb(i, b)));
            }
        if (i < n)
            for (int ya : {2, 5})
                for (int xb : {0, 3})
                    edges.push_back(make_edge(vb(i, ya), vb(i + 1, xb)));
    }

    const std::set<int> bare = {vb(1, 0), vb(1, 3), vb(n, 2), vb(n, 5)};
    int next = 6 * n;
    for (int v = 0; v < 6 * n; ++v) {
        if (bare.count(v)) continue;
        detail::add_role(roles, "pendant-of:" + detail::nae_label(v / 6 + 1, v % 6),
                         next);
        edges.push_back(make_edge(v, next));
        ++next;
    }

    for (int j = 1; j <= m; ++j) {
        int cj = next++;
        int cjp = next++;
        detail::add_role(roles, "c" + std::to_string(j), cj);
        detail::add_role(roles, "c" + std::to_string(j) + "'", cjp);
        std::set<int> targets;
        for (int lit : cnf.clauses[j - 1])
            targets.insert(vb(std::abs(lit), lit > 0 ? 5 : 2));
        for (int t : targets) {
            edges.push_back(make_edge(t, cj));
            edges.push_back(make_edge(t, cjp));
        }
    }

    if (next != 12 * n - 4 + 2 * m)
        throw error("nae_gadget: vertex count mismatch");
    GadgetInstance inst{Graph(next, std::move(edges)), std::move(roles),
                        {{"n", n}, {"m", m}}};
    detail::check_roles_cover(inst);
    return inst;
}

// The proof's two-tree forest for an assignment that not-all-equal-satisfies
// the source cnf: true variables route their {x1,z1,y1} row to the tree of
// x1^1, pendant leaves follow their neighbor, and each clause vertex joins
// the tree reached by exactly one of its three literal wires (counting
// repeated literals with multiplicity). Returns all same-tree edges, verified
// as a 0-perfect forest with |V|-2 edges.
inline std::vector<Edge> nae_forest_from_assignment(const CnfInstance& cnf,
                                                    const GadgetInstance& inst,
                                                    const Assignment& a) {
    cnf.validate();
    const int n = cnf.num_vars;
    const int m = static_cast<int>(cnf.clauses.size());
    if (static_cast<int>(a.size()) != n)
        throw error("nae witness: assignment length != variable count");
    if (!nae_satisfies(cnf, a))
        throw error("nae witness: assignment does not NAE-satisfy the cnf");

    const Graph& g = inst.graph;
    std::vector<int> side(g.n(), 0);
    for (int i = 1; i <= n; ++i) {
        int top = a[i - 1] ? 1 : 2;
        for (int off : {0, 1, 2}) side[6 * (i - 1) + off] = top;
        for (int off : {3, 4, 5}) side[6 * (i - 1) + off] = 3 - top;
    }
    for (int p = 6 * n; p < 12 * n - 4; ++p) side[p] = side[g.neighbors(p)[0]];
    for (int j = 1; j <= m; ++j) {
        int count1 = 0;
        for (int lit : cnf.clauses[j - 1]) {
            int wire = 6 * (std::abs(lit) - 1) + (lit > 0 ? 5 : 2);
            if (side[wire] == 1) ++count1;
        }
        // NAE-satisfied means the three wires split 1/2 across the trees.
        int minority = count1 == 1 ? 1 : 2;
        side[inst.roles.at("c" + std::to_string(j))] = minority;
        side[inst.roles.at("c" + std::to_string(j) + "'")] = minority;
    }

    std::vector<Edge> forest;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) forest.push_back({u, v});
    if (auto viol = find_forest_violation(g, ParityTarget::all_ones(g.n()), forest))
        throw error("nae witness: construction failed verification: " + viol->kind);
    if (static_cast<int>(forest.size()) != g.n() - 2)
        throw error("nae witness: unexpected forest size");
    return forest;
}

// Reads the truth assignment back off a verified 0-perfect forest with at
// least |V|-2 edges: variable i is true exactly when x1^i sits in the tree
// containing x1^1. The recovered assignment is checked against the cnf.
inline Assignment nae_assignment_from_forest(const CnfInstance& cnf,
                                             const GadgetInstance& inst,
                                             const std::vector<Edge>& forest) {
    cnf.validate();
    const Graph& g = inst.graph;
    if (find_forest_violation(g, ParityTarget::all_ones(g.n()), forest))
        throw error("nae extraction: input is not a 0-perfect forest");
    if (static_cast<int>(forest.size()) < g.n() - 2)
        throw error("nae extraction: forest below the two-tree threshold");

    detail::UnionFind uf(g.n());
    for (auto [u, v] : forest) uf.unite(u, v);
    const int anchor = uf.find(inst.roles.at("x1^1"));
    Assignment a(cnf.num_vars);
    for (int i = 1; i <= cnf.num_vars; ++i)
        a[i - 1] =
            uf.find(inst.roles.at("x1^" + std::to_string(i))) == anchor ? 1 : 0;
    if (!nae_satisfies(cnf, a))
        throw error("nae extraction: recovered assignment fails a clause");
    return a;
}

// ---------------------------------------------------------------------------
// Independent set of size k-2  ->  induced (v1^1,vk^2)-path of length 3k-2
// ->  0-perfect forest with |V|/2 + 3k - 3 edges.
//
// The input graph is relabeled onto positions {2..k-1} u {k+1..n} of an
// n = |V(g)|+2 position pattern whose positions 1 and k are isolated. Two
// copies of the pattern are joined so closed neighborhoods merge: v_a^1 is
// adjacent to v_b^2 iff a = b or positions a,b are adjacent. Every
// non-adjacent ordered cross pair (a,b) gets a degree-two vertex w_{a,b} on
// v_a^1 and v_b^2, and every vertex except v_1^1 and v_k^2 gets a pendant
// leaf.
// ---------------------------------------------------------------------------

namespace detail {

// Position (1-based) of input vertex v when positions 1 and k stay free.
inline int indset_position(int v, int k) { return v + 2 < k ? v + 2 : v + 3; }

// Inverse of indset_position for positions other than 1 and k.
inline int indset_input(int pos, int k) { return pos < k ? pos - 2 : pos - 3; }

}  // namespace detail

inline GadgetInstance indset_gadget(const Graph& g, int k) {
    const int input_n = g.n();
    if (k < 2 || k > input_n + 2) throw error("indset_gadget: k out of range");
    const int n = input_n + 2;  // positions 1..n

    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    for (auto [u, v] : g.edges()) {
        int a = detail::indset_position(u, k), b = detail::indset_position(v, k);
        adj[a][b] = adj[b][a] = 1;
    }

    std::map<std::string, int> roles;
    std::vector<std::string> label_of;
    auto c1 = [&](int p) { return p - 1; };
    auto c2 = [&](int p) { return n + p - 1; };
    for (int p = 1; p <= n; ++p)
        label_of.push_back("v" + std::to_string(p) + "^1");
    for (int p = 1; p <= n; ++p)
        label_of.push_back("v" + std::to_string(p) + "^2");

    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (adj[a][b]) {
                edges.push_back(make_edge(c1(a), c1(b)));
                edges.push_back(make_edge(c2(a), c2(b)));
            }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a == b || adj[a][b]) edges.push_back(make_edge(c1(a), c2(b)));

    int next = 2 * n;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b || adj[a][b]) continue;
            label_of.push_back("w_{" + std::to_string(a) + "," +
                               std::to_string(b) + "}");
            edges.push_back(make_edge(c1(a), next));
            edges.push_back(make_edge(c2(b), next));
            ++next;
        }
    const int h2_n = next;
    if (h2_n != 2 * n + n * n - n - 2 * g.m())
        throw error("indset_gadget: pattern vertex count mismatch");

    for (int v = 0; v < h2_n; ++v)
        detail::add_role(roles, label_of[v], v);
    for (int v = 0; v < h2_n; ++v) {
        if (v == c1(1) || v == c2(k)) continue;
        detail::add_role(roles, "pendant-of:" + label_of[v], next);
        edges.push_back(make_edge(v, next));
        ++next;
    }
    if (next != 2 * h2_n - 2) throw error("indset_gadget: vertex count mismatch");

    std::map<std::string, int> params = {
        {"n", n}, {"k", k}, {"input_n", input_n}, {"h2_n", h2_n}};
    for (int v = 0; v < input_n; ++v)
        params["pos-of-input-" + std::to_string(v)] = detail::indset_position(v, k);
    GadgetInstance inst{Graph(next, std::move(edges)), std::move(roles),
                        std::move(params)};
    detail::check_roles_cover(inst);
    return inst;
}

// The proof's path for an independent set of exactly k-2 vertices of g:
// positions 1, then the set's positions ascending, then k, expanded to
// v^1 v^2 w_{next,prev} v^1 v^2 ... Validated as an induced path of length
// 3k-2 from v1^1 to vk^2.
inline std::vector<int> indset_path_from_set(const Graph& g,
                                             const GadgetInstance& inst,
                                             const std::vector<int>& set) {
    const int n = inst.params.at("n");
    const int k = inst.params.at("k");
    std::vector<int> s = set;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw error("indset witness: repeated set vertex");
    if (static_cast<int>(s.size()) != k - 2)
        throw error("indset witness: set size != k-2");
    for (int v : s)
        if (v < 0 || v >= g.n()) throw error("indset witness: set vertex out of range");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                throw error("indset witness: set is not independent");

    std::vector<int> seq{1};
    for (int v : s) seq.push_back(detail::indset_position(v, k));
    seq.push_back(k);

    std::vector<int> path;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        path.push_back(seq[t] - 1);
        path.push_back(n + seq[t] - 1);
        if (t + 1 < seq.size()) {
            std::string w = "w_{" + std::to_string(seq[t + 1]) + "," +
                            std::to_string(seq[t]) + "}";
            auto it = inst.roles.find(w);
            if (it == inst.roles.end())
                throw error("indset witness: consecutive positions adjacent in pattern");
            path.push_back(it->second);
        }
    }
    detail::check_induced_path(inst.graph, path, "indset witness");
    if (static_cast<int>(path.size()) != 3 * k - 1)
        throw error("indset witness: unexpected path length");
    return path;
}

// Path plus every pendant edge; verified as a 0-perfect forest with
// |V|/2 + 3k - 3 edges.
inline std::vector<Edge> indset_forest_from_set(const Graph& g,
                                                const GadgetInstance& inst,
                                                const std::vector<int>& set) {
    const int k = inst.params.at("k");
    const int h2_n = inst.params.at("h2_n");
    std::vector<int> path = indset_path_from_set(g, inst, set);
    std::vector<Edge> forest;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        forest.push_back(make_edge(path[i], path[i + 1]));
    const Graph& h = inst.graph;
    for (int p = h2_n; p < h.n(); ++p)
        forest.push_back(make_edge(h.neighbors(p)[0], p));
    if (auto viol = find_forest_violation(h, ParityTarget::all_ones(h.n()), forest))
        throw error("indset witness: forest failed verification: " + viol->kind);
    if (static_cast<int>(forest.size()) != h.n() / 2 + 3 * k - 3)
        throw error("indset witness: unexpected forest size");
    return forest;
}

// Greedy selection along a validated induced (v1^1,vk^2)-path of length at
// least 3k-2: walk the path, keeping every copy vertex not path-adjacent to
// the last kept one. Any two kept vertices are non-adjacent, so their
// positions are distinct and pairwise non-adjacent; at least k survive, and
// dropping positions 1 and k leaves an independent set of g, trimmed to
// exactly k-2 vertices.
inline std::vector<int> indset_set_from_path(const Graph& g,
                                             const GadgetInstance& inst,
                                             const std::vector<int>& path) {
    const int n = inst.params.at("n");
    const int k = inst.params.at("k");
    const int h2_n = inst.params.at("h2_n");
    detail::check_induced_path(inst.graph, path, "indset extraction");
    if (path.front() != 0 || path.back() != n + k - 1)
        throw error("indset extraction: path endpoints are not v1^1 and vk^2");
    if (static_cast<int>(path.size()) < 3 * k - 1)
        throw error("indset extraction: path shorter than 3k-2");
    for (int v : path)
        if (v >= h2_n)
            throw error("indset extraction: path leaves the pattern graph");

    std::set<int> positions;
    std::size_t last = 0;
    positions.insert(path[0] % n + 1);
    for (std::size_t idx = 1; idx < path.size(); ++idx) {
        if (path[idx] >= 2 * n || idx <= last + 1) continue;
        last = idx;
        if (!positions.insert(path[idx] % n + 1).second)
            throw error("indset extraction: repeated position in selection");
    }
    if (static_cast<int>(positions.size()) < k)
        throw error("indset extraction: selection smaller than k");

    std::vector<int> out;
    for (int pos : positions) {
        if (pos == 1 || pos == k) continue;
        out.push_back(detail::indset_input(pos, k));
    }
    std::sort(out.begin(), out.end());
    out.resize(k - 2);
    for (int v : out)
        if (v < 0 || v >= g.n())
            throw error("indset extraction: recovered vertex out of range");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (g.has_edge(out[i], out[j]))
                throw error("indset extraction: recovered set not independent");
    return out;
}

// Strips the forced pendant edges off a verified 0-perfect forest meeting the
// |V|/2 + 3k - 3 threshold; the remaining edges form one induced
// (v1^1,vk^2)-path plus isolated vertices, which is handed to the path
// extraction.
inline std::vector<int> indset_set_from_forest(const Graph& g,
                                               const GadgetInstance& inst,
                                               const std::vector<Edge>& forest) {
    const int k = inst.params.at("k");
    const int h2_n = inst.params.at("h2_n");
    const Graph& h = inst.graph;
    if (find_forest_violation(h, ParityTarget::all_ones(h.n()), forest))
        throw error("indset extraction: input is not a 0-perfect forest");
    if (static_cast<int>(forest.size()) < h.n() / 2 + 3 * k - 3)
        throw error("indset extraction: forest below the threshold");

    std::vector<std::vector<int>> core(h2_n);
    int core_edges = 0;
    for (auto [u, v] : forest) {
        if (u >= h2_n || v >= h2_n) continue;  // pendant edge
        core[u].push_back(v);
        core[v].push_back(u);
        ++core_edges;
    }
    if (core[0].size() != 1)
        throw error("indset extraction: v1^1 does not start a path");
    std::vector<int> path{0};
    int prev = -1, cur = 0;
    while (cur != inst.params.at("n") + k - 1) {
        if (core[cur].size() > 2)
            throw error("indset extraction: stripped forest is not a path");
        int nxt = -1;
        for (int w : core[cur])
            if (w != prev) nxt = w;
        if (nxt < 0) throw error("indset extraction: path ends early");
        prev = cur;
        cur = nxt;
        path.push_back(cur);
    }
    if (core_edges != static_cast<int>(path.size()) - 1)
        throw error("indset extraction: stray edges outside the path");
    return indset_set_from_path(g, inst, path);
}

// ---------------------------------------------------------------------------
// 3-SAT  ->  induced cycle through two marked edges.
//
// Per variable i, an eight-vertex block with two x-w/wbar-y diamonds crossed
// by w1-wbar2 and wbar1-w2; blocks chained by y1^i x1^{i+1} and y2^i x2^{i+1};
// e1 = x1^1 x2^1. Per clause j, a K_{2,3} on {a, c1, c2, c3, b}, chained by
// b^j a^{j+1}, closed by e2 = b^m y1^n and y2^n a^1. Literal t of clause j on
// variable i wires ct^j to w1^i and w2^i when positive, to wbar1^i and
// wbar2^i when negated. |V| = 8n + 5m.
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::array<const char*, 8> kCycBlock = {
    "x1", "w1", "wb1", "y1", "x2", "w2", "wb2", "y2"};

}  // namespace detail

inline GadgetInstance induced_cycle_gadget(const CnfInstance& cnf) {
    cnf.validate();
    const int n = cnf.num_vars;
    const int m = static_cast<int>(cnf.clauses.size());
    if (n == 0 || m == 0) throw error("induced_cycle_gadget: empty cnf");

    std::map<std::string, int> roles;
    std::vector<Edge> edges;
    auto vb = [](int i, int off) { return 8 * (i - 1) + off; };
    auto cb = [n](int j, int off) { return 8 * n + 5 * (j - 1) + off; };

    static constexpr std::array<std::pair<int, int>, 10> kBlockEdges = {
        {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7}, {1, 6}, {2, 5}}};
    for (int i = 1; i <= n; ++i) {
        for (int off = 0; off < 8; ++off)
            detail::add_role(roles,
                             std::string(detail::kCycBlock[off]) + "^" +
                                 std::to_string(i),
                             vb(i, off));
        for (auto [a, b] : kBlockEdges)
            edges.push_back(make_edge(vb(i, a), vb(i, b)));
        if (i < n) {
            edges.push_back(make_edge(vb(i, 3), vb(i + 1, 0)));
            edges.push_back(make_edge(vb(i, 7), vb(i + 1, 4)));
        }
    }
    const Edge e1 = make_edge(vb(1, 0), vb(1, 4));
    edges.push_back(e1);

    static constexpr std::array<const char*, 5> kClauseBlock = {"a", "c1", "c2",
                                                                "c3", "b"};
    for (int j = 1; j <= m; ++j) {
        for (int off = 0; off < 5; ++off)
            detail::add_role(roles,
                             std::string(kClauseBlock[off]) + "^" +
                                 std::to_string(j),
                             cb(j, off));
        for (int c : {1, 2, 3}) {
            edges.push_back(make_edge(cb(j, 0), cb(j, c)));
            edges.push_back(make_edge(cb(j, c), cb(j, 4)));
        }
        if (j < m) edges.push_back(make_edge(cb(j, 4), cb(j + 1, 0)));
        for (int t = 0; t < 3; ++t) {
            int lit = cnf.clauses[j - 1][t];
            int i = std::abs(lit);
            int w1 = lit > 0 ? 1 : 2, w2 = lit > 0 ? 5 : 6;
            edges.push_back(make_edge(cb(j, 1 + t), vb(i, w1)));
            edges.push_back(make_edge(cb(j, 1 + t), vb(i, w2)));
        }
    }
    const Edge e2 = make_edge(cb(m, 4), vb(n, 3));
    edges.push_back(e2);
    edges.push_back(make_edge(vb(n, 7), cb(1, 0)));

    GadgetInstance inst{Graph(8 * n + 5 * m, std::move(edges)),
                        std::move(roles),
                        {{"n", n},
                         {"m", m},
                         {"e1_u", e1.first},
                         {"e1_v", e1.second},
                         {"e2_u", e2.first},
                         {"e2_v", e2.second}}};
    detail::check_roles_cover(inst);
    return inst;
}

namespace detail {

inline Edge gadget_edge(const GadgetInstance& inst, const char* which) {
    return make_edge(inst.params.at(std::string(which) + "_u"),
                     inst.params.at(std::string(which) + "_v"));
}

}  // namespace detail

// The proof's cycle for a satisfying assignment: down the first rows taking
// the wbar detour for true variables and the w detour for false ones, across
// e2 into the clause chain picking each clause's first satisfied literal,
// back along the second rows. Validated as an induced cycle through e1, e2.
inline std::vector<int> cycle_from_assignment(const CnfInstance& cnf,
                                              const GadgetInstance& inst,
                                              const Assignment& a) {
    cnf.validate();
    const int n = cnf.num_vars;
    const int m = static_cast<int>(cnf.clauses.size());
    if (static_cast<int>(a.size()) != n)
        throw error("cycle witness: assignment length != variable count");
    if (!satisfies(cnf, a))
        throw error("cycle witness: assignment does not satisfy the cnf");

    auto vb = [](int i, int off) { return 8 * (i - 1) + off; };
    auto cb = [n](int j, int off) { return 8 * n + 5 * (j - 1) + off; };
    std::vector<int> cyc;
    for (int i = 1; i <= n; ++i) {
        cyc.push_back(vb(i, 0));
        cyc.push_back(vb(i, a[i - 1] ? 2 : 1));
        cyc.push_back(vb(i, 3));
    }
    for (int j = m; j >= 1; --j) {
        int slot = 0;
        while (!literal_value(cnf.clauses[j - 1][slot], a)) ++slot;
        cyc.push_back(cb(j, 4));
        cyc.push_back(cb(j, 1 + slot));
        cyc.push_back(cb(j, 0));
    }
    for (int i = n; i >= 1; --i) {
        cyc.push_back(vb(i, 7));
        cyc.push_back(vb(i, a[i - 1] ? 6 : 5));
        cyc.push_back(vb(i, 4));
    }
    detail::check_induced_cycle(inst.graph, cyc, detail::gadget_edge(inst, "e1"),
                                detail::gadget_edge(inst, "e2"), "cycle witness");
    return cyc;
}

// Reads the assignment off a validated induced cycle through e1 and e2:
// variable i is true exactly when neither w1^i nor w2^i lies on the cycle.
// The recovered assignment is checked against the cnf.
inline Assignment assignment_from_cycle(const CnfInstance& cnf,
                                        const GadgetInstance& inst,
                                        const std::vector<int>& cycle) {
    cnf.validate();
    detail::check_induced_cycle(inst.graph, cycle, detail::gadget_edge(inst, "e1"),
                                detail::gadget_edge(inst, "e2"),
                                "cycle extraction");
    std::vector<char> on_cycle(inst.graph.n(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    Assignment a(cnf.num_vars);
    for (int i = 1; i <= cnf.num_vars; ++i)
        a[i - 1] = !on_cycle[8 * (i - 1) + 1] && !on_cycle[8 * (i - 1) + 5];
    if (!satisfies(cnf, a))
        throw error("cycle extraction: recovered assignment fails a clause");
    return a;
}

// ---------------------------------------------------------------------------
// Induced cycle through e1 and e2  ->  0-perfect forest containing e2.
//
// The instance keeps the input vertices, deletes e1, and hangs a pendant leaf
// on every vertex except e1's endpoints. The marked edge carries over
// unchanged: h has a 0-perfect forest containing it iff the input has an
// induced cycle through both e1 and e2.
// ---------------------------------------------------------------------------

struct ContainingEdgeInstance {
    Graph h;
    Edge marked;
    std::map<std::string, int> roles;
};

inline ContainingEdgeInstance containing_edge_instance(const Graph& g, Edge e1,
                                                       Edge e2) {
    e1 = make_edge(e1.first, e1.second);
    e2 = make_edge(e2.first, e2.second);
    if (g.edge_index(e1.first, e1.second) < 0 ||
        g.edge_index(e2.first, e2.second) < 0)
        throw error("containing_edge_instance: marked edge not in graph");
    if (e1 == e2)
        throw error("containing_edge_instance: marked edges must differ");

    std::map<std::string, int> roles;
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != e1) edges.push_back(e);
    int next = g.n();
    for (int v = 0; v < g.n(); ++v) {
        detail::add_role(roles, "v" + std::to_string(v), v);
        if (v == e1.first || v == e1.second) continue;
        detail::add_role(roles, "pendant-of:v" + std::to_string(v), next);
        edges.push_back(make_edge(v, next));
        ++next;
    }
    return {Graph(next, std::move(edges)), e2, std::move(roles)};
}

}  // namespace pforest
