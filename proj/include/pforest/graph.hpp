#pragma once

// Simple undirected graphs with dense ids 0..n-1, plus the structural
// primitives the forest algorithms are built on: connectivity, block
// (biconnected) decomposition, completeness tests, induced P3 search and
// Menger-style disjoint path queries.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pforest {

using Edge = std::pair<int, int>;

// Input or precondition problem: maps to CLI exit code 1.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input whose answer is "no solution exists": CLI exit code 2.
struct infeasible : std::runtime_error {
    std::string reason;
    explicit infeasible(std::string r)
        : std::runtime_error("infeasible: " + r), reason(std::move(r)) {}
};

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edge_list) : n_(n) {
        if (n < 0) throw error("graph: negative vertex count");
        for (auto& e : edge_list) e = make_edge(e.first, e.second);
        std::sort(edge_list.begin(), edge_list.end());
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            if (u < 0 || v >= n) throw error("graph: edge endpoint out of range");
            if (u == v) throw error("graph: self-loop");
            if (i > 0 && edge_list[i] == edge_list[i - 1])
                throw error("graph: parallel edge");
        }
        edges_ = std::move(edge_list);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int edge_index(int u, int v) const {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Mapping between a graph and the subgraph produced by deleting vertices.
// old_of_new[i] is the original id of new vertex i; new_of_old[v] is -1 for
// deleted vertices.
struct VertexMap {
    std::vector<int> old_of_new;
    std::vector<int> new_of_old;
};

struct Subgraph {
    Graph graph;
    VertexMap map;
};

// Induced subgraph on `keep` (need not be sorted; duplicates rejected).
inline Subgraph induced_subgraph(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw error("induced_subgraph: duplicate vertex");
    VertexMap map;
    map.old_of_new = keep;
    map.new_of_old.assign(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.n()) throw error("induced_subgraph: vertex out of range");
        map.new_of_old[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int nu = map.new_of_old[u], nv = map.new_of_old[v];
        if (nu >= 0 && nv >= 0) edges.push_back(make_edge(nu, nv));
    }
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(map)};
}

inline Subgraph delete_vertices(const Graph& g, const std::vector<int>& remove) {
    std::vector<char> gone(g.n(), 0);
    for (int v : remove) {
        if (v < 0 || v >= g.n()) throw error("delete_vertices: vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// Connected components as vertex sets, each ascending, ordered by smallest
// member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

// Blocks are maximal 2-connected subgraphs, bridges with their endpoints, or
// isolated vertices. Every edge lies in exactly one block; a vertex is a cut
// vertex iff it lies in two or more blocks.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;       // vertex sets, each ascending
    std::vector<int> cut_vertices;              // ascending
    std::vector<std::vector<int>> block_cut_tree;  // per block: its cut vertices
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> block_vertex_sets;
    int timer = 0;

    // Iterative Tarjan; neighbors are visited in ascending order so the
    // output is deterministic.
    struct Frame {
        int v, parent;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            block_vertex_sets.push_back({root});
            continue;
        }
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            if (fr.next < g.neighbors(v).size()) {
                int w = g.neighbors(v)[fr.next++];
                if (w == fr.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({v, w});
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({w, v, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // Edges down to (u,v) form one biconnected component.
                    std::vector<int> verts;
                    while (true) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                        if (e == Edge{u, v}) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    block_vertex_sets.push_back(std::move(verts));
                }
            }
        }
    }

    BlockDecomposition out;
    std::sort(block_vertex_sets.begin(), block_vertex_sets.end());
    out.blocks = std::move(block_vertex_sets);

    // A cut vertex is exactly a vertex lying in >= 2 blocks; derive the flag
    // from membership so the invariant holds by construction.
    std::vector<int> block_count(n, 0);
    for (const auto& b : out.blocks)
        for (int v : b) ++block_count[v];
    for (int v = 0; v < n; ++v)
        if (block_count[v] >= 2) out.cut_vertices.push_back(v);
    out.block_cut_tree.resize(out.blocks.size());
    for (std::size_t i = 0; i < out.blocks.size(); ++i)
        for (int v : out.blocks[i])
            if (block_count[v] >= 2) out.block_cut_tree[i].push_back(v);
    return out;
}

inline std::vector<int> cut_vertices(const Graph& g) {
    return block_decomposition(g).cut_vertices;
}

inline bool is_complete(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

inline bool is_complete(const Graph& g) {
    return 2 * g.m() == g.n() * (g.n() - 1);
}

// First induced path p1-p2-p3 (p1p3 not an edge) by ascending middle vertex,
// then ascending endpoints. None iff the graph is complete.
inline std::optional<std::array<int, 3>> find_induced_p3(const Graph& g) {
    for (int p2 = 0; p2 < g.n(); ++p2) {
        const auto& nb = g.neighbors(p2);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j]))
                    return std::array<int, 3>{nb[i], p2, nb[j]};
    }
    return std::nullopt;
}

namespace detail {

// Unit-capacity flow network with split vertices, used only for the
// two-disjoint-paths query below. Node 2x = x-in, 2x+1 = x-out.
struct SplitFlow {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;                 // paired: arc i ^ 1 is the reverse
    std::vector<std::vector<int>> out;

    explicit SplitFlow(int nodes) : out(nodes) {}

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    bool augment(int s, int t) {
        std::vector<int> prev_arc(out.size(), -1);
        std::vector<int> queue{s};
        std::vector<char> seen(out.size(), 0);
        seen[s] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int ai : out[v]) {
                const Arc& a = arcs[ai];
                if (a.cap <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                prev_arc[a.to] = ai;
                if (a.to == t) {
                    for (int x = t; x != s;) {
                        int pa = prev_arc[x];
                        arcs[pa].cap -= 1;
                        arcs[pa ^ 1].cap += 1;
                        x = arcs[pa ^ 1].to;
                    }
                    return true;
                }
                queue.push_back(a.to);
            }
        }
        return false;
    }
};

}  // namespace detail

// Simple (u,v)-path containing w, via an auxiliary vertex w' adjacent to u,v
// and two internally disjoint (w,w')-paths found by augmenting-path flow.
// Returns the path as a vertex sequence u..w..v, or none.
inline std::optional<std::vector<int>> two_disjoint_paths_through(const Graph& g,
                                                                  int w, int u,
                                                                  int v) {
    if (u == v || w == u || w == v) throw error("two_disjoint_paths_through: vertices must be distinct");
    const int n = g.n();
    const int wprime = n;
    auto vin = [](int x) { return 2 * x; };
    auto vout = [](int x) { return 2 * x + 1; };
    detail::SplitFlow net(2 * (n + 1));
    for (int x = 0; x <= n; ++x)
        net.add(vin(x), vout(x), (x == w || x == wprime) ? 2 : 1);
    auto link = [&](int a, int b) {
        net.add(vout(a), vin(b), 1);
        net.add(vout(b), vin(a), 1);
    };
    for (auto [a, b] : g.edges()) link(a, b);
    link(wprime, u);
    link(wprime, v);

    int flow = 0;
    while (flow < 2 && net.augment(vout(w), vin(wprime))) ++flow;
    if (flow < 2) return std::nullopt;

    // Walk the two unit paths out of w, consuming used arcs (cap now 0 on
    // used forward arcs, so "used" means reverse cap 1 on an original arc).
    std::vector<char> used(net.arcs.size(), 0);
    auto walk = [&](void) {
        std::vector<int> path{w};
        int node = vout(w);
        while (node != vin(wprime)) {
            int next = -1;
            for (int ai : net.out[node]) {
                if (used[ai] || (ai & 1)) continue;
                if (net.arcs[ai ^ 1].cap <= 0 || net.arcs[ai].cap != 0) continue;
                used[ai] = 1;
                next = net.arcs[ai].to;
                break;
            }
            if (next < 0) throw error("two_disjoint_paths_through: flow walk failed");
            node = next;
            if (node % 2 == 0 && node != vin(wprime)) path.push_back(node / 2);
            node = (node == vin(wprime)) ? node : vout(node / 2);
        }
        return path;  // w, ..., u-or-v
    };
    std::vector<int> p1 = walk();
    std::vector<int> p2 = walk();
    if (p1.back() == v) std::swap(p1, p2);
    if (p1.back() != u || p2.back() != v)
        throw error("two_disjoint_paths_through: unexpected path endpoints");
    std::vector<int> path(p1.rbegin(), p1.rend());  // u ... w
    path.insert(path.end(), p2.begin() + 1, p2.end());
    return path;
}

// Text format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. '#' comments and blank lines are ignored. An optional
// trailing "f: b0 b1 ... b(n-1)" line carries a parity target.
struct ParsedGraphFile {
    Graph graph;
    std::optional<std::vector<std::uint8_t>> parity_line;
};

inline ParsedGraphFile parse_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::optional<std::vector<std::uint8_t>> fbits;
    int edges_seen = 0;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "f:") {
            if (n < 0) throw error("graph parse: f-line before header");
            std::vector<std::uint8_t> bits;
            int b;
            while (ls >> b) {
                if (b != 0 && b != 1) throw error("graph parse: f bit must be 0 or 1");
                bits.push_back(static_cast<std::uint8_t>(b));
            }
            if (static_cast<int>(bits.size()) != n)
                throw error("graph parse: f-line length != n");
            fbits = std::move(bits);
            continue;
        }
        std::istringstream nums(line);
        std::string trailing;
        if (n < 0) {
            if (!(nums >> n >> m) || n < 0 || m < 0)
                throw error("graph parse: bad header line");
            if (nums >> trailing) throw error("graph parse: junk after header");
            continue;
        }
        int u, v;
        if (!(nums >> u >> v)) throw error("graph parse: bad edge line: " + line);
        if (nums >> trailing) throw error("graph parse: junk after edge line");
        if (!(u < v)) throw error("graph parse: edge lines require u < v");
        edges.emplace_back(u, v);
        ++edges_seen;
    }
    if (n < 0) throw error("graph parse: missing header line");
    if (edges_seen != m) throw error("graph parse: edge count does not match header");
    return {Graph(n, std::move(edges)), std::move(fbits)};
}

inline ParsedGraphFile parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const std::vector<std::uint8_t>* fbits = nullptr) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (fbits) {
        out << "f:";
        for (std::uint8_t b : *fbits) out << ' ' << static_cast<int>(b);
        out << '\n';
    }
}

}  // namespace pforest
