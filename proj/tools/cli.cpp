// pforest: every library operation as a subcommand over shared file formats.
//
// Exit codes: 0 = success/feasible, JSON on stdout; 2 = well-formed input
// whose answer is infeasible/none, JSON with a reason on stdout; 1 = usage or
// input error, message on stderr. All JSON carries a top-level "schema": 1.

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pforest/avoid_edge.hpp"
#include "pforest/json_io.hpp"
#include "pforest/min_forest.hpp"
#include "pforest/one_forest.hpp"
#include "pforest/oracle.hpp"
#include "pforest/reductions.hpp"

namespace {

using namespace pforest;

constexpr unsigned kDefaultSeed = 20240816;  // fixed for reproducibility

struct GraphArgs {
    std::string path;
    std::vector<std::string> fspec;  // "all-ones" | "all-ones-except <v>" | "zeros"
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_f) {
    cmd->add_option("--graph", args.path, "graph file (n m header, u v lines)")
        ->required();
    if (with_f)
        cmd->add_option("--f", args.fspec,
                        "parity target: all-ones | all-ones-except <v> | zeros "
                        "(default: file's f: line, else all-ones)")
            ->expected(1, 2);
}

ParsedGraphFile load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw error("cannot open graph file: " + path);
    return parse_graph(in);
}

ParityTarget resolve_target(const ParsedGraphFile& parsed,
                            const std::vector<std::string>& fspec) {
    const int n = parsed.graph.n();
    if (fspec.empty()) {
        if (parsed.parity_line) return ParityTarget(*parsed.parity_line);
        return ParityTarget::all_ones(n);
    }
    if (fspec[0] == "all-ones" && fspec.size() == 1)
        return ParityTarget::all_ones(n);
    if (fspec[0] == "zeros" && fspec.size() == 1) return ParityTarget::zeros(n);
    if (fspec[0] == "all-ones-except" && fspec.size() == 2)
        return ParityTarget::all_ones_except(n, std::stoi(fspec[1]));
    throw error("bad --f value; use all-ones, all-ones-except <v>, or zeros");
}

Edge parse_edge_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw error("edge arguments use the form u,v");
    try {
        int u = std::stoi(text.substr(0, comma));
        int v = std::stoi(text.substr(comma + 1));
        return make_edge(u, v);
    } catch (const std::exception&) {
        throw error("edge arguments use the form u,v with integers");
    }
}

CnfInstance load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw error("cannot open cnf file: " + path);
    return parse_dimacs_cnf(in);
}

void write_out_file(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw error("cannot open output file: " + path);
    out << text;
}

// Every emitted document leaves through here: stdout always, --out when set.
int emit(const nlohmann::json& j, const std::string& out_path, int code) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    write_out_file(out_path, text);
    return code;
}

int emit_infeasible(const std::string& reason, const std::string& out_path) {
    return emit(nlohmann::json{{"feasible", false},
                               {"reason", reason},
                               {"schema", kJsonSchemaVersion}},
                out_path, 2);
}

// Forest answers share one shape; --verify re-checks the edges against the
// host and target before anything is printed.
int emit_forest(const Graph& g, const ParityTarget& f,
                const std::vector<Edge>& forest, bool verify,
                const std::string& out_path) {
    if (verify) {
        if (auto viol = find_forest_violation(g, f, forest))
            throw error("verification failed: " + viol->kind);
    }
    return emit(forest_json(g, forest), out_path, 0);
}

nlohmann::json int_array(const std::vector<int>& xs) {
    return nlohmann::json(xs);
}

// Splits the oracle enumeration across threads by pinning the top edges of
// the mask to every combination; slice order preserves the global ascending
// mask order, so output is independent of the job count.
std::vector<std::vector<Edge>> enumerate_jobs(const Graph& g,
                                              const ParityTarget& f,
                                              OracleOptions opts, int jobs) {
    if (jobs <= 1 || g.m() == 0) return all_parity_forests(g, f, opts);
    int split = 0;
    while ((1 << split) < jobs && split < g.m() && split < 10) ++split;
    std::vector<std::future<std::vector<std::vector<Edge>>>> slices;
    for (int mask = 0; mask < (1 << split); ++mask) {
        OracleOptions slice = opts;
        for (int b = 0; b < split; ++b) {
            Edge e = g.edges()[g.m() - 1 - b];
            // Bit b of the slice mask decides edge m-1-b; higher slice masks
            // pin lexicographically later forests.
            if (mask & (1 << (split - 1 - b)))
                slice.require.push_back(e);
            else
                slice.forbid.push_back(e);
        }
        slices.push_back(std::async(std::launch::async, [slice, &g, &f] {
            return all_parity_forests(g, f, slice);
        }));
    }
    std::vector<std::vector<Edge>> out;
    for (auto& s : slices)
        for (auto& forest : s.get()) out.push_back(std::move(forest));
    return out;
}

struct Cli {
    // Shared option storage; one subcommand runs per process.
    GraphArgs graph_args;
    std::string out_path;
    bool verify = false;
    unsigned seed = kDefaultSeed;
    std::string edge_text, e1_text, e2_text;
    int even_vertex = -1;
    int k = 2;
    int cap = 22;
    int jobs = 1;
    int from = 0, to = 0, min_edges = 0;
    std::string cnf_path;
    std::string gadget_kind;
    std::string forest_path;
};

int run(int argc, char** argv) {
    CLI::App app{"f-parity perfect forests: solvers, gadget builders, and "
                 "brute-force oracles"};
    app.require_subcommand(1);
    Cli c;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", c.out_path, "also write the JSON to this file");
        cmd->add_flag("--verify", c.verify,
                      "re-check any emitted forest before printing");
        cmd->add_option("--seed", c.seed, "rng seed for randomized tooling");
    };

    CLI::App* min_forest = app.add_subcommand(
        "min-forest", "minimum-size f-parity perfect forest");
    add_graph_options(min_forest, c.graph_args, true);
    add_common(min_forest);

    CLI::App* forest_exists = app.add_subcommand(
        "forest-exists", "existence of an f-parity perfect forest");
    add_graph_options(forest_exists, c.graph_args, true);
    add_common(forest_exists);

    CLI::App* avoid_edge = app.add_subcommand(
        "avoid-edge", "f-parity perfect forest avoiding one edge");
    add_graph_options(avoid_edge, c.graph_args, true);
    avoid_edge->add_option("--edge", c.edge_text, "edge to avoid, as u,v")
        ->required();
    add_common(avoid_edge);

    CLI::App* one_forest = app.add_subcommand(
        "one-forest", "1-perfect forest with a chosen even-degree vertex");
    add_graph_options(one_forest, c.graph_args, false);
    one_forest
        ->add_option("--even-vertex", c.even_vertex,
                     "the vertex required to have even degree")
        ->required();
    add_common(one_forest);

    CLI::App* proper_one = app.add_subcommand(
        "proper-one-forest", "proper 1-perfect forest (no isolated vertices)");
    add_graph_options(proper_one, c.graph_args, false);
    add_common(proper_one);

    CLI::App* class_b = app.add_subcommand(
        "class-b",
        "membership: connected with every block a complete odd-order graph");
    add_graph_options(class_b, c.graph_args, false);
    add_common(class_b);

    CLI::App* gadget = app.add_subcommand(
        "gadget", "hardness-gadget builders (graph + roles JSON)");
    gadget
        ->add_option("kind", c.gadget_kind,
                     "one of: nae3sat, indset, induced-cycle")
        ->required()
        ->check(CLI::IsMember({"nae3sat", "indset", "induced-cycle"}));
    gadget
        ->add_option("--in", c.cnf_path,
                     "input file: DIMACS cnf (nae3sat, induced-cycle) or "
                     "graph (indset)")
        ->required();
    gadget->add_option("--k", c.k, "target independent-set size (indset)");
    add_common(gadget);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "re-check a forest JSON against a graph and target");
    add_graph_options(verify_cmd, c.graph_args, true);
    verify_cmd->add_option("--forest", c.forest_path, "forest JSON file")
        ->required();
    add_common(verify_cmd);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force reference implementations (desk scale only)");
    oracle->require_subcommand(1);
    auto add_oracle_graph = [&](const char* name, const char* help,
                                bool with_f) {
        CLI::App* cmd = oracle->add_subcommand(name, help);
        add_graph_options(cmd, c.graph_args, with_f);
        cmd->add_option("--cap", c.cap, "edge cap for enumeration (default 22)");
        add_common(cmd);
        return cmd;
    };
    CLI::App* o_enum = add_oracle_graph(
        "enumerate", "every f-parity perfect forest, ascending mask order",
        true);
    o_enum->add_option("--jobs", c.jobs, "parallel enumeration slices");
    add_oracle_graph("min-forest", "smallest f-parity perfect forest", true);
    add_oracle_graph("max-zero-forest", "largest all-odd-degree forest", false);
    CLI::App* o_avoid = add_oracle_graph(
        "exists-avoiding", "forest avoiding one edge", true);
    o_avoid->add_option("--edge", c.edge_text, "edge to avoid, as u,v")
        ->required();
    CLI::App* o_contain = add_oracle_graph(
        "exists-containing", "forest containing one edge", true);
    o_contain->add_option("--edge", c.edge_text, "edge to contain, as u,v")
        ->required();
    CLI::App* o_cycle = add_oracle_graph(
        "induced-cycle", "induced cycle through two edges", false);
    o_cycle->add_option("--e1", c.e1_text, "first edge, as u,v")->required();
    o_cycle->add_option("--e2", c.e2_text, "second edge, as u,v")->required();
    CLI::App* o_path = add_oracle_graph(
        "induced-path", "induced path between two vertices with a length floor",
        false);
    o_path->add_option("--from", c.from, "start vertex")->required();
    o_path->add_option("--to", c.to, "end vertex")->required();
    o_path->add_option("--min-edges", c.min_edges, "minimum number of edges");
    add_oracle_graph("two-tree", "all-odd forest with at least n-2 edges",
                     false);
    add_oracle_graph("max-independent-set", "maximum independent set", false);
    CLI::App* o_nae = oracle->add_subcommand(
        "nae-sat", "assignment giving every clause both truth values");
    o_nae->add_option("--cnf", c.cnf_path, "DIMACS cnf file")->required();
    add_common(o_nae);
    CLI::App* o_sat = oracle->add_subcommand("sat", "satisfying assignment");
    o_sat->add_option("--cnf", c.cnf_path, "DIMACS cnf file")->required();
    add_common(o_sat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version exit 0; every usage problem is exit 1.
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (min_forest->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            auto forest = min_parity_forest(parsed.graph, f);
            if (!forest) return emit_infeasible("odd-component-sum", c.out_path);
            return emit_forest(parsed.graph, f, *forest, c.verify, c.out_path);
        }
        if (forest_exists->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            auto forest = exists_f_parity_forest(parsed.graph, f);
            if (!forest) return emit_infeasible("odd-component-sum", c.out_path);
            if (c.verify)
                if (auto viol = find_forest_violation(parsed.graph, f, *forest))
                    throw error("verification failed: " + viol->kind);
            nlohmann::json j = forest_json(parsed.graph, *forest);
            j["exists"] = true;
            return emit(j, c.out_path, 0);
        }
        if (avoid_edge->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            Edge e = parse_edge_arg(c.edge_text);
            auto forest = decide_avoid_edge(parsed.graph, e, f);
            if (!forest) return emit_infeasible("claim-C-sum-2", c.out_path);
            if (c.verify) {
                for (auto fe : *forest)
                    if (fe == e) throw error("verification failed: edge not avoided");
            }
            return emit_forest(parsed.graph, f, *forest, c.verify, c.out_path);
        }
        if (one_forest->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto forest = one_perfect_forest(parsed.graph, c.even_vertex);
            auto f = ParityTarget::all_ones_except(parsed.graph.n(), c.even_vertex);
            return emit_forest(parsed.graph, f, forest, c.verify, c.out_path);
        }
        if (proper_one->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto forest = proper_one_perfect_forest(parsed.graph);
            if (!forest) return emit_infeasible("class-B", c.out_path);
            if (c.verify && !is_proper_one_perfect_forest(parsed.graph, *forest))
                throw error("verification failed: not a proper 1-perfect forest");
            nlohmann::json j = forest_json(parsed.graph, *forest);
            return emit(j, c.out_path, 0);
        }
        if (class_b->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            return emit(nlohmann::json{{"class_b", is_class_B(parsed.graph)},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        if (gadget->parsed()) {
            GadgetInstance inst;
            if (c.gadget_kind == "nae3sat") {
                inst = nae_gadget(load_cnf(c.cnf_path));
            } else if (c.gadget_kind == "induced-cycle") {
                inst = induced_cycle_gadget(load_cnf(c.cnf_path));
            } else {
                auto parsed = load_graph(c.cnf_path);
                inst = indset_gadget(parsed.graph, c.k);
            }
            return emit(gadget_json(inst), c.out_path, 0);
        }
        if (verify_cmd->parsed()) {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            std::ifstream in(c.forest_path);
            if (!in.good())
                throw error("cannot open forest file: " + c.forest_path);
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw error(std::string("forest json parse: ") + e.what());
            }
            auto forest = forest_edges_from_json(doc);
            if (auto viol = find_forest_violation(parsed.graph, f, forest)) {
                nlohmann::json j{{"ok", false},
                                 {"violation", viol->kind},
                                 {"vertices", int_array(viol->vertices)},
                                 {"schema", kJsonSchemaVersion}};
                return emit(j, c.out_path, 2);
            }
            return emit(nlohmann::json{{"ok", true},
                                       {"size", forest.size()},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }

        // oracle subcommands
        OracleOptions opts;
        opts.edge_cap = c.cap;
        auto oracle_forest = [&](const std::optional<std::vector<Edge>>& forest,
                                 const Graph& g, const ParityTarget& f,
                                 const char* none_reason) {
            if (!forest) return emit_infeasible(none_reason, c.out_path);
            return emit_forest(g, f, *forest, c.verify, c.out_path);
        };
        CLI::App* sub = oracle->parsed() ? oracle->get_subcommands().front()
                                         : nullptr;
        if (!sub) throw error("unknown subcommand");
        const std::string name = sub->get_name();
        if (name == "enumerate") {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            auto forests = enumerate_jobs(parsed.graph, f, opts, c.jobs);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& forest : forests)
                arr.push_back(forest_json(parsed.graph, forest)["edges"]);
            return emit(nlohmann::json{{"count", forests.size()},
                                       {"forests", std::move(arr)},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        if (name == "min-forest") {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            return oracle_forest(bf_min_forest(parsed.graph, f, opts),
                                 parsed.graph, f, "no-forest");
        }
        if (name == "max-zero-forest") {
            auto parsed = load_graph(c.graph_args.path);
            auto f = ParityTarget::all_ones(parsed.graph.n());
            return oracle_forest(bf_max_zero_forest(parsed.graph, opts),
                                 parsed.graph, f, "no-forest");
        }
        if (name == "exists-avoiding" || name == "exists-containing") {
            auto parsed = load_graph(c.graph_args.path);
            auto f = resolve_target(parsed, c.graph_args.fspec);
            Edge e = parse_edge_arg(c.edge_text);
            auto forest = name == "exists-avoiding"
                              ? bf_exists_avoiding(parsed.graph, e, f, opts)
                              : bf_exists_containing(parsed.graph, e, f, opts);
            return oracle_forest(forest, parsed.graph, f, "no-forest");
        }
        if (name == "induced-cycle") {
            auto parsed = load_graph(c.graph_args.path);
            auto cyc = bf_induced_cycle_through(
                parsed.graph, parse_edge_arg(c.e1_text),
                parse_edge_arg(c.e2_text));
            if (!cyc) return emit_infeasible("no-induced-cycle", c.out_path);
            return emit(nlohmann::json{{"cycle", int_array(*cyc)},
                                       {"length", cyc->size()},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        if (name == "induced-path") {
            auto parsed = load_graph(c.graph_args.path);
            auto path = bf_induced_path_through(parsed.graph, c.from, c.to,
                                                c.min_edges);
            if (!path) return emit_infeasible("no-induced-path", c.out_path);
            return emit(nlohmann::json{{"path", int_array(*path)},
                                       {"length", path->size() - 1},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        if (name == "two-tree") {
            auto parsed = load_graph(c.graph_args.path);
            auto f = ParityTarget::all_ones(parsed.graph.n());
            return oracle_forest(bf_two_tree_zero_forest(parsed.graph),
                                 parsed.graph, f, "no-forest");
        }
        if (name == "max-independent-set") {
            auto parsed = load_graph(c.graph_args.path);
            auto set = bf_max_independent_set(parsed.graph);
            return emit(nlohmann::json{{"set", int_array(set)},
                                       {"size", set.size()},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        if (name == "nae-sat" || name == "sat") {
            auto cnf = load_cnf(c.cnf_path);
            auto a = name == "nae-sat" ? bf_nae_satisfiable(cnf)
                                       : bf_satisfiable(cnf);
            if (!a)
                return emit_infeasible(name == "nae-sat" ? "not-nae-satisfiable"
                                                         : "not-satisfiable",
                                       c.out_path);
            std::vector<int> bits(a->begin(), a->end());
            return emit(nlohmann::json{{"assignment", int_array(bits)},
                                       {"schema", kJsonSchemaVersion}},
                        c.out_path, 0);
        }
        throw error("unknown subcommand");
    } catch (const infeasible& e) {
        return emit_infeasible(e.reason, c.out_path);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
