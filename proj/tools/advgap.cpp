// advgap: exact adversarial-risk and randomization-gap toolkit.
//
// Subcommands:
//   analyze    dataset -> conflict structures, exact FP/IP, gap decomposition
//   construct  generate datasets (basis | fibration | embed | example |
//              random-graph)
//   embed      alias for `construct embed`
//   solve      raw hypergraph + weights -> exact FP/IP with certificates
//   check      graph or dataset -> perfectness / conformality diagnosis
//   classify   dataset + packing vector -> witnessed margins and accuracy
//
// Every subcommand reads `-` as stdin and writes JSON to stdout (or --output).
// All rational quantities are reported as exact "a/b" strings; floating
// diagnostics are tagged approx. Exit codes: 0 ok, 2 input/validation error,
// 3 inconclusive geometry, 4 budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "advgap/analysis.hpp"
#include "advgap/classifier.hpp"
#include "advgap/conflict.hpp"
#include "advgap/constructions.hpp"
#include "advgap/dataset.hpp"
#include "advgap/errors.hpp"
#include "advgap/packing.hpp"

namespace {

using nlohmann::ordered_json;
using namespace advgap;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json rationals_to_json(const std::vector<Rational>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

ordered_json one_based(const std::vector<int>& v) {
    ordered_json arr = ordered_json::array();
    for (int x : v) arr.push_back(x + 1);
    return arr;
}

struct GlobalFlags {
    double tol = kDefaultGeomTol;
    long node_budget = kDefaultNodeBudget;
    int hole_cap = 13;
    bool exhaustive = false;
    bool merge_duplicates = false;
    bool normalize = false;
    bool timing = false;
    std::uint64_t seed = 1;
    std::string output;
};

/// Graph argument: "-" for stdin JSON, a readable file path, inline JSON, or
/// a named family like c5 / k4 / path6 / empty3.
Graph load_graph(const std::string& spec) {
    if (spec == "-") return Graph::from_json(read_input(spec));
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '['))
        return Graph::from_json(spec);
    std::ifstream probe(spec);
    if (probe.good()) return Graph::from_json(read_input(spec));
    return named_graph(spec);
}

AnalysisOptions analysis_options(const GlobalFlags& g) {
    AnalysisOptions opts;
    opts.tol = g.tol;
    opts.node_budget = g.node_budget;
    opts.hole_cap = g.hole_cap;
    opts.exhaustive = g.exhaustive;
    return opts;
}

ordered_json perfect_to_json(const PerfectReport& rep) {
    ordered_json j;
    j["status"] = perfect_status_name(rep.status);
    j["searched_up_to"] = rep.searched_up_to;
    if (rep.witness) {
        j["witness"] = one_based(rep.witness->cycle);
        j["witness_kind"] = rep.witness->anti ? "antihole" : "hole";
    }
    return j;
}

int cmd_analyze(const std::string& input_path, const GlobalFlags& flags) {
    const std::string bytes = read_input(input_path);
    ParseOptions popts;
    popts.merge_duplicates = flags.merge_duplicates;
    popts.normalize = flags.normalize;
    const Dataset ds = parse_dataset(bytes, popts);

    const auto opts = analysis_options(flags);
    const GapReport rep = decompose_gap(ds.dist, ds.epsilon, ds.norm, opts);

    ordered_json j;
    j["input_digest"] = fnv1a_digest(bytes);
    j["parameters"] = {{"epsilon", to_string(ds.epsilon)},
                       {"norm", ds.norm.to_wire()},
                       {"tol", flags.tol},
                       {"node_budget", flags.node_budget},
                       {"hole_cap", effective_hole_cap(ds.dist.size(), opts)}};
    j["structure"] = {{"n", rep.n},
                      {"conflict_edges", rep.conflict_edges},
                      {"max_hyperedges", rep.max_hyperedges},
                      {"max_cliques", rep.max_cliques}};
    j["fp"] = to_string(rep.fp_hypergraph);
    j["fp_cliques"] = to_string(rep.fp_cliques);
    j["ip"] = to_string(rep.ip);
    j["gap"] = to_string(rep.gap);
    j["term_conformal"] = to_string(rep.term_conformal);
    j["term_perfect"] = to_string(rep.term_perfect);
    j["deterministic_risk"] = to_string(Rational(1) - rep.ip);
    j["randomized_risk"] = to_string(Rational(1) - rep.fp_hypergraph);
    j["conformal"] = rep.conformal.conformal;
    if (rep.conformal.witness)
        j["conformal_witness"] = one_based(*rep.conformal.witness);
    j["perfect"] = perfect_to_json(rep.perfect);
    j["certificates"] = {
        {"q_frac", rationals_to_json(rep.fp_solution.q)},
        {"dual", rationals_to_json(rep.fp_solution.dual)},
        {"dual_value", to_string(rep.fp_solution.dual_value)},
        {"q_int", ordered_json::array()},
        {"ip_proven_optimal", rep.ip_solution.proven_optimal},
        {"ip_nodes", rep.ip_solution.nodes_explored}};
    for (auto v : rep.ip_solution.q)
        j["certificates"]["q_int"].push_back(static_cast<int>(v));
    if (flags.timing)
        j["timing_ms"] = {{"build", rep.build_ms},
                          {"solve", rep.solve_ms},
                          {"structure", rep.structure_ms}};

    write_output(flags.output, j.dump(2) + "\n");
    return 0;
}

int cmd_solve(const std::string& input_path, const GlobalFlags& flags) {
    const std::string bytes = read_input(input_path);
    auto [n, constraints] = hypergraph_from_json(bytes);

    std::vector<Rational> weights(n, Rational(1, n > 0 ? n : 1));
    if (nlohmann::json::parse(bytes).contains("weights"))
        weights = parse_rational_list(bytes, "weights");
    const auto inst = PackingInstance::from_raw(n, std::move(constraints),
                                                std::move(weights));
    const auto fp = solve_fractional(inst);
    const auto ip = solve_integral(inst, flags.node_budget);
    if (!ip.proven_optimal) throw BudgetError("node budget exhausted");

    ordered_json j;
    j["input_digest"] = fnv1a_digest(bytes);
    j["parameters"] = {{"node_budget", flags.node_budget}};
    j["n"] = inst.n;
    j["constraints"] = inst.constraints;  // after normalization, 0-based
    j["fp"] = to_string(fp.value);
    j["ip"] = to_string(ip.value);
    j["q_frac"] = rationals_to_json(fp.q);
    ordered_json qi = ordered_json::array();
    for (auto v : ip.q) qi.push_back(static_cast<int>(v));
    j["q_int"] = std::move(qi);
    j["dual"] = rationals_to_json(fp.dual);
    j["dual_value"] = to_string(fp.dual_value);
    j["gap"] = to_string(fp.value - ip.value);
    write_output(flags.output, j.dump(2) + "\n");
    return 0;
}

int cmd_check(const std::string& graph_path, const std::string& dataset_path,
              const GlobalFlags& flags) {
    ordered_json j;
    const auto opts = analysis_options(flags);
    j["parameters"] = {{"hole_cap", flags.hole_cap},
                       {"exhaustive", flags.exhaustive},
                       {"tol", flags.tol}};
    if (!graph_path.empty()) {
        const Graph g = load_graph(graph_path);
        j["input_digest"] = fnv1a_digest(g.to_json());
        j["n"] = g.size();
        j["edges"] = g.edge_count();
        j["perfect"] = perfect_to_json(
            check_perfect(g, effective_hole_cap(g.size(), opts)));
    } else {
        const std::string bytes = read_input(dataset_path);
        ParseOptions popts;
        popts.merge_duplicates = flags.merge_duplicates;
        popts.normalize = flags.normalize;
        const Dataset ds = parse_dataset(bytes, popts);
        const Graph g = build_conflict_graph(ds.dist, ds.epsilon, ds.norm, flags.tol);
        const auto h = build_conflict_hypergraph(ds.dist, ds.epsilon, ds.norm, flags.tol);
        const auto c = build_clique_hypergraph(g);
        j["input_digest"] = fnv1a_digest(bytes);
        j["n"] = g.size();
        j["edges"] = g.edge_count();
        j["perfect"] = perfect_to_json(
            check_perfect(g, effective_hole_cap(g.size(), opts)));
        const auto conf = check_conformal(h, c);
        j["conformal"] = conf.conformal;
        if (conf.witness) j["conformal_witness"] = one_based(*conf.witness);
    }
    write_output(flags.output, j.dump(2) + "\n");
    return 0;
}

int cmd_classify(const std::string& dataset_path, const std::string& packing_path,
                 const GlobalFlags& flags) {
    const std::string bytes = read_input(dataset_path);
    ParseOptions popts;
    popts.merge_duplicates = flags.merge_duplicates;
    popts.normalize = flags.normalize;
    const Dataset ds = parse_dataset(bytes, popts);

    const std::string packing_bytes = read_input(packing_path);
    const std::vector<Rational> q = parse_rational_list(packing_bytes, "q");

    const auto h = build_conflict_hypergraph(ds.dist, ds.epsilon, ds.norm, flags.tol);
    const auto f = classifier_from_packing(ds, h, q, flags.tol);
    const auto attacks = AttackSet::from_hypergraph(ds.dist, h);
    const auto q_hat = packing_from_classifier(ds.dist, h, f, attacks);

    Rational acc(0);
    for (int i = 0; i < ds.dist.size(); ++i) acc += ds.dist.weight(i) * q_hat[i];

    ordered_json j;
    j["input_digest"] = fnv1a_digest(bytes);
    j["parameters"] = {{"tol", flags.tol}};
    j["deterministic"] = f.is_deterministic();
    j["witnessed_margins"] = rationals_to_json(q_hat);
    j["witnessed_accuracy"] = to_string(acc);
    Rational base(0);
    for (int i = 0; i < ds.dist.size(); ++i) base += ds.dist.weight(i) * q[i];
    j["packing_value"] = to_string(base);
    write_output(flags.output, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adversarial-risk and randomization-gap toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.failure_message(CLI::FailureMessage::help);

    GlobalFlags flags;
    app.add_option("--tol", flags.tol, "geometry tolerance");
    app.add_option("--node-budget", flags.node_budget, "branch-and-bound node cap");
    app.add_option("--hole-cap", flags.hole_cap, "odd-hole search length cap");
    app.add_flag("--exhaustive", flags.exhaustive,
                 "search odd holes up to n for full perfectness certification");
    app.add_flag("--merge-duplicates", flags.merge_duplicates,
                 "sum weights of duplicate (coords, label) pairs");
    app.add_flag("--normalize", flags.normalize,
                 "rescale weights to sum 1 instead of rejecting");
    app.add_flag("--timing", flags.timing,
                 "include wall-clock timings (non-deterministic field)");
    app.add_option("--seed", flags.seed, "seed for randomized generators");
    app.add_option("--output", flags.output, "write the report to a file");

    std::string input = "-";
    auto* analyze = app.add_subcommand("analyze", "full gap analysis of a dataset");
    analyze->add_option("dataset", input, "dataset JSON path or - for stdin");

    // construct subcommands
    auto* construct = app.add_subcommand("construct", "generate datasets");
    construct->require_subcommand(1);
    int basis_k = 3;
    std::string basis_eps;
    auto* basis = construct->add_subcommand("basis", "canonical-basis dataset");
    basis->add_option("--k", basis_k, "number of classes (>= 2)")->required();
    basis->add_option("--eps", basis_eps, "epsilon (rational, default 7/9)");

    std::string fib_base = "c5", fib_norm = "2", fib_eps = "1/2";
    int fib_t = 1, fib_cap = 10000;
    auto* fibration = construct->add_subcommand(
        "fibration", "iterated 6-copy fibration dataset");
    fibration->add_option("--base", fib_base, "base graph (c5, c7, kN, JSON path)");
    fibration->add_option("--t", fib_t, "fibration iterations");
    fibration->add_option("--norm", fib_norm, "norm for the embedding");
    fibration->add_option("--eps", fib_eps, "epsilon for the embedding");
    fibration->add_option("--cap", fib_cap, "vertex cap");

    std::string embed_graph, embed_norm = "2", embed_eps = "1/2";
    auto* embed_sub = construct->add_subcommand(
        "embed", "embed a graph as a conflict-geometry dataset");
    embed_sub->add_option("--graph", embed_graph, "graph spec or JSON path")
        ->required();
    embed_sub->add_option("--norm", embed_norm, "norm (p or inf)");
    embed_sub->add_option("--eps", embed_eps, "epsilon (rational)");

    std::string example_name;
    auto* example = construct->add_subcommand("example", "built-in datasets");
    example
        ->add_option("--name", example_name,
                     "pentagon | triangle-pendant | antihole7 | basis3")
        ->required();

    int rg_n = 8;
    double rg_prob = 0.4;
    bool rg_trianglefree = false;
    auto* rgraph = construct->add_subcommand("random-graph", "seeded random graph");
    rgraph->add_option("--n", rg_n, "vertex count");
    rgraph->add_option("--edge-prob", rg_prob, "edge probability");
    rgraph->add_flag("--triangle-free", rg_trianglefree, "skip triangle-closing edges");

    // top-level embed alias
    std::string embed2_graph, embed2_norm = "2", embed2_eps = "1/2";
    auto* embed_top = app.add_subcommand("embed", "alias for construct embed");
    embed_top->add_option("--graph", embed2_graph, "graph spec or JSON path")
        ->required();
    embed_top->add_option("--norm", embed2_norm, "norm (p or inf)");
    embed_top->add_option("--eps", embed2_eps, "epsilon (rational)");

    std::string solve_input = "-";
    auto* solve = app.add_subcommand("solve", "exact FP/IP on a raw hypergraph");
    solve->add_option("hypergraph", solve_input, "hypergraph JSON path or -");

    std::string check_graph, check_dataset;
    auto* check = app.add_subcommand("check", "perfectness / conformality checks");
    check->add_option("--graph", check_graph, "graph JSON path or -");
    check->add_option("--dataset", check_dataset, "dataset JSON path or -");

    std::string cl_dataset, cl_packing;
    auto* classify = app.add_subcommand("classify", "evaluate a packing classifier");
    classify->add_option("--dataset", cl_dataset, "dataset JSON path or -")
        ->required();
    classify->add_option("--packing", cl_packing, "packing vector JSON path or -")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, flags);
        if (construct->parsed()) {
            if (rgraph->parsed()) {
                const Graph g = random_graph(rg_n, rg_prob, flags.seed, rg_trianglefree);
                write_output(flags.output, g.to_json());
                return 0;
            }
            Dataset ds = [&]() -> Dataset {
                if (basis->parsed()) {
                    const Rational eps = basis_eps.empty()
                                             ? canonical_basis_default_eps()
                                             : parse_rational(basis_eps);
                    return Dataset{canonical_basis_distribution(basis_k), eps,
                                   NormSpec::p_norm(Rational(2))};
                }
                if (fibration->parsed()) {
                    const Graph gt =
                        iterate_fibration(load_graph(fib_base), fib_t, fib_cap);
                    return graph_to_distribution(gt, parse_rational(fib_eps),
                                                 NormSpec::from_wire(fib_norm));
                }
                if (embed_sub->parsed())
                    return graph_to_distribution(load_graph(embed_graph),
                                                 parse_rational(embed_eps),
                                                 NormSpec::from_wire(embed_norm));
                if (example->parsed()) return example_dataset(example_name);
                throw ParseError("unreachable construct mode");
            }();
            write_output(flags.output, serialize_dataset(ds));
            return 0;
        }
        if (embed_top->parsed()) {
            const Dataset ds = graph_to_distribution(
                load_graph(embed2_graph), parse_rational(embed2_eps),
                NormSpec::from_wire(embed2_norm));
            write_output(flags.output, serialize_dataset(ds));
            return 0;
        }
        if (solve->parsed()) return cmd_solve(solve_input, flags);
        if (check->parsed()) {
            if (check_graph.empty() && check_dataset.empty())
                throw ParseError("check needs --graph or --dataset");
            return cmd_check(check_graph, check_dataset, flags);
        }
        if (classify->parsed()) return cmd_classify(cl_dataset, cl_packing, flags);
    } catch (const InconclusiveError& e) {
        std::cerr << "error (inconclusive geometry): " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
