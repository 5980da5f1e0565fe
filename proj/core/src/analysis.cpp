#include "advgap/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <stdexcept>

namespace advgap {

int effective_hole_cap(int n, const AnalysisOptions& opts) {
    const int odd_n = (n % 2 == 1) ? n : n - 1;
    const int cap = opts.exhaustive ? odd_n : std::min(odd_n, opts.hole_cap | 1);
    return std::max(5, cap);  // odd holes start at length 5
}

ConformalReport check_conformal(const ConflictHypergraph& h,
                                const CliqueHypergraph& c) {
    if (h.n != c.n) throw ParseError("check_conformal: vertex count mismatch");
    ConformalReport rep;
    for (const auto& clique : c.max_edges) {
        if (!hyperedge_contains(h.max_edges, clique)) {
            rep.conformal = false;
            rep.witness = clique;
            return rep;
        }
    }
    return rep;
}

namespace {

/// Backtracking extension of induced paths. The cycle is rooted at its
/// minimum vertex s; a candidate u must be adjacent to the path head and to
/// no interior vertex; adjacency back to s is only allowed when it closes an
/// odd cycle of admissible length.
bool extend_path(const Graph& g, std::vector<int>& path,
                 std::vector<char>& in_path, int max_len,
                 std::vector<int>& out) {
    const int s = path[0];
    const int head = path.back();
    const int len = static_cast<int>(path.size());
    for (int u = s + 1; u < g.size(); ++u) {
        if (in_path[u] || !g.has_edge(head, u)) continue;
        bool chord = false;
        for (int i = 1; i + 1 < len; ++i)
            if (g.has_edge(path[i], u)) { chord = true; break; }
        if (chord) continue;
        if (len >= 2 && g.has_edge(u, s)) {
            // closing edge: cycle (path..., u)
            const int cycle_len = len + 1;
            if (cycle_len >= 5 && cycle_len % 2 == 1 && path[1] < u) {
                out = path;
                out.push_back(u);
                return true;
            }
            continue;  // u cannot extend the path without creating a chord
        }
        if (len + 1 >= max_len) continue;  // no room to close an induced cycle
        path.push_back(u);
        in_path[u] = 1;
        if (extend_path(g, path, in_path, max_len, out)) return true;
        in_path[u] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len) {
    if (max_len < 5) return std::nullopt;
    std::vector<int> path, out;
    std::vector<char> in_path(g.size(), 0);
    for (int s = 0; s + 4 < g.size(); ++s) {
        path.assign(1, s);
        std::fill(in_path.begin(), in_path.end(), 0);
        in_path[s] = 1;
        if (extend_path(g, path, in_path, max_len, out)) return out;
    }
    return std::nullopt;
}

PerfectReport check_perfect(const Graph& g, int max_len) {
    if (max_len < 5 || max_len % 2 == 0)
        throw ParseError("check_perfect needs an odd max_len >= 5");
    PerfectReport rep;
    rep.searched_up_to = max_len;

    const int n = g.size();
    if (n < 5) {
        rep.status = PerfectStatus::Perfect;
        return rep;
    }

    std::optional<std::vector<int>> hole, antihole;
    const char* threads_env = std::getenv("ADVGAP_THREADS");
    const bool parallel = threads_env && std::atoi(threads_env) >= 2;
    if (parallel) {
        auto fut = std::async(std::launch::async, [&] {
            return find_odd_hole(g.complement(), max_len);
        });
        hole = find_odd_hole(g, max_len);
        antihole = fut.get();
    } else {
        hole = find_odd_hole(g, max_len);
        if (!hole) antihole = find_odd_hole(g.complement(), max_len);
    }

    if (hole) {
        rep.status = PerfectStatus::NotPerfect;
        rep.witness = PerfectWitness{*hole, false};
        return rep;
    }
    if (antihole) {
        rep.status = PerfectStatus::NotPerfect;
        rep.witness = PerfectWitness{*antihole, true};
        return rep;
    }
    rep.status = (max_len >= ((n % 2 == 1) ? n : n - 1))
                     ? PerfectStatus::Perfect
                     : PerfectStatus::Inconclusive;
    return rep;
}

GapReport decompose_gap(const DiscreteDistribution& dist, const Rational& eps,
                        const NormSpec& norm, const AnalysisOptions& opts) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    const auto t_build = clock::now();
    const Graph g = build_conflict_graph(dist, eps, norm, opts.tol);
    const ConflictHypergraph h = build_conflict_hypergraph(dist, eps, norm, opts.tol);
    const CliqueHypergraph c = build_clique_hypergraph(g, opts.clique_budget);

    const auto inst_h = PackingInstance::from_hypergraph(h, dist.weights());
    const auto inst_c = PackingInstance::from_clique_hypergraph(c, dist.weights());

    GapReport rep;
    rep.build_ms = ms_since(t_build);
    const auto t_solve = clock::now();
    rep.fp_solution = solve_fractional(inst_h);
    rep.fp_hypergraph = rep.fp_solution.value;
    rep.fp_cliques = solve_fractional(inst_c).value;

    rep.ip_solution = solve_integral(inst_h, opts.node_budget);
    if (!rep.ip_solution.proven_optimal)
        throw BudgetError("branch-and-bound node budget exhausted");
    const auto ip_c = solve_integral(inst_c, opts.node_budget);
    if (!ip_c.proven_optimal)
        throw BudgetError("branch-and-bound node budget exhausted");
    if (ip_c.value != rep.ip_solution.value)
        throw std::logic_error("IP(C) != IP(H): packing reformulation broken");
    rep.ip = rep.ip_solution.value;

    rep.gap = rep.fp_hypergraph - rep.ip;
    rep.term_conformal = rep.fp_hypergraph - rep.fp_cliques;
    rep.term_perfect = rep.fp_cliques - rep.ip;

    if (rep.term_conformal < 0 || rep.term_perfect < 0)
        throw std::logic_error("negative gap term (fractional ordering violated)");
    if (rep.gap != rep.term_conformal + rep.term_perfect)
        throw std::logic_error("gap decomposition does not add up");
    rep.solve_ms = ms_since(t_solve);

    const auto t_structure = clock::now();
    rep.conformal = check_conformal(h, c);
    rep.perfect = check_perfect(g, effective_hole_cap(g.size(), opts));
    rep.structure_ms = ms_since(t_structure);

    // a positive gap forces one of the two structural defects
    if (rep.gap > 0 && rep.conformal.conformal &&
        rep.perfect.status == PerfectStatus::Perfect)
        throw std::logic_error(
            "positive gap on a conformal, perfect instance (theory violated)");

    rep.n = dist.size();
    rep.conflict_edges = g.edge_count();
    rep.max_hyperedges = static_cast<int>(h.max_edges.size());
    rep.max_cliques = static_cast<int>(c.max_edges.size());
    return rep;
}

std::string perfect_status_name(PerfectStatus s) {
    switch (s) {
        case PerfectStatus::Perfect: return "Perfect";
        case PerfectStatus::NotPerfect: return "NotPerfect";
        case PerfectStatus::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

}  // namespace advgap
