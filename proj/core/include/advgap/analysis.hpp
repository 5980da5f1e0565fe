#ifndef ADVGAP_ANALYSIS_HPP
#define ADVGAP_ANALYSIS_HPP

/// Structural diagnoses behind a positive randomization gap, and the exact
/// two-term decomposition
///     gap = [FP(H) - FP(C)] + [FP(C) - IP(C)],
/// where the first term vanishes iff the conflict hypergraph is conformal
/// (every clique of the conflict graph is a hyperedge) and the second
/// vanishes for every weight vector iff the conflict graph is perfect.
/// Perfectness is certified by bounded exhaustive odd-hole search on the
/// graph and its complement rather than polynomial-time recognition; at desk
/// scale the exhaustive search doubles as its own certificate.

#include <optional>
#include <string>
#include <vector>

#include "advgap/conflict.hpp"
#include "advgap/dataset.hpp"
#include "advgap/packing.hpp"

namespace advgap {

struct PerfectWitness {
    std::vector<int> cycle;  // vertices of the hole, in cycle order
    bool anti = false;       // witness is an odd anti-hole
};

enum class PerfectStatus { Perfect, NotPerfect, Inconclusive };

struct PerfectReport {
    PerfectStatus status = PerfectStatus::Inconclusive;
    std::optional<PerfectWitness> witness;
    int searched_up_to = 0;  // largest odd hole length examined
};

struct ConformalReport {
    bool conformal = true;
    std::optional<std::vector<int>> witness;  // maximal clique not in H
};

struct GapReport {
    Rational fp_hypergraph;   // FP(H)
    Rational fp_cliques;      // FP(C)
    Rational ip;              // IP(H) = IP(C), asserted equal
    Rational gap;             // FP(H) - IP
    Rational term_conformal;  // FP(H) - FP(C)
    Rational term_perfect;    // FP(C) - IP(C)
    ConformalReport conformal;
    PerfectReport perfect;
    // structure summary
    int n = 0;
    int conflict_edges = 0;
    int max_hyperedges = 0;
    int max_cliques = 0;
    FractionalSolution fp_solution;   // over H's maximal hyperedges
    IntegralSolution ip_solution;     // over H's maximal hyperedges
    // wall-clock per phase (diagnostic only, not part of the exact contract)
    double build_ms = 0;
    double solve_ms = 0;
    double structure_ms = 0;
};

struct AnalysisOptions {
    double tol = kDefaultGeomTol;
    long node_budget = kDefaultNodeBudget;
    int hole_cap = 13;        // largest odd hole length tried by default
    bool exhaustive = false;  // raise the cap to n for full certification
    std::size_t clique_budget = 1000000;
};

/// Default search cap: min(n odd-capped, 13), raised to cover all of n when
/// exhaustive is set.
int effective_hole_cap(int n, const AnalysisOptions& opts);

/// Every maximal clique of C a hyperedge of H? Witness: first failing clique.
ConformalReport check_conformal(const ConflictHypergraph& h,
                                const CliqueHypergraph& c);

/// First induced odd cycle of length in [5, max_len], lexicographically least
/// under ascending search order, or nothing.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len);

/// Searches g for odd holes and complement(g) for odd anti-holes. Perfect
/// only when both searches were exhaustive (max_len covers n).
PerfectReport check_perfect(const Graph& g, int max_len);

/// Full structural report for a distribution at level eps.
GapReport decompose_gap(const DiscreteDistribution& dist, const Rational& eps,
                        const NormSpec& norm, const AnalysisOptions& opts = {});

std::string perfect_status_name(PerfectStatus s);

}  // namespace advgap

#endif
