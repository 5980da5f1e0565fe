#ifndef ADVGAP_CONFLICT_HPP
#define ADVGAP_CONFLICT_HPP

/// Conflict structures of a labeled distribution at level epsilon:
///   - the conflict graph (pairs of differently labeled points whose
///     epsilon-balls overlap),
///   - the conflict hypergraph, stored by its maximal hyperedges (a
///     hyperedge is a set with pairwise distinct labels whose balls share a
///     common point; the family is downward closed, so the maximal members
///     carry all binding constraints),
///   - the clique hypergraph (maximal cliques of the conflict graph).
/// Hypergraph wire format: { "n": int, "max_edges": [[...], ...] }, 0-based.

#include <optional>
#include <string>
#include <vector>

#include "advgap/dataset.hpp"
#include "advgap/geometry.hpp"
#include "advgap/graph.hpp"

namespace advgap {

using ConflictGraph = Graph;

/// Shared attack point for one maximal hyperedge.
struct HyperedgeWitness {
    std::vector<double> approx;
    std::optional<std::vector<Rational>> exact;
};

struct ConflictHypergraph {
    int n = 0;
    /// Antichain of maximal hyperedges, each sorted, family sorted
    /// lexicographically. Every vertex appears in at least one member
    /// (isolated vertices as singletons).
    std::vector<std::vector<int>> max_edges;
    /// witnesses[k] lies in every epsilon-ball of max_edges[k].
    std::vector<HyperedgeWitness> witnesses;
};

struct CliqueHypergraph {
    int n = 0;
    std::vector<std::vector<int>> max_edges;
};

ConflictGraph build_conflict_graph(const DiscreteDistribution& dist,
                                   const Rational& eps, const NormSpec& norm,
                                   double tol = kDefaultGeomTol);

ConflictHypergraph build_conflict_hypergraph(const DiscreteDistribution& dist,
                                             const Rational& eps,
                                             const NormSpec& norm,
                                             double tol = kDefaultGeomTol);

/// Maximal cliques by pivoted Bron-Kerbosch; isolated vertices yield
/// singleton hyperedges. Aborts with BudgetError past `max_cliques`.
CliqueHypergraph build_clique_hypergraph(const Graph& g,
                                         std::size_t max_cliques = 1000000);

/// Is `s` contained in some maximal hyperedge (i.e. is it a hyperedge of the
/// downward-closed family)?
bool hyperedge_contains(const std::vector<std::vector<int>>& max_edges,
                        const std::vector<int>& s);

std::string hypergraph_to_json(int n, const std::vector<std::vector<int>>& max_edges);
std::pair<int, std::vector<std::vector<int>>> hypergraph_from_json(
    const std::string& text);

}  // namespace advgap

#endif
