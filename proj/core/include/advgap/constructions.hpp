#ifndef ADVGAP_CONSTRUCTIONS_HPP
#define ADVGAP_CONSTRUCTIONS_HPP

/// Generators for distributions and graphs with known gap behavior:
///   - the uniform canonical-basis distribution (all pairwise conflicts, no
///     triple overlap: non-conformal for K >= 3, gap 1/2 - 1/K),
///   - coordinate embeddings realizing any graph as the ball-intersection
///     graph of a point set, for the max norm and for any finite p > 1,
///   - proper colorings turning an embedded graph into a labeled dataset
///     whose conflict graph equals the input graph,
///   - the 6-copy fibration product, which preserves triangle-freeness while
///     letting the independence number grow by at most 4x per step, driving
///     the uniform-weight gap toward 1/2.

#include <cstdint>
#include <string>
#include <vector>

#include "advgap/dataset.hpp"
#include "advgap/graph.hpp"

namespace advgap {

using PlainGraph = Graph;

/// Rational default epsilon for the canonical basis: strictly between the
/// pairwise threshold sqrt(1/2) and the triple threshold sqrt(2/3), with at
/// least 4.9% relative margin to both.
Rational canonical_basis_default_eps();

/// Uniform distribution on {(b_k, k)}: K points, one per class. With eps in
/// the window above (p = 2), the conflict hypergraph has exactly all
/// 2-subsets as maximal hyperedges.
DiscreteDistribution canonical_basis_distribution(int k);

/// Max-norm embedding: n points in R^n with coordinates in
/// {0, 0.9*(2 eps), 1.1*(2 eps)}; adjacent vertices sit at distance
/// 1.8 eps <= 2 eps, non-adjacent at 2.2 eps > 2 eps. Exact rationals.
std::vector<std::vector<Rational>> embed_linf(const Graph& g, const Rational& eps);

/// Finite-p embedding into R^(n+m): unit incidence coordinates plus one
/// private coordinate of magnitude (n - deg_i)^(1/p), scaled by
/// 2 eps (2n-1)^(-1/p). Adjacent pairs land strictly inside the 2 eps
/// threshold, non-adjacent strictly outside (ratios ((2n-2)/(2n-1))^(1/p)
/// and (2n/(2n-1))^(1/p)). Coordinates are dyadic rationals, so integer p
/// decides every conflict exactly.
std::vector<std::vector<Rational>> embed_lp(const Graph& g, const Rational& eps,
                                            const NormSpec& norm);

struct Coloring {
    std::vector<int> color;  // 1-based
    int count = 0;
};

/// Proper coloring by DSATUR; not guaranteed minimal.
Coloring greedy_coloring(const Graph& g);

/// Embed g for the given norm, label vertices by a proper coloring, weight
/// uniformly. Postcondition (verified): the conflict graph of the result
/// equals g vertex-for-vertex.
Dataset graph_to_distribution(const Graph& g, const Rational& eps,
                              const NormSpec& norm);

/// The 6-copy fibration of g: vertex (v, c) -> index c*n + v, copies
/// 0..5; within-copy edges, cross edges between cyclically adjacent copies
/// for each edge of g (both orientations), and identity edges between
/// antipodal copies.
Graph fibrate(const Graph& g);

/// Apply fibrate t times; aborts when 6^t * n would exceed vertex_cap.
Graph iterate_fibration(const Graph& g, int t, int vertex_cap = 10000);

/// alpha(g) via exact unit-weight set packing over the edges.
int independence_number(const Graph& g, long node_budget = 1000000);

/// "c5", "k4", "path6", "empty3", or a raw graph JSON string.
Graph named_graph(const std::string& spec);

/// Erdős–Rényi-style graph from a fixed-seed generator; optionally skip any
/// edge that would close a triangle.
Graph random_graph(int n, double edge_prob, std::uint64_t seed,
                   bool triangle_free = false);

/// Built-in datasets: "pentagon" (5-cycle under the euclidean embedding),
/// "triangle-pendant" (joint 3-overlap plus a pendant conflict),
/// "antihole7" (seven max-norm points whose conflict graph is the
/// complement of the 7-cycle).
Dataset example_dataset(const std::string& name);

}  // namespace advgap

#endif
