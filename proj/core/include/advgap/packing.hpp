#ifndef ADVGAP_PACKING_HPP
#define ADVGAP_PACKING_HPP

/// Exact solvers for weighted set packing and its LP relaxation.
///
///   IP(H, w) = max w'q  over q in {0,1}^n with sum_{i in e} q_i <= 1 for
///              every constraint e;
///   FP(H, w) = the same over q in [0,1]^n.
///
/// The fractional problem is solved by rational-arithmetic primal simplex
/// (Bland's rule), returning a primal/dual pair with value equality verified
/// exactly. The integral problem runs LP-based branch and bound with exact
/// pruning. Constraints are the maximal hyperedges only; subset constraints
/// are dominated and dropped during normalization.

#include <cstdint>
#include <vector>

#include "advgap/conflict.hpp"
#include "advgap/dataset.hpp"
#include "advgap/graph.hpp"
#include "advgap/rational.hpp"

namespace advgap {

struct PackingInstance {
    int n = 0;
    std::vector<std::vector<int>> constraints;  // sorted sets over [0, n)
    std::vector<Rational> weights;              // nonnegative, length n

    static PackingInstance from_hypergraph(const ConflictHypergraph& h,
                                           std::vector<Rational> weights);
    static PackingInstance from_clique_hypergraph(const CliqueHypergraph& c,
                                                  std::vector<Rational> weights);
    static PackingInstance from_graph(const Graph& g,
                                      std::vector<Rational> weights);
    static PackingInstance from_raw(int n,
                                    std::vector<std::vector<int>> constraints,
                                    std::vector<Rational> weights);

    /// Antichain constraints plus a singleton for every uncovered vertex.
    PackingInstance normalized() const;

    void validate() const;
};

struct FractionalSolution {
    std::vector<Rational> q;     // in [0,1]^n, feasible
    Rational value;              // w'q
    std::vector<Rational> dual;  // cover weights per constraint, feasible
    Rational dual_value;         // equals value (strong duality, exact)
};

struct IntegralSolution {
    std::vector<std::uint8_t> q;  // in {0,1}^n, feasible
    Rational value;
    bool proven_optimal = false;
    long nodes_explored = 0;
};

inline constexpr long kDefaultNodeBudget = 1000000;

/// Exact optimum of the LP relaxation with a verified dual certificate.
FractionalSolution solve_fractional(const PackingInstance& inst);

/// Exact integral optimum; proven_optimal is false when the node budget ran
/// out (the incumbent is still feasible).
IntegralSolution solve_integral(const PackingInstance& inst,
                                long node_budget = kDefaultNodeBudget);

struct RiskOptions {
    double tol = kDefaultGeomTol;
    long node_budget = kDefaultNodeBudget;
};

/// 1 - IP over the conflict hypergraph. Throws BudgetError when the search
/// could not certify optimality.
Rational deterministic_adversarial_risk(const DiscreteDistribution& dist,
                                        const Rational& eps, const NormSpec& norm,
                                        const RiskOptions& opts = {});

/// 1 - FP over the conflict hypergraph.
Rational randomized_adversarial_risk(const DiscreteDistribution& dist,
                                     const Rational& eps, const NormSpec& norm,
                                     const RiskOptions& opts = {});

/// FP - IP over the conflict hypergraph, both certified.
Rational randomization_gap(const DiscreteDistribution& dist, const Rational& eps,
                           const NormSpec& norm, const RiskOptions& opts = {});

}  // namespace advgap

#endif
