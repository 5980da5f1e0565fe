#ifndef ADVGAP_CLASSIFIER_HPP
#define ADVGAP_CLASSIFIER_HPP

/// Evaluable randomized classifiers generated from fractional packings, and
/// the reverse direction: reading a feasible packing off a classifier by
/// probing it at hyperedge witness points.
///
/// The rule: at query x, collect for each class y the support points of
/// class y whose eps-ball contains x; the class score is the largest packing
/// entry among them; class 1 absorbs the residual probability. A binary
/// packing therefore yields a deterministic (Dirac) classifier. Every output
/// is an exact rational probability vector.

#include <vector>

#include "advgap/conflict.hpp"
#include "advgap/dataset.hpp"
#include "advgap/rational.hpp"

namespace advgap {

class RandomizedClassifier {
public:
    /// q must be feasible for the conflict hypergraph's packing constraints
    /// (checked exactly).
    RandomizedClassifier(const Dataset& ds, const ConflictHypergraph& h,
                         std::vector<Rational> q, double tol = kDefaultGeomTol);

    /// Probability vector over [K] at a rational query point. Exact ball
    /// membership for the max norm and integer p; tolerance-based otherwise.
    std::vector<Rational> evaluate(const std::vector<Rational>& x) const;

    bool is_deterministic() const;  // q binary

    const std::vector<Rational>& packing() const { return q_; }

private:
    std::vector<LabeledPoint> support_;
    int num_classes_;
    Rational eps_;
    NormSpec norm_;
    std::vector<Rational> q_;
    double tol_;
};

/// One attack point per maximal hyperedge (its ball-intersection witness),
/// plus every support point itself.
struct AttackSet {
    /// points[i] lists attacks aimed at support point i: the point itself
    /// first, then the witnesses of every maximal hyperedge containing i.
    std::vector<std::vector<std::vector<Rational>>> points;

    static AttackSet from_hypergraph(const DiscreteDistribution& dist,
                                     const ConflictHypergraph& h);
};

RandomizedClassifier classifier_from_packing(const Dataset& ds,
                                             const ConflictHypergraph& h,
                                             std::vector<Rational> q,
                                             double tol = kDefaultGeomTol);

/// Witness-restricted packing estimate: component i is the minimum of
/// f(.)^(y_i) over i's attack points. Feasible for the hypergraph's packing
/// constraints whenever every maximal hyperedge's witness is attacked
/// (asserted exactly).
std::vector<Rational> packing_from_classifier(const DiscreteDistribution& dist,
                                              const ConflictHypergraph& h,
                                              const RandomizedClassifier& f,
                                              const AttackSet& attacks);

/// sum_i w_i * min over i's attacks of f(.)^(y_i): an upper bound on the
/// true adversarial accuracy restricted to the witness attack set.
Rational witnessed_adversarial_accuracy(const DiscreteDistribution& dist,
                                        const ConflictHypergraph& h,
                                        const RandomizedClassifier& f,
                                        const AttackSet& attacks);

}  // namespace advgap

#endif
