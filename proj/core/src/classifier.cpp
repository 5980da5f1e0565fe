#include "advgap/classifier.hpp"

#include <stdexcept>

#include "advgap/geometry.hpp"

namespace advgap {

namespace {

/// x in B_p(c, eps)? Exact for the max norm and integer p.
bool ball_member(const std::vector<Rational>& x, const std::vector<Rational>& c,
                 const Rational& eps, const NormSpec& norm, double tol) {
    if (norm.is_infinity()) {
        for (std::size_t j = 0; j < x.size(); ++j)
            if (rational_abs(x[j] - c[j]) > eps) return false;
        return true;
    }
    if (norm.is_integer_p()) {
        const unsigned long p = norm.p_integer();
        Rational sum(0);
        for (std::size_t j = 0; j < x.size(); ++j)
            sum += pow_int(rational_abs(x[j] - c[j]), p);
        return sum <= pow_int(eps, p);
    }
    std::vector<double> diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        diff[j] = to_double(x[j]) - to_double(c[j]);
    return norm_value(diff, norm) <= to_double(eps) + tol;
}

void check_feasible(const ConflictHypergraph& h, const std::vector<Rational>& q,
                    int n) {
    if (static_cast<int>(q.size()) != n)
        throw ParseError("packing vector length mismatch");
    for (const auto& e : q)
        if (e < 0 || e > 1) throw ParseError("packing entries must lie in [0,1]");
    for (const auto& edge : h.max_edges) {
        Rational sum(0);
        for (int v : edge) sum += q[v];
        if (sum > 1)
            throw ParseError("packing vector infeasible for the conflict hypergraph");
    }
}

}  // namespace

RandomizedClassifier::RandomizedClassifier(const Dataset& ds,
                                           const ConflictHypergraph& h,
                                           std::vector<Rational> q, double tol)
    : support_(ds.dist.support()),
      num_classes_(ds.dist.num_classes()),
      eps_(ds.epsilon),
      norm_(ds.norm),
      q_(std::move(q)),
      tol_(tol) {
    check_feasible(h, q_, ds.dist.size());
}

std::vector<Rational> RandomizedClassifier::evaluate(
    const std::vector<Rational>& x) const {
    if (x.size() != support_[0].coords.size())
        throw ParseError("query dimension mismatch");

    // score[y] = max q_i over support points of class y whose ball contains x
    std::vector<Rational> score(num_classes_ + 1, Rational(0));
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (!ball_member(x, support_[i].coords, eps_, norm_, tol_)) continue;
        const int y = support_[i].label;
        if (q_[i] > score[y]) score[y] = q_[i];
    }

    std::vector<Rational> out(num_classes_, Rational(0));
    Rational rest(0);
    for (int y = 2; y <= num_classes_; ++y) {
        out[y - 1] = score[y];
        rest += score[y];
    }
    out[0] = Rational(1) - rest;  // class 1 takes the residual
    if (out[0] < 0)
        throw std::logic_error("classifier output left the simplex");
    return out;
}

bool RandomizedClassifier::is_deterministic() const {
    for (const auto& v : q_)
        if (v != 0 && v != 1) return false;
    return true;
}

AttackSet AttackSet::from_hypergraph(const DiscreteDistribution& dist,
                                     const ConflictHypergraph& h) {
    AttackSet as;
    as.points.resize(dist.size());
    for (int i = 0; i < dist.size(); ++i)
        as.points[i].push_back(dist.point(i).coords);
    for (std::size_t k = 0; k < h.max_edges.size(); ++k) {
        const auto& w = h.witnesses[k];
        std::vector<Rational> attack;
        if (w.exact) {
            attack = *w.exact;
        } else {
            attack.reserve(w.approx.size());
            for (double c : w.approx) {
                // dyadic snapshot of the floating witness
                Rational r(static_cast<long>(c * (1L << 30)), 1L << 30);
                r.canonicalize();
                attack.push_back(std::move(r));
            }
        }
        for (int v : h.max_edges[k]) as.points[v].push_back(attack);
    }
    return as;
}

RandomizedClassifier classifier_from_packing(const Dataset& ds,
                                             const ConflictHypergraph& h,
                                             std::vector<Rational> q, double tol) {
    return RandomizedClassifier(ds, h, std::move(q), tol);
}

std::vector<Rational> packing_from_classifier(const DiscreteDistribution& dist,
                                              const ConflictHypergraph& h,
                                              const RandomizedClassifier& f,
                                              const AttackSet& attacks) {
    const int n = dist.size();
    if (static_cast<int>(attacks.points.size()) != n)
        throw ParseError("attack set size mismatch");
    std::vector<Rational> q(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        const int y = dist.point(i).label;
        bool first = true;
        for (const auto& attack : attacks.points[i]) {
            const auto probs = f.evaluate(attack);
            const Rational& p = probs[y - 1];
            if (first || p < q[i]) q[i] = p;
            first = false;
        }
    }
    // the estimate is a feasible fractional packing: each maximal hyperedge's
    // witness is attacked by all its members, whose class probabilities at
    // that single point sum to at most one
    for (const auto& e : h.max_edges) {
        Rational sum(0);
        for (int v : e) sum += q[v];
        if (sum > 1)
            throw std::logic_error("witnessed packing estimate infeasible");
    }
    return q;
}

Rational witnessed_adversarial_accuracy(const DiscreteDistribution& dist,
                                        const ConflictHypergraph& h,
                                        const RandomizedClassifier& f,
                                        const AttackSet& attacks) {
    const auto q = packing_from_classifier(dist, h, f, attacks);
    Rational acc(0);
    for (int i = 0; i < dist.size(); ++i) acc += dist.weight(i) * q[i];
    return acc;
}

}  // namespace advgap
