#ifndef ADVGAP_GEOMETRY_HPP
#define ADVGAP_GEOMETRY_HPP

/// Geometric oracle deciding whether a family of ℓp balls of common radius
/// epsilon shares a point. Exactness by norm:
///   - ℓ∞: per-coordinate intervals, fully exact in rationals.
///   - ℓ2: exact minimum enclosing ball (the squared Chebyshev radius is a
///     rational), so verdicts are exact comparisons of radius² against ε².
///   - integer p: pairwise tests compare Σ|Δ|^p with (2ε)^p exactly; joint
///     tests of three or more balls use the certified floating-point path.
///   - other p: floating-point subgradient descent with a dual lower-bound
///     certificate; verdicts inside the tolerance band are Inconclusive.

#include <optional>
#include <vector>

#include "advgap/dataset.hpp"
#include "advgap/rational.hpp"

namespace advgap {

enum class BallStatus { NonEmpty, Empty, Inconclusive };

struct IntersectionVerdict {
    BallStatus status = BallStatus::Inconclusive;
    /// Point within distance <= eps + tol of every input point (NonEmpty only).
    std::vector<double> witness;
    /// Exact rational witness when the norm admits one (ℓ2 / ℓ∞).
    std::optional<std::vector<Rational>> witness_exact;
    /// Signed estimate of (Chebyshev radius - eps); negative means overlap.
    double margin = 0.0;
    /// True when the verdict came from an exact arithmetic path.
    bool exact = false;
};

struct ChebyshevResult {
    std::vector<double> center;
    double radius = 0.0;
    /// radius is within tol of the true optimum.
    bool certified = false;
    /// Lower bound on the true radius (equals radius on exact paths).
    double radius_lower_bound = 0.0;
    /// Exact payloads for the rational paths.
    std::optional<std::vector<Rational>> exact_center;
    std::optional<Rational> exact_radius;     // ℓ∞
    std::optional<Rational> exact_radius_sq;  // ℓ2
};

constexpr double kDefaultGeomTol = 1e-9;

/// ‖a - b‖_p <= 2·eps? Exact for ℓ∞ and integer p; tolerance-based otherwise.
bool pairwise_conflict(const LabeledPoint& a, const LabeledPoint& b,
                       const Rational& eps, const NormSpec& norm,
                       double tol = kDefaultGeomTol);

/// Minimizer of max_i ‖x - x_i‖_p over x (the Chebyshev center of the set).
ChebyshevResult chebyshev_center(const std::vector<std::vector<Rational>>& points,
                                 const NormSpec& norm,
                                 double tol = kDefaultGeomTol);

/// Do the balls B_p(x_i, eps) share a common point?
IntersectionVerdict balls_intersect(const std::vector<std::vector<Rational>>& points,
                                    const Rational& eps, const NormSpec& norm,
                                    double tol = kDefaultGeomTol);

/// ‖v‖_p in doubles (finite p or infinity).
double norm_value(const std::vector<double>& v, const NormSpec& norm);

}  // namespace advgap

#endif
