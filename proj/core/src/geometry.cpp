#include "advgap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "advgap/errors.hpp"

namespace advgap {

namespace {

// ---------------------------------------------------------------------------
// exact helpers
// ---------------------------------------------------------------------------

Rational linf_distance(const std::vector<Rational>& a,
                       const std::vector<Rational>& b) {
    Rational best(0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        Rational d = rational_abs(a[j] - b[j]);
        if (d > best) best = d;
    }
    return best;
}

/// sum_j |a_j - b_j|^p for integer p
Rational lp_power_distance(const std::vector<Rational>& a,
                           const std::vector<Rational>& b, unsigned long p) {
    Rational sum(0);
    for (std::size_t j = 0; j < a.size(); ++j)
        sum += pow_int(rational_abs(a[j] - b[j]), p);
    return sum;
}

double lp_distance_double(const std::vector<double>& a,
                          const std::vector<double>& b, const NormSpec& norm) {
    if (norm.is_infinity()) {
        double best = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            best = std::max(best, std::fabs(a[j] - b[j]));
        return best;
    }
    const double p = norm.p_double();
    double sum = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        sum += std::pow(std::fabs(a[j] - b[j]), p);
    return std::pow(sum, 1.0 / p);
}

// ---------------------------------------------------------------------------
// exact minimum enclosing ball for the euclidean norm (Welzl)
// ---------------------------------------------------------------------------

struct RatBall {
    std::vector<Rational> center;
    Rational r2{0};
    bool valid = false;
};

bool ball_contains(const RatBall& ball, const std::vector<Rational>& p) {
    if (!ball.valid) return false;
    Rational d2(0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        Rational d = p[j] - ball.center[j];
        d2 += d * d;
    }
    return d2 <= ball.r2;
}

/// Smallest ball with every point of `boundary` on its surface: the
/// circumball within the affine hull. Invalid when the set is affinely
/// dependent (does not happen for boundary sets produced by Welzl's
/// recursion on distinct points).
RatBall circumball(const std::vector<const std::vector<Rational>*>& boundary) {
    RatBall ball;
    if (boundary.empty()) return ball;
    const std::size_t dim = boundary[0]->size();
    const std::size_t k = boundary.size() - 1;
    if (k == 0) {
        ball.center = *boundary[0];
        ball.r2 = 0;
        ball.valid = true;
        return ball;
    }
    // v_i = boundary[i+1] - boundary[0]; solve (2 v_i . v_j) lambda = (v_i . v_i)
    std::vector<std::vector<Rational>> v(k, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            v[i][j] = (*boundary[i + 1])[j] - (*boundary[0])[j];

    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational dot(0);
            for (std::size_t t = 0; t < dim; ++t) dot += v[i][t] * v[j][t];
            m[i][j] = 2 * dot;
        }
        Rational rhs(0);
        for (std::size_t t = 0; t < dim; ++t) rhs += v[i][t] * v[i][t];
        m[i][k] = rhs;
    }
    // gaussian elimination
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return ball;  // affinely dependent
        std::swap(m[col], m[pivot]);
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t cc = col; cc <= k; ++cc) m[row][cc] -= factor * m[col][cc];
        }
    }
    std::vector<Rational> lambda(k);
    for (std::size_t i = 0; i < k; ++i) lambda[i] = m[i][k] / m[i][i];

    ball.center = *boundary[0];
    std::vector<Rational> offset(dim, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j) offset[j] += lambda[i] * v[i][j];
    for (std::size_t j = 0; j < dim; ++j) ball.center[j] += offset[j];
    ball.r2 = 0;
    for (std::size_t j = 0; j < dim; ++j) ball.r2 += offset[j] * offset[j];
    ball.valid = true;
    return ball;
}

RatBall welzl_recurse(const std::vector<std::vector<Rational>>& pts, std::size_t n,
                      std::vector<const std::vector<Rational>*>& boundary,
                      std::size_t max_boundary) {
    if (n == 0 || boundary.size() == max_boundary) return circumball(boundary);
    RatBall ball = welzl_recurse(pts, n - 1, boundary, max_boundary);
    if (ball_contains(ball, pts[n - 1])) return ball;
    boundary.push_back(&pts[n - 1]);
    ball = welzl_recurse(pts, n - 1, boundary, max_boundary);
    boundary.pop_back();
    return ball;
}

/// Exact euclidean minimum enclosing ball of distinct points.
RatBall min_enclosing_ball(const std::vector<std::vector<Rational>>& pts) {
    std::vector<const std::vector<Rational>*> boundary;
    RatBall ball = welzl_recurse(pts, pts.size(), boundary, pts[0].size() + 1);
    if (!ball.valid) throw InconclusiveError("degenerate enclosing-ball system");
    return ball;
}

std::vector<std::vector<Rational>> dedupe(
    const std::vector<std::vector<Rational>>& pts) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : out)
            if (q == p) { seen = true; break; }
        if (!seen) out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// floating-point chebyshev center for general p (subgradient + dual bound)
// ---------------------------------------------------------------------------

struct FloatResult {
    std::vector<double> center;
    double radius = 0;
    double lower_bound = 0;
};

/// Dual certificate: for unit dual-norm directions u_i at the incumbent and
/// any simplex weights lambda,
///   max_i ||y - x_i||_p >= sum_i lambda_i ||xhat - x_i||_p
///                          - ||sum_i lambda_i u_i||_q * ||y - xhat||_p,
/// and the minimizer satisfies ||y* - xhat||_p <= 2 * f(xhat).
/// `window` is the relative slack for treating a point as active; the bound
/// is valid for every window, so the caller scans a few.
double dual_lower_bound(const std::vector<std::vector<double>>& pts,
                        const std::vector<double>& xhat, double fx, double p,
                        double window) {
    const double q = p / (p - 1.0);
    const std::size_t dim = xhat.size();

    std::vector<std::size_t> active;
    std::vector<double> dist(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double s = 0;
        for (std::size_t j = 0; j < dim; ++j)
            s += std::pow(std::fabs(xhat[j] - pts[i][j]), p);
        dist[i] = std::pow(s, 1.0 / p);
        if (dist[i] >= fx * (1.0 - window) - 1e-12) active.push_back(i);
    }
    if (active.empty()) return 0;

    // u_i = dual-unit direction with u_i . (x_i - xhat) = ||x_i - xhat||_p
    std::vector<std::vector<double>> u(active.size(), std::vector<double>(dim));
    for (std::size_t a = 0; a < active.size(); ++a) {
        const auto& x = pts[active[a]];
        const double d = dist[active[a]];
        if (d == 0) return 0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double z = x[j] - xhat[j];
            const double mag = std::pow(std::fabs(z) / d, p - 1.0);
            u[a][j] = (z >= 0 ? mag : -mag);
        }
    }

    // minimize ||sum lambda_a u_a||_2^2 over the simplex (projected gradient)
    std::vector<double> lambda(active.size(), 1.0 / active.size());
    std::vector<double> w(dim);
    auto compute_w = [&] {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t a = 0; a < active.size(); ++a)
            for (std::size_t j = 0; j < dim; ++j) w[j] += lambda[a] * u[a][j];
    };
    auto project_simplex = [](std::vector<double>& v) {
        std::vector<double> s = v;
        std::sort(s.begin(), s.end(), std::greater<double>());
        double cum = 0, theta = 0;
        int k = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            cum += s[i];
            const double t = (cum - 1.0) / static_cast<double>(i + 1);
            if (s[i] - t > 0) { theta = t; k = static_cast<int>(i) + 1; }
        }
        (void)k;
        for (auto& x : v) x = std::max(0.0, x - theta);
    };
    compute_w();
    double max_u2 = 0;
    for (const auto& ua : u) {
        double s = 0;
        for (double c : ua) s += c * c;
        max_u2 = std::max(max_u2, s);
    }
    const double step =
        0.9 / (2.0 * std::max(1e-12, max_u2) * static_cast<double>(active.size()));
    for (int it = 0; it < 400; ++it) {
        std::vector<double> grad(active.size(), 0.0);
        for (std::size_t a = 0; a < active.size(); ++a)
            for (std::size_t j = 0; j < dim; ++j) grad[a] += 2.0 * w[j] * u[a][j];
        for (std::size_t a = 0; a < active.size(); ++a) lambda[a] -= step * grad[a];
        project_simplex(lambda);
        compute_w();
    }

    double wq = 0;
    for (std::size_t j = 0; j < dim; ++j) wq += std::pow(std::fabs(w[j]), q);
    wq = std::pow(wq, 1.0 / q);

    double weighted = 0;
    for (std::size_t a = 0; a < active.size(); ++a)
        weighted += lambda[a] * dist[active[a]];

    return weighted - 2.0 * fx * wq;
}

double best_dual_lower_bound(const std::vector<std::vector<double>>& pts,
                             const std::vector<double>& xhat, double fx,
                             double p) {
    double best = 0;
    for (double window : {1e-7, 1e-4, 1e-3, 1e-2, 3e-2, 1e-1})
        best = std::max(best, dual_lower_bound(pts, xhat, fx, p, window));
    return best;
}

FloatResult chebyshev_float(const std::vector<std::vector<Rational>>& rpts,
                            const NormSpec& norm, double tol) {
    const double p = norm.p_double();
    std::vector<std::vector<double>> pts;
    pts.reserve(rpts.size());
    for (const auto& rp : rpts) pts.push_back(to_double(rp));
    const std::size_t dim = pts[0].size();

    // warm start at the exact euclidean center, a good seed for moderate p
    std::vector<double> x;
    try {
        x = to_double(min_enclosing_ball(dedupe(rpts)).center);
    } catch (const InconclusiveError&) {
        x.assign(dim, 0.0);
        for (const auto& pt : pts)
            for (std::size_t j = 0; j < dim; ++j) x[j] += pt[j];
        for (auto& c : x) c /= static_cast<double>(pts.size());
    }

    auto eval = [&](const std::vector<double>& y, std::size_t& arg) {
        double best = -1;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double s = 0;
            for (std::size_t j = 0; j < dim; ++j)
                s += std::pow(std::fabs(y[j] - pts[i][j]), p);
            s = std::pow(s, 1.0 / p);
            if (s > best) { best = s; arg = i; }
        }
        return best;
    };

    std::size_t arg = 0;
    double fx = eval(x, arg);
    std::vector<double> best_x = x;
    double best_f = fx;
    const double scale = std::max(fx, 1e-30);

    const int cap = 100000;
    for (int k = 1; k <= cap; ++k) {
        // subgradient of max_i ||x - x_i||_p at the active point
        const auto& a = pts[arg];
        double s = 0;
        for (std::size_t j = 0; j < dim; ++j)
            s += std::pow(std::fabs(x[j] - a[j]), p);
        const double d = std::pow(s, 1.0 / p);
        if (d <= 0) break;
        const double step = scale / std::sqrt(static_cast<double>(k));
        for (std::size_t j = 0; j < dim; ++j) {
            const double z = x[j] - a[j];
            const double g = (z >= 0 ? 1.0 : -1.0) * std::pow(std::fabs(z) / d, p - 1.0);
            x[j] -= step * g;
        }
        fx = eval(x, arg);
        if (fx < best_f) { best_f = fx; best_x = x; }
        if (k > 4000 && (k % 5000) == 0) {
            const double lb = best_dual_lower_bound(pts, best_x, best_f, p);
            if (best_f - lb <= tol) break;
        }
    }

    FloatResult out;
    out.center = best_x;
    out.radius = best_f;
    double lb = best_dual_lower_bound(pts, best_x, best_f, p);
    // any enclosing ball covers every pair, so radius >= max pair distance / 2
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            lb = std::max(lb, lp_distance_double(pts[i], pts[j], norm) / 2.0);
    out.lower_bound = std::min(lb, best_f);
    return out;
}

}  // namespace

double norm_value(const std::vector<double>& v, const NormSpec& norm) {
    if (norm.is_infinity()) {
        double best = 0;
        for (double c : v) best = std::max(best, std::fabs(c));
        return best;
    }
    const double p = norm.p_double();
    double s = 0;
    for (double c : v) s += std::pow(std::fabs(c), p);
    return std::pow(s, 1.0 / p);
}

bool pairwise_conflict(const LabeledPoint& a, const LabeledPoint& b,
                       const Rational& eps, const NormSpec& norm, double tol) {
    if (a.coords.size() != b.coords.size())
        throw ParseError("pairwise_conflict: dimension mismatch");
    const Rational two_eps = 2 * eps;
    if (norm.is_infinity())
        return linf_distance(a.coords, b.coords) <= two_eps;
    if (norm.is_integer_p()) {
        const unsigned long p = norm.p_integer();
        return lp_power_distance(a.coords, b.coords, p) <= pow_int(two_eps, p);
    }
    const double d = lp_distance_double(to_double(a.coords), to_double(b.coords), norm);
    return d <= to_double(two_eps) + tol;
}

ChebyshevResult chebyshev_center(const std::vector<std::vector<Rational>>& points,
                                 const NormSpec& norm, double tol) {
    if (points.empty()) throw ParseError("chebyshev_center: empty point list");
    ChebyshevResult res;

    if (points.size() == 1) {
        res.center = to_double(points[0]);
        res.radius = 0;
        res.radius_lower_bound = 0;
        res.certified = true;
        res.exact_center = points[0];
        res.exact_radius = Rational(0);
        res.exact_radius_sq = Rational(0);
        return res;
    }

    if (norm.is_infinity()) {
        const std::size_t dim = points[0].size();
        std::vector<Rational> center(dim);
        Rational diameter(0);
        for (std::size_t j = 0; j < dim; ++j) {
            Rational lo = points[0][j], hi = points[0][j];
            for (const auto& pt : points) {
                if (pt[j] < lo) lo = pt[j];
                if (pt[j] > hi) hi = pt[j];
            }
            center[j] = (lo + hi) / 2;
            if (hi - lo > diameter) diameter = hi - lo;
        }
        res.exact_center = center;
        res.exact_radius = diameter / 2;
        res.center = to_double(center);
        res.radius = to_double(*res.exact_radius);
        res.radius_lower_bound = res.radius;
        res.certified = true;
        return res;
    }

    if (!norm.is_infinity() && norm.p() == 2) {
        const auto pts = dedupe(points);
        const RatBall ball = min_enclosing_ball(pts);
        res.exact_center = ball.center;
        res.exact_radius_sq = ball.r2;
        res.center = to_double(ball.center);
        res.radius = std::sqrt(to_double(ball.r2));
        res.radius_lower_bound = res.radius;
        res.certified = true;
        return res;
    }

    // two points: the midpoint is optimal for every lp norm
    if (points.size() == 2) {
        const std::size_t dim = points[0].size();
        std::vector<Rational> mid(dim);
        for (std::size_t j = 0; j < dim; ++j) mid[j] = (points[0][j] + points[1][j]) / 2;
        res.exact_center = mid;
        res.center = to_double(mid);
        std::vector<double> diff(dim);
        for (std::size_t j = 0; j < dim; ++j)
            diff[j] = to_double(points[0][j]) - to_double(points[1][j]);
        res.radius = norm_value(diff, norm) / 2.0;
        res.radius_lower_bound = res.radius;
        res.certified = true;
        return res;
    }

    const FloatResult fr = chebyshev_float(points, norm, tol);
    res.center = fr.center;
    res.radius = fr.radius;
    res.radius_lower_bound = fr.lower_bound;
    res.certified = (fr.radius - fr.lower_bound) <= tol;
    return res;
}

IntersectionVerdict balls_intersect(const std::vector<std::vector<Rational>>& points,
                                    const Rational& eps, const NormSpec& norm,
                                    double tol) {
    if (points.empty()) throw ParseError("balls_intersect: empty point list");
    IntersectionVerdict verdict;
    const double eps_d = to_double(eps);

    if (points.size() == 1) {
        verdict.status = BallStatus::NonEmpty;
        verdict.witness = to_double(points[0]);
        verdict.witness_exact = points[0];
        verdict.margin = -eps_d;
        verdict.exact = true;
        return verdict;
    }

    if (norm.is_infinity()) {
        const auto cheb = chebyshev_center(points, norm, tol);
        const bool nonempty = *cheb.exact_radius <= eps;
        verdict.status = nonempty ? BallStatus::NonEmpty : BallStatus::Empty;
        verdict.margin = cheb.radius - eps_d;
        verdict.exact = true;
        if (nonempty) {
            verdict.witness = cheb.center;
            verdict.witness_exact = cheb.exact_center;
        }
        return verdict;
    }

    if (norm.is_integer_p() && norm.p_integer() == 2) {
        const auto cheb = chebyshev_center(points, norm, tol);
        const bool nonempty = *cheb.exact_radius_sq <= eps * eps;
        verdict.status = nonempty ? BallStatus::NonEmpty : BallStatus::Empty;
        verdict.margin = cheb.radius - eps_d;
        verdict.exact = true;
        if (nonempty) {
            verdict.witness = cheb.center;
            verdict.witness_exact = cheb.exact_center;
        }
        return verdict;
    }

    if (points.size() == 2) {
        const std::size_t dim = points[0].size();
        std::vector<Rational> mid(dim);
        for (std::size_t j = 0; j < dim; ++j) mid[j] = (points[0][j] + points[1][j]) / 2;
        if (norm.is_integer_p()) {
            const unsigned long p = norm.p_integer();
            // balls overlap iff the pair distance is at most 2*eps
            const Rational dp = lp_power_distance(points[0], points[1], p);
            const bool nonempty = dp <= pow_int(2 * eps, p);
            verdict.status = nonempty ? BallStatus::NonEmpty : BallStatus::Empty;
            verdict.margin =
                std::pow(to_double(dp), 1.0 / static_cast<double>(p)) / 2.0 - eps_d;
            verdict.exact = true;
            if (nonempty) {
                verdict.witness = to_double(mid);
                verdict.witness_exact = mid;
            }
            return verdict;
        }
        const double d =
            lp_distance_double(to_double(points[0]), to_double(points[1]), norm);
        verdict.margin = d / 2.0 - eps_d;
        if (d / 2.0 <= eps_d + tol) {
            verdict.status = BallStatus::NonEmpty;
            verdict.witness = to_double(mid);
            verdict.witness_exact = mid;
        } else {
            verdict.status = BallStatus::Empty;
        }
        return verdict;
    }

    const auto cheb = chebyshev_center(points, norm, tol);
    verdict.margin = cheb.radius - eps_d;
    if (cheb.radius <= eps_d + tol) {
        verdict.status = BallStatus::NonEmpty;
        verdict.witness = cheb.center;
    } else if (cheb.radius_lower_bound > eps_d + tol) {
        verdict.status = BallStatus::Empty;
    } else {
        verdict.status = BallStatus::Inconclusive;
    }
    return verdict;
}

}  // namespace advgap
