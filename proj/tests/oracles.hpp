#ifndef ADVGAP_TEST_ORACLES_HPP
#define ADVGAP_TEST_ORACLES_HPP

// Independent reference implementations used only by tests: exhaustive
// packing enumeration, multiscale grid search for Chebyshev radii, brute
// force induced-odd-cycle detection, and small random dataset generators.
// These deliberately avoid the library's solver paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "advgap/dataset.hpp"
#include "advgap/graph.hpp"
#include "advgap/packing.hpp"
#include "advgap/rational.hpp"

namespace oracle {

using advgap::Dataset;
using advgap::DiscreteDistribution;
using advgap::Graph;
using advgap::LabeledPoint;
using advgap::NormSpec;
using advgap::PackingInstance;
using advgap::Rational;

/// Exhaustive max-weight packing over all 2^n binary vectors (n <= 20).
inline Rational brute_force_ip(const PackingInstance& inst) {
    const int n = inst.n;
    std::vector<std::uint32_t> masks;
    for (const auto& e : inst.constraints) {
        std::uint32_t m = 0;
        for (int v : e) m |= (1u << v);
        masks.push_back(m);
    }
    Rational best(0);
    for (std::uint32_t q = 0; q < (1u << n); ++q) {
        bool ok = true;
        for (std::uint32_t m : masks)
            if (__builtin_popcount(q & m) > 1) { ok = false; break; }
        if (!ok) continue;
        Rational val(0);
        for (int v = 0; v < n; ++v)
            if (q & (1u << v)) val += inst.weights[v];
        if (val > best) best = val;
    }
    return best;
}

/// Multiscale grid minimization of max_i ||x - x_i||_p over R^2. The
/// objective is convex, so shrinking the box around the incumbent by a
/// factor that keeps several grid cells of slack retains the minimizer.
inline double grid_chebyshev_radius(const std::vector<std::vector<double>>& pts,
                                    const NormSpec& norm) {
    auto eval = [&](double x, double y) {
        double worst = 0;
        for (const auto& p : pts) {
            double d;
            if (norm.is_infinity()) {
                d = std::max(std::fabs(x - p[0]), std::fabs(y - p[1]));
            } else {
                const double pw = norm.p_double();
                d = std::pow(std::pow(std::fabs(x - p[0]), pw) +
                                 std::pow(std::fabs(y - p[1]), pw),
                             1.0 / pw);
            }
            worst = std::max(worst, d);
        }
        return worst;
    };
    double lox = pts[0][0], hix = pts[0][0], loy = pts[0][1], hiy = pts[0][1];
    for (const auto& p : pts) {
        lox = std::min(lox, p[0]);
        hix = std::max(hix, p[0]);
        loy = std::min(loy, p[1]);
        hiy = std::max(hiy, p[1]);
    }
    double cx = (lox + hix) / 2, cy = (loy + hiy) / 2;
    double span = std::max({hix - lox, hiy - loy, 1e-12});
    double best = eval(cx, cy);
    const int g = 20;
    for (int level = 0; level < 60 && span > 1e-10; ++level) {
        double bx = cx, by = cy;
        for (int i = -g; i <= g; ++i) {
            for (int j = -g; j <= g; ++j) {
                const double x = cx + span * i / g;
                const double y = cy + span * j / g;
                const double v = eval(x, y);
                if (v < best) { best = v; bx = x; by = y; }
            }
        }
        cx = bx;
        cy = by;
        span = span * 3.0 / g;  // a few cells of slack around the incumbent
    }
    return best;
}

/// Does g contain an induced odd cycle of length >= 5? Checks every vertex
/// subset: an induced cycle is a connected 2-regular induced subgraph.
inline bool has_odd_hole_brute(const Graph& g) {
    const int n = g.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 5 || size % 2 == 0) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        bool regular = true;
        int edge_count = 0;
        for (int v : verts) {
            int deg = 0;
            for (int u : verts)
                if (u != v && g.has_edge(u, v)) ++deg;
            if (deg != 2) { regular = false; break; }
            edge_count += deg;
        }
        if (!regular || edge_count != 2 * size) continue;
        // connected 2-regular induced subgraph on |S| vertices is a cycle
        std::vector<int> stack{verts[0]};
        std::vector<char> seen(n, 0);
        seen[verts[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : verts)
                if (!seen[u] && g.has_edge(u, v)) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached == size) return true;
    }
    return false;
}

/// Random labeled grid-point dataset with exact rational coordinates.
inline Dataset random_point_dataset(std::uint64_t seed, int n, int dim,
                                    int num_classes, const NormSpec& norm,
                                    const Rational& eps) {
    std::mt19937_64 rng(seed);
    std::vector<LabeledPoint> support;
    while (static_cast<int>(support.size()) < n) {
        LabeledPoint pt;
        pt.coords.reserve(dim);
        for (int j = 0; j < dim; ++j) {
            Rational c(static_cast<long>(rng() % 13), 4);
            c.canonicalize();
            pt.coords.push_back(c);
        }
        pt.label = static_cast<int>(rng() % num_classes) + 1;
        bool dup = false;
        for (const auto& q : support)
            if (q == pt) { dup = true; break; }
        if (!dup) support.push_back(std::move(pt));
    }
    // random positive weights summing to one
    std::vector<long> raw(n);
    long total = 0;
    for (auto& r : raw) {
        r = static_cast<long>(rng() % 9) + 1;
        total += r;
    }
    std::vector<Rational> weights;
    for (long r : raw) {
        Rational w(r, total);
        w.canonicalize();
        weights.push_back(w);
    }
    return Dataset{DiscreteDistribution(std::move(support), std::move(weights)),
                   eps, norm};
}

}  // namespace oracle

#endif
