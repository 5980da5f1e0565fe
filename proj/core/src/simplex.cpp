#include "simplex.hpp"

#include "advgap/errors.hpp"

namespace advgap::detail {

SimplexResult solve_simplex(const std::vector<std::vector<Rational>>& rows,
                            const std::vector<Rational>& rhs,
                            const std::vector<Rational>& objective) {
    const std::size_t m = rows.size();
    const std::size_t n = objective.size();
    const std::size_t cols = n + m;

    // tableau with slack identity; rhs in a separate column
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b = rhs;
    for (std::size_t r = 0; r < m; ++r) {
        if (b[r] < 0) throw ParseError("simplex requires b >= 0");
        for (std::size_t j = 0; j < n; ++j) t[r][j] = rows[r][j];
        t[r][n + r] = 1;
    }
    std::vector<Rational> d(cols, Rational(0));  // reduced costs
    for (std::size_t j = 0; j < n; ++j) d[j] = objective[j];
    Rational value(0);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

    while (true) {
        // Bland: entering = lowest-index column with positive reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (d[j] > 0) { enter = j; break; }
        }
        if (enter == cols) break;

        // ratio test; ties by lowest basic-variable index (Bland)
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            Rational ratio = b[r] / t[r][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw ParseError("unbounded packing LP (violated model invariant)");

        // pivot on (leave, enter)
        const Rational piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j)
            if (t[leave][j] != 0) t[leave][j] /= piv;
        b[leave] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave) continue;
            const Rational factor = t[r][enter];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (t[leave][j] != 0) t[r][j] -= factor * t[leave][j];
            b[r] -= factor * b[leave];
        }
        const Rational dfactor = d[enter];
        if (dfactor != 0) {
            for (std::size_t j = 0; j < cols; ++j)
                if (t[leave][j] != 0) d[j] -= dfactor * t[leave][j];
            value += dfactor * b[leave];
        }
        basis[leave] = enter;
    }

    SimplexResult res;
    res.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) res.x[basis[r]] = b[r];
    res.y.assign(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) res.y[r] = -d[n + r];
    res.value = value;
    return res;
}

}  // namespace advgap::detail
