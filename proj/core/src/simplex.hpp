#ifndef ADVGAP_SIMPLEX_HPP
#define ADVGAP_SIMPLEX_HPP

// Rational-arithmetic primal simplex for max c'x s.t. Ax <= b, x >= 0 with
// b >= 0 (the all-slack basis is feasible, no phase one). Bland's rule
// guarantees termination. Internal to the packing module.

#include <vector>

#include "advgap/rational.hpp"

namespace advgap::detail {

struct SimplexResult {
    std::vector<Rational> x;  // structural solution
    std::vector<Rational> y;  // dual values per row, >= 0
    Rational value;           // c'x == y'b, verified by the caller
};

SimplexResult solve_simplex(const std::vector<std::vector<Rational>>& rows,
                            const std::vector<Rational>& rhs,
                            const std::vector<Rational>& objective);

}  // namespace advgap::detail

#endif
