#ifndef ADVGAP_RATIONAL_HPP
#define ADVGAP_RATIONAL_HPP

/// Exact rational scalars. Every probability mass, LP value and certificate
/// in this library is a Rational; nothing in the combinatorial pipeline is
/// ever rounded. Backed by GMP's mpq_class, which keeps values canonical
/// (positive denominator, coprime) through all arithmetic.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "advgap/errors.hpp"

namespace advgap {

using Rational = mpq_class;
using BigInt = mpz_class;

// Construction from a raw (numerator, denominator) pair does not reduce the
// fraction, and GMP's comparison operators assume canonical form. Build
// values through parse_rational / arithmetic, or call canonicalize() after a
// raw two-argument construction whose operands may share a factor.

/// Parse "a", "-a", "a/b" or a decimal literal like "0.9" / "-3.25e2" into an
/// exact rational. Decimal digits are converted exactly (0.9 -> 9/10), never
/// through a double. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical string form: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// q^e for e >= 0.
Rational pow_int(const Rational& q, unsigned long e);

Rational rational_abs(const Rational& q);

/// Largest dyadic k/2^bits with k/2^bits <= q^(1/p). Requires q >= 0, p >= 1.
/// Deterministic (integer arithmetic only, no libm).
Rational dyadic_root(const Rational& q, unsigned long p, unsigned bits);

double to_double(const Rational& q);

std::vector<double> to_double(const std::vector<Rational>& v);

}  // namespace advgap

#endif
