#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torica {

/// Arbitrary-precision integer used for every lattice and intersection quantity.
using Integer = mpz_class;
/// Exact rational, used where bound formulas divide by powers of two.
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;

inline Integer abs_value(const Integer& v) { return abs(v); }

Integer gcd(const Integer& a, const Integer& b);

/// floor(sqrt(v)) for v >= 0.
Integer isqrt(const Integer& v);

/// Exact test of `a <= sqrt(b)` without leaving the integers.
bool le_sqrt(const Integer& a, const Integer& b);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& v);

/// Decimal rendering of an exact rational with `significant` significant
/// digits, rounded half away from zero. Never uses exponent notation.
std::string to_decimal(const Rational& q, int significant);

Rational pow2(long exponent);

}  // namespace torica
