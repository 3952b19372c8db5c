#pragma once

#include <gmpxx.h>

#include <string>

namespace fibvar {

using BigInt = mpz_class;
/// Exact fraction; gmpxx keeps it canonical (lowest terms, positive denominator)
/// as long as it is built through make_rational or arithmetic.
using Rational = mpq_class;

Rational make_rational(const BigInt& numerator, const BigInt& denominator);

/// Nearest decimal with `digits` places after the point (ties away from zero).
std::string to_decimal(const Rational& q, int digits);

/// True when the reduced denominator is 1.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

/// 10^-digits as an exact rational.
Rational decimal_unit(int digits);

} // namespace fibvar
