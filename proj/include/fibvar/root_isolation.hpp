#pragma once

#include "fibvar/rational.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace fibvar {

/// Closed interval [lo, hi] with exact endpoints; arithmetic returns enclosures.
struct RationalInterval {
    Rational lo;
    Rational hi;

    static RationalInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool positive() const { return lo > 0; }

    RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RationalInterval operator-(const RationalInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RationalInterval operator*(const RationalInterval& o) const;
    /// Requires 0 outside o.
    RationalInterval operator/(const RationalInterval& o) const;
};

RationalInterval pow(const RationalInterval& x, unsigned exponent);

/// Polynomial with rational coefficients, constant term first.
using RationalPolynomial = std::vector<Rational>;

Rational evaluate(std::span<const Rational> poly, const Rational& x);
RationalInterval evaluate(std::span<const Rational> poly, const RationalInterval& x);

/// Coefficients of prod (x - r) style products, constant term first.
RationalPolynomial multiply(std::span<const Rational> a, std::span<const Rational> b);

/*
 * One real root of a cubic, certified by a sign change of the cubic on
 * [low, high] (or low == high when the root is an exact grid point).
 */
struct IsolatedRoot {
    Rational low;
    Rational high;
    std::string value;   // decimal midpoint with `digits` places
    Rational precision;  // 10^-digits; high - low <= precision
    int digits = 0;

    Rational midpoint() const { return (low + high) / 2; }
    RationalInterval bracket() const { return {low, high}; }
};

/// Default decimal digits for root brackets and embeddings.
inline constexpr int kDefaultDigits = 30;

/*
 * Isolates the three real roots of c0 + c1 x + c2 x^2 + c3 x^3, sorted by
 * value, largest first.
 *
 * The Cauchy interval [-1 - B, 1 + B], B = max |c_i / c3|, is cut into a
 * uniform grid that is doubled until three sign changes appear; a cubic has
 * at most three roots, so each sign-change cell then holds exactly one.
 * Each cell is bisected until its width is at most 10^-digits.
 *
 * Throws std::domain_error when c3 == 0, when the discriminant is not
 * positive (repeated or complex roots), or when the grid search gives up
 * before finding three sign changes.
 */
std::array<IsolatedRoot, 3> isolate_real_roots(std::span<const Rational> cubic, int digits = kDefaultDigits);

/// The cubic x^3 - 2x^2 - 2x + 2, constant term first.
RationalPolynomial cubic_factor();

} // namespace fibvar
