#pragma once

#include "fibvar/rational.hpp"

#include <array>
#include <ostream>

namespace fibvar {

/*
 * Elements g0 + g1*t + g2*t^2 of K = Q(t), where t is a root of
 *
 *     x^3 - 2x^2 - 2x + 2,
 *
 * the cubic factor of the characteristic polynomial of the V(F_m) recurrence.
 * Products are reduced with t^3 = 2t^2 + 2t - 2. The cubic is irreducible
 * over Q (no rational root among +-1, +-2), so every nonzero element is a unit.
 */
class CubicElement {
public:
    /// Coefficients of the monic minimal polynomial, constant term first.
    static constexpr std::array<int, 4> kMinimalPolynomial{2, -2, -2, 1};

    CubicElement() = default;
    CubicElement(Rational g0, Rational g1, Rational g2) : coeffs_{std::move(g0), std::move(g1), std::move(g2)} {}
    CubicElement(const Rational& scalar) : coeffs_{scalar, 0, 0} {} // NOLINT: scalars embed implicitly

    static CubicElement theta() { return {0, 1, 0}; }

    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::array<Rational, 3>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0; }

    CubicElement operator+(const CubicElement& o) const;
    CubicElement operator-(const CubicElement& o) const;
    CubicElement operator-() const;
    CubicElement operator*(const CubicElement& o) const;

    bool operator==(const CubicElement& o) const { return coeffs_ == o.coeffs_; }

private:
    std::array<Rational, 3> coeffs_{};
};

CubicElement cubic_mul(const CubicElement& a, const CubicElement& b);

/// Multiplicative inverse; throws std::domain_error for zero.
CubicElement cubic_inv(const CubicElement& a);

CubicElement pow(const CubicElement& a, unsigned exponent);

/// p_k = t1^k + t2^k + t3^k over the three roots of the cubic, from Newton's
/// identities: p_0 = 3, p_1 = 2, p_2 = 8, p_k = 2p_{k-1} + 2p_{k-2} - 2p_{k-3}.
Rational power_trace(unsigned k);

/// Sum of the three real embeddings of a.
Rational trace(const CubicElement& a);

/// Tr(a * t^m) = g0 p_m + g1 p_{m+1} + g2 p_{m+2}; rational-linear in a's coordinates.
Rational trace_times_power(const CubicElement& a, unsigned m);

std::ostream& operator<<(std::ostream& os, const CubicElement& a);

} // namespace fibvar
