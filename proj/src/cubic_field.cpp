#include "fibvar/cubic_field.hpp"

#include "fibvar/linear_solve.hpp"

#include <stdexcept>
#include <vector>

namespace fibvar {

CubicElement CubicElement::operator+(const CubicElement& o) const
{
    return {coeffs_[0] + o.coeffs_[0], coeffs_[1] + o.coeffs_[1], coeffs_[2] + o.coeffs_[2]};
}

CubicElement CubicElement::operator-(const CubicElement& o) const
{
    return {coeffs_[0] - o.coeffs_[0], coeffs_[1] - o.coeffs_[1], coeffs_[2] - o.coeffs_[2]};
}

CubicElement CubicElement::operator-() const
{
    return {-coeffs_[0], -coeffs_[1], -coeffs_[2]};
}

CubicElement CubicElement::operator*(const CubicElement& o) const
{
    const auto& a = coeffs_;
    const auto& b = o.coeffs_;
    std::array<Rational, 5> c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c[i + j] += a[i] * b[j];

    // t^4 -> 2t^3 + 2t^2 - 2t, then t^3 -> 2t^2 + 2t - 2
    c[3] += 2 * c[4];
    c[2] += 2 * c[4];
    c[1] -= 2 * c[4];
    c[2] += 2 * c[3];
    c[1] += 2 * c[3];
    c[0] -= 2 * c[3];
    return {c[0], c[1], c[2]};
}

CubicElement cubic_mul(const CubicElement& a, const CubicElement& b)
{
    return a * b;
}

CubicElement cubic_inv(const CubicElement& a)
{
    if (a.is_zero())
        throw std::domain_error("cubic_inv: zero has no inverse");

    // column j of the multiplication matrix holds the coordinates of a * t^j
    RationalMatrix mult(3, 3);
    CubicElement column = a;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i)
            mult(i, j) = column[i];
        column = column * CubicElement::theta();
    }
    const std::vector<Rational> one{1, 0, 0};
    const auto x = solve_linear_system(mult, one);
    return {x[0], x[1], x[2]};
}

CubicElement pow(const CubicElement& a, unsigned exponent)
{
    CubicElement result(Rational(1));
    CubicElement base = a;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

Rational power_trace(unsigned k)
{
    BigInt p0 = 3, p1 = 2, p2 = 8;
    if (k == 0)
        return p0;
    if (k == 1)
        return p1;
    for (unsigned i = 3; i <= k; ++i) {
        BigInt next = 2 * p2 + 2 * p1 - 2 * p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
        p2 = std::move(next);
    }
    return p2;
}

Rational trace(const CubicElement& a)
{
    return trace_times_power(a, 0);
}

Rational trace_times_power(const CubicElement& a, unsigned m)
{
    return a[0] * power_trace(m) + a[1] * power_trace(m + 1) + a[2] * power_trace(m + 2);
}

std::ostream& operator<<(std::ostream& os, const CubicElement& a)
{
    return os << a[0] << " + " << a[1] << "*t + " << a[2] << "*t^2";
}

} // namespace fibvar
