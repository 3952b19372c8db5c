#include "fibvar/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibvar {

RationalInterval RationalInterval::operator*(const RationalInterval& o) const
{
    const std::array<Rational, 4> products{lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    const auto [min, max] = std::minmax_element(products.begin(), products.end());
    return {*min, *max};
}

RationalInterval RationalInterval::operator/(const RationalInterval& o) const
{
    if (o.contains(0))
        throw std::domain_error("interval division by an interval containing zero");
    return *this * RationalInterval{1 / o.hi, 1 / o.lo};
}

RationalInterval pow(const RationalInterval& x, unsigned exponent)
{
    RationalInterval result = RationalInterval::point(1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * x;
    // an even power never goes negative
    if (exponent % 2 == 0 && result.lo < 0)
        result.lo = 0;
    return result;
}

Rational evaluate(std::span<const Rational> poly, const Rational& x)
{
    Rational acc;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalInterval evaluate(std::span<const Rational> poly, const RationalInterval& x)
{
    RationalInterval acc = RationalInterval::point(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + RationalInterval::point(*it);
    return acc;
}

RationalPolynomial multiply(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.empty() || b.empty())
        return {};
    RationalPolynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

RationalPolynomial cubic_factor()
{
    return {2, -2, -2, 1};
}

namespace {

IsolatedRoot refine(std::span<const Rational> cubic, Rational low, Rational high, int digits)
{
    const Rational precision = decimal_unit(digits);
    int low_sign = sign(evaluate(cubic, low));
    while (high - low > precision) {
        const Rational mid = (low + high) / 2;
        const int mid_sign = sign(evaluate(cubic, mid));
        if (mid_sign == 0) {
            low = high = mid;
            break;
        }
        if (mid_sign == low_sign)
            low = mid;
        else
            high = mid;
    }
    IsolatedRoot root{low, high, {}, precision, digits};
    root.value = to_decimal(root.midpoint(), digits);
    return root;
}

} // namespace

std::array<IsolatedRoot, 3> isolate_real_roots(std::span<const Rational> cubic, int digits)
{
    if (cubic.size() != 4 || cubic[3] == 0)
        throw std::domain_error("isolate_real_roots: expected a polynomial of degree exactly 3");
    if (digits < 0)
        throw std::domain_error("isolate_real_roots: negative precision");

    // three distinct real roots <=> positive discriminant
    const Rational &d = cubic[0], &c = cubic[1], &b = cubic[2], &a = cubic[3];
    const Rational discriminant =
        18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
    if (discriminant <= 0)
        throw std::domain_error("isolate_real_roots: cubic does not have three distinct real roots");

    Rational bound = 0;
    for (std::size_t i = 0; i < 3; ++i)
        bound = std::max(bound, Rational(abs(cubic[i] / cubic[3])));
    const Rational left = -1 - bound;
    const Rational right = 1 + bound;

    constexpr unsigned kMaxGridLog2 = 24;
    for (unsigned level = 1; level <= kMaxGridLog2; ++level) {
        const unsigned long cells = 1ul << level;
        const Rational step = (right - left) / Rational(cells);

        std::vector<std::pair<Rational, Rational>> cells_with_roots;
        Rational prev_x = left;
        int prev_sign = sign(evaluate(cubic, prev_x));
        for (unsigned long i = 1; i <= cells; ++i) {
            const Rational x = left + step * Rational(i);
            const int s = sign(evaluate(cubic, x));
            if (s == 0) {
                // exact root on the grid; the next nonzero sign starts fresh
                cells_with_roots.emplace_back(x, x);
                prev_sign = 0;
            } else {
                if (prev_sign != 0 && s != prev_sign)
                    cells_with_roots.emplace_back(prev_x, x);
                prev_sign = s;
            }
            prev_x = x;
        }
        if (cells_with_roots.size() > 3)
            throw std::logic_error("isolate_real_roots: more than three sign changes for a cubic");
        if (cells_with_roots.size() < 3)
            continue;

        std::array<IsolatedRoot, 3> roots;
        for (std::size_t k = 0; k < 3; ++k)
            roots[k] = refine(cubic, cells_with_roots[k].first, cells_with_roots[k].second, digits);
        std::reverse(roots.begin(), roots.end());
        return roots;
    }
    throw std::domain_error("isolate_real_roots: fewer than three sign changes on the Cauchy interval");
}

} // namespace fibvar
