#include "fibvar/closed_form.hpp"
#include "fibvar/cubic_field.hpp"
#include "fibvar/errors.hpp"
#include "fibvar/linear_solve.hpp"
#include "fibvar/root_isolation.hpp"

#include <doctest.h>

#include <random>

using namespace fibvar;

namespace {

Rational q(long num, long den = 1)
{
    return make_rational(num, den);
}

/// Schoolbook product reduced by long division by x^3 - 2x^2 - 2x + 2.
std::array<Rational, 3> multiply_mod_minimal(const CubicElement& a, const CubicElement& b)
{
    std::vector<Rational> product(5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            product[i + j] += a[i] * b[j];
    const Rational divisor[4] = {2, -2, -2, 1};
    for (int top = 4; top >= 3; --top) {
        const Rational lead = product[top];
        for (int k = 0; k <= 3; ++k)
            product[top - 3 + k] -= lead * divisor[k];
    }
    return {product[0], product[1], product[2]};
}

struct RandomRationals {
    std::mt19937 rng{7};
    std::uniform_int_distribution<long> num{-40, 40};
    std::uniform_int_distribution<long> den{1, 12};

    Rational next() { return q(num(rng), den(rng)); }
    CubicElement element() { return {next(), next(), next()}; }
};

} // namespace

TEST_CASE("rational helpers")
{
    CHECK(make_rational(6, -4) == q(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK(to_decimal(q(5, 8), 3) == "0.625");
    CHECK(to_decimal(q(-2, 3), 4) == "-0.6667");
    CHECK(to_decimal(q(1, 3), 0) == "0");
    CHECK(to_decimal(q(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(q(7), 2) == "7.00");
}

TEST_CASE("cubic_mul")
{
    const CubicElement t = CubicElement::theta();
    const CubicElement t2 = t * t;
    CHECK(cubic_mul(t, t2) == CubicElement(-2, 2, 2));
    CHECK(cubic_mul(t2, t2) == CubicElement(-4, 2, 6));
    const CubicElement b(q(3, 7), q(-1, 2), q(5));
    CHECK(cubic_mul(CubicElement(q(1)), b) == b);

    RandomRationals gen;
    for (int i = 0; i < 200; ++i) {
        const CubicElement x = gen.element(), y = gen.element();
        CHECK((x * y).coefficients() == multiply_mod_minimal(x, y));
    }
}

TEST_CASE("cubic_inv")
{
    CHECK(cubic_inv(CubicElement(q(1))) == CubicElement(q(1)));
    const CubicElement inv_t = cubic_inv(CubicElement::theta());
    CHECK(inv_t == CubicElement(1, 1, q(-1, 2)));
    CHECK(inv_t * CubicElement::theta() == CubicElement(q(1)));
    CHECK_THROWS_AS(cubic_inv(CubicElement()), std::domain_error);
}

TEST_CASE("field axioms on random elements")
{
    RandomRationals gen;
    const CubicElement one(q(1));
    for (int i = 0; i < 100; ++i) {
        const CubicElement a = gen.element(), b = gen.element(), c = gen.element();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * cubic_inv(a) == one);
    }
}

TEST_CASE("power_trace")
{
    CHECK(power_trace(0) == 3);
    CHECK(power_trace(1) == 2);
    CHECK(power_trace(2) == 8);
    CHECK(power_trace(3) == 14);
    CHECK(power_trace(4) == 40);
    // Tr(t^k) through field multiplication: the trace of the multiplication-by-t^k map
    for (unsigned k = 0; k <= 30; ++k) {
        const CubicElement tk = pow(CubicElement::theta(), k);
        Rational matrix_trace = 0;
        CubicElement basis(q(1));
        for (std::size_t j = 0; j < 3; ++j) {
            matrix_trace += (tk * basis)[j];
            basis = basis * CubicElement::theta();
        }
        CHECK(power_trace(k) == matrix_trace);
    }
}

TEST_CASE("power_trace lies in the interval sum of root powers")
{
    const auto roots = isolate_real_roots(cubic_factor(), 40);
    for (unsigned k = 0; k <= 40; ++k) {
        const RationalInterval sum =
            pow(roots[0].bracket(), k) + pow(roots[1].bracket(), k) + pow(roots[2].bracket(), k);
        CHECK(sum.contains(power_trace(k)));
        CHECK(sum.width() < q(1, 1'000'000'000));
    }
}

TEST_CASE("solve_linear_system small cases")
{
    const std::vector<Rational> b{q(3), q(-1, 2), q(7, 5)};
    CHECK(solve_linear_system(RationalMatrix::identity(3), b) == b);

    const RationalMatrix sym{{q(1), q(1)}, {q(1), q(-1)}};
    const std::vector<Rational> rhs{q(1), q(0)};
    CHECK(solve_linear_system(sym, rhs) == std::vector<Rational>{q(1, 2), q(1, 2)});

    // zero leading entry forces a row swap
    const RationalMatrix swap{{q(0), q(2)}, {q(3), q(1)}};
    CHECK(solve_linear_system(swap, std::vector<Rational>{q(4), q(5)}) == std::vector<Rational>{q(1), q(2)});

    const RationalMatrix singular{{q(1), q(2)}, {q(2), q(4)}};
    CHECK_THROWS_AS(solve_linear_system(singular, rhs), SingularMatrixError);
    CHECK(determinant(singular) == 0);
    CHECK_THROWS_AS(solve_linear_system(RationalMatrix(2, 3), rhs), std::invalid_argument);
    CHECK_THROWS_AS(solve_linear_system(sym, b), std::invalid_argument);
}

TEST_CASE("solve_linear_system reproduces b exactly")
{
    RandomRationals gen;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        RationalMatrix M(n, n);
        std::vector<Rational> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = gen.next();
            for (std::size_t j = 0; j < n; ++j)
                M(i, j) = gen.next();
        }
        if (determinant(M) == 0)
            continue;
        const auto x = solve_linear_system(M, b);
        CHECK(M * x == b);
    }
}

TEST_CASE("determinant against cofactor expansion")
{
    RandomRationals gen;
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix M(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                M(i, j) = gen.next();
        const Rational cofactor = M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
                                  M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
                                  M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
        CHECK(determinant(M) == cofactor);
    }
}

TEST_CASE("isolate_real_roots of the cubic factor")
{
    const RationalPolynomial cubic = cubic_factor();

    const auto coarse = isolate_real_roots(cubic, 2);
    CHECK(coarse[0].value == "2.48");
    CHECK(coarse[1].value == "0.69");
    CHECK(coarse[2].value == "-1.17");

    const auto fine = isolate_real_roots(cubic);
    CHECK(fine[0].value == "2.481194304092015622633537241217");
    for (const IsolatedRoot& root : fine) {
        CHECK(root.high - root.low <= decimal_unit(kDefaultDigits));
        CHECK(root.low >= -3);
        CHECK(root.high <= 3);
        CHECK(sign(evaluate(cubic, root.low)) * sign(evaluate(cubic, root.high)) <= 0);
    }
    CHECK(fine[0].low > fine[1].high);
    CHECK(fine[1].low > fine[2].high);
}

TEST_CASE("isolate_real_roots with rational roots and bad input")
{
    // (x - 2)(x - 1)(x + 3) = x^3 - 7x + 6
    const RationalPolynomial rational_roots{6, -7, 0, 1};
    const auto roots = isolate_real_roots(rational_roots, 10);
    CHECK(roots[0].bracket().contains(2));
    CHECK(roots[1].bracket().contains(1));
    CHECK(roots[2].bracket().contains(-3));

    const RationalPolynomial one_real{-2, 0, 0, 1}; // x^3 - 2
    CHECK_THROWS_AS(isolate_real_roots(one_real), std::domain_error);
    const RationalPolynomial double_root{0, 0, -1, 1}; // x^2 (x - 1)
    CHECK_THROWS_AS(isolate_real_roots(double_root), std::domain_error);
    const RationalPolynomial quadratic{1, 0, 1, 0};
    CHECK_THROWS_AS(isolate_real_roots(quadratic), std::domain_error);
}

TEST_CASE("characteristic polynomial factorisation")
{
    const RationalPolynomial expected{-2, 2, 4, -3, -2, 1};
    CHECK(RecurrenceSpec::characteristic_polynomial() == expected);
    CHECK(RecurrenceSpec::factored_characteristic_polynomial() == expected);
}
