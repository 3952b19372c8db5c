#include "fibvar/closed_form.hpp"
#include "fibvar/moments.hpp"

#include <doctest.h>

using namespace fibvar;

namespace {

Rational q(long num, long den = 1)
{
    return make_rational(num, den);
}

const ClosedFormSolution& solution()
{
    static const ClosedFormSolution sol = solve_closed_form();
    return sol;
}

bool near(const std::string& decimal, double expected, double tolerance)
{
    return std::abs(std::stod(decimal) - expected) <= tolerance;
}

} // namespace

TEST_CASE("particular_part")
{
    CHECK(particular_part(4) == 4);
    CHECK(particular_part(5) == q(15, 4));
    CHECK(particular_part(3) == q(3, 4));
    CHECK(particular_part(2) == 1);
    CHECK_THROWS_AS(particular_part(1), std::domain_error);
}

TEST_CASE("particular_part solves the inhomogeneous recurrence")
{
    // per parity both sides are quadratics in m, so agreement at three points of
    // each parity is already an identity; the range just makes that obvious
    for (int m = 7; m <= 200; ++m) {
        Rational rhs = RecurrenceSpec::forcing(m);
        for (std::size_t k = 0; k < 5; ++k)
            rhs += RecurrenceSpec::kCoefficients[k] * particular_part(m - 1 - static_cast<int>(k));
        REQUIRE(particular_part(m) == rhs);
    }
}

TEST_CASE("build_trace_system")
{
    const TraceSystem system = build_trace_system();
    CHECK(system.rhs == std::vector<Rational>{q(1), q(9, 4), q(3), q(33, 4), q(17)});
    CHECK(system.matrix(0, 0) == 8);
    CHECK(system.matrix(0, 1) == 14);
    CHECK(system.matrix(0, 2) == 40);
    for (std::size_t row = 0; row < 5; ++row) {
        CHECK(system.matrix(row, 3) == 1);
        CHECK(system.matrix(row, 4) == (row % 2 == 0 ? 1 : -1));
    }
    CHECK(determinant(system.matrix) != 0);
}

TEST_CASE("solve_closed_form coefficients")
{
    const ClosedFormSolution& sol = solution();
    CHECK(sol.c3 == q(5, 8));
    CHECK(sol.c4 == q(3, 8));
    CHECK(sol.c_field == CubicElement(q(8, 37), q(14, 37), q(-13, 74)));

    const auto c = sol.coefficient_vector();
    CHECK(near(c[0].decimal, 0.0735, 0.0005));
    CHECK(near(c[1].decimal, -0.467, 0.0005));
    CHECK(near(c[2].decimal, 0.625, 0.0005));
    CHECK(near(c[3].decimal, 0.375, 0.0005));
    CHECK(near(c[4].decimal, 0.394, 0.0005));
    for (const Embedding& e : c)
        CHECK(e.enclosure.width() <= decimal_unit(25));
}

TEST_CASE("closed_form_v reproduces the initial data and the DP")
{
    const ClosedFormSolution& sol = solution();
    CHECK(closed_form_v(2, sol) == 2);
    CHECK(closed_form_v(6, sol) == 26);
    CHECK(closed_form_v(7, sol) == 53);
    CHECK_THROWS_AS(closed_form_v(1, sol), std::domain_error);

    const FibMomentSeries series = fib_moment_series(28);
    for (int m = 2; m <= 28; ++m)
        CHECK(closed_form_v(m, sol) == Rational(series.v(m)));
}

TEST_CASE("closed_form_v is integral and obeys the recurrence up to m = 60")
{
    const ClosedFormSolution& sol = solution();
    const auto forward = RecurrenceSpec::iterate(60);
    std::vector<Rational> v(61), u(61);
    for (int m = 2; m <= 60; ++m) {
        v[m] = closed_form_v(m, sol);
        CHECK(is_integer(v[m]));
        CHECK(v[m] == Rational(forward[m]));
        u[m] = v[m] - particular_part(m);
    }
    for (int m = 7; m <= 60; ++m) {
        CHECK(v[m] == 2 * v[m - 1] + 3 * v[m - 2] - 4 * v[m - 3] - 2 * v[m - 4] + 2 * v[m - 5] +
                          Rational(RecurrenceSpec::forcing(m)));
        CHECK(u[m] == 2 * u[m - 1] + 3 * u[m - 2] - 4 * u[m - 3] - 2 * u[m - 4] + 2 * u[m - 5]);
    }
}

TEST_CASE("trace form equals the sum over embeddings")
{
    const ClosedFormSolution& sol = solution();
    const auto c = sol.coefficient_vector();
    const RationalInterval minus_one = RationalInterval::point(-1);
    for (int m = 2; m <= 40; ++m) {
        const auto um = static_cast<unsigned>(m);
        const RationalInterval sum = c[0].enclosure * pow(sol.dominant_root().bracket(), um) +
                                     c[1].enclosure * pow(sol.negative_root().bracket(), um) +
                                     c[2].enclosure + c[3].enclosure * pow(minus_one, um) +
                                     c[4].enclosure * pow(sol.small_root().bracket(), um) +
                                     RationalInterval::point(particular_part(m));
        CHECK(sum.contains(closed_form_v(m, sol)));
    }
}

TEST_CASE("dominant root")
{
    const ClosedFormSolution& sol = solution();
    const Rational lambda_1_low = sol.dominant_root().low;
    CHECK(lambda_1_low > 1);
    CHECK(lambda_1_low > abs(sol.negative_root().low));
    CHECK(lambda_1_low > abs(sol.small_root().high));
}

TEST_CASE("asymptotic constant")
{
    const ClosedFormSolution& sol = solution();
    const Embedding c1 = asymptotic_constant(sol);
    CHECK(c1.enclosure.positive());
    CHECK(near(c1.decimal, 0.0735, 0.0005));

    const RationalInterval err = asymptotic_relative_error(25, BigInt(static_cast<unsigned long>(v_at_fib(25))), sol);
    CHECK(err.lo > q(-1, 1000));
    CHECK(err.hi < q(1, 1000));
}
