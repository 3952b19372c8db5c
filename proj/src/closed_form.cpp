#include "fibvar/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace fibvar {

RationalPolynomial RecurrenceSpec::characteristic_polynomial()
{
    // x^5 - sum_k a_k x^{5-k}
    RationalPolynomial chi(6);
    chi[5] = 1;
    for (std::size_t k = 0; k < kCoefficients.size(); ++k)
        chi[4 - k] = -kCoefficients[k];
    return chi;
}

RationalPolynomial RecurrenceSpec::factored_characteristic_polynomial()
{
    const RationalPolynomial x_minus_one{-1, 1};
    const RationalPolynomial x_plus_one{1, 1};
    const RationalPolynomial cubic = cubic_factor();
    return multiply(multiply(x_minus_one, x_plus_one), cubic);
}

std::vector<BigInt> RecurrenceSpec::iterate(int last)
{
    if (last < kFirstIndex)
        throw std::domain_error("RecurrenceSpec::iterate: last index must be >= 2");
    std::vector<BigInt> v(static_cast<std::size_t>(last) + 1);
    for (int m = kFirstIndex; m <= last; ++m) {
        if (m < kFirstIndex + static_cast<int>(kInitialData.size())) {
            v[m] = kInitialData[m - kFirstIndex];
            continue;
        }
        BigInt next = forcing(m);
        for (std::size_t k = 0; k < kCoefficients.size(); ++k)
            next += kCoefficients[k] * v[m - 1 - k];
        v[m] = next;
    }
    return v;
}

Rational particular_part(int m)
{
    if (m < 2)
        throw std::domain_error("particular_part: m must be >= 2");
    const int parity = m % 2;
    return make_rational(BigInt(m) * m, 4) - make_rational(BigInt(m) * parity, 2);
}

TraceSystem build_trace_system()
{
    TraceSystem system{RationalMatrix(5, 5), std::vector<Rational>(5)};
    for (int row = 0; row < 5; ++row) {
        const int m = RecurrenceSpec::kFirstIndex + row;
        const auto um = static_cast<unsigned>(m);
        system.matrix(row, 0) = power_trace(um);
        system.matrix(row, 1) = power_trace(um + 1);
        system.matrix(row, 2) = power_trace(um + 2);
        system.matrix(row, 3) = 1;
        system.matrix(row, 4) = m % 2 == 0 ? 1 : -1;
        system.rhs[row] = Rational(RecurrenceSpec::kInitialData[row]) - particular_part(m);
    }
    return system;
}

Embedding embed(const CubicElement& element, const IsolatedRoot& root, int digits)
{
    const RationalPolynomial g{element[0], element[1], element[2]};
    Embedding e;
    e.enclosure = evaluate(g, root.bracket());
    e.decimal = to_decimal(evaluate(g, root.midpoint()), digits);
    return e;
}

std::array<Embedding, 5> ClosedFormSolution::coefficient_vector() const
{
    return {embed(c_field, dominant_root(), digits),
            embed(c_field, negative_root(), digits),
            Embedding{RationalInterval::point(c3), to_decimal(c3, digits)},
            Embedding{RationalInterval::point(c4), to_decimal(c4, digits)},
            embed(c_field, small_root(), digits)};
}

ClosedFormSolution solve_closed_form(int digits)
{
    const TraceSystem system = build_trace_system();
    const auto x = solve_linear_system(system.matrix, system.rhs);

    ClosedFormSolution solution;
    solution.c_field = CubicElement(x[0], x[1], x[2]);
    solution.c3 = x[3];
    solution.c4 = x[4];
    solution.digits = digits;
    const RationalPolynomial cubic = cubic_factor();
    solution.roots = isolate_real_roots(cubic, digits);

    if (!asymptotic_constant(solution).enclosure.positive())
        throw std::logic_error("solve_closed_form: dominant coefficient is not positive");
    return solution;
}

Rational closed_form_v(int m, const ClosedFormSolution& solution)
{
    if (m < 2)
        throw std::domain_error("closed_form_v: m must be >= 2, got " + std::to_string(m));
    const Rational alternating = m % 2 == 0 ? solution.c4 : Rational(-solution.c4);
    return trace_times_power(solution.c_field, static_cast<unsigned>(m)) + solution.c3 + alternating +
           particular_part(m);
}

Embedding asymptotic_constant(const ClosedFormSolution& solution)
{
    return embed(solution.c_field, solution.dominant_root(), solution.digits);
}

RationalInterval asymptotic_relative_error(int m, const BigInt& v, const ClosedFormSolution& solution)
{
    const RationalInterval leading =
        asymptotic_constant(solution).enclosure * pow(solution.dominant_root().bracket(), static_cast<unsigned>(m));
    return RationalInterval::point(Rational(v)) / leading - RationalInterval::point(1);
}

} // namespace fibvar
