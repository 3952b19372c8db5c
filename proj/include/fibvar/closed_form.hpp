#pragma once

#include "fibvar/cubic_field.hpp"
#include "fibvar/linear_solve.hpp"
#include "fibvar/root_isolation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fibvar {

/*
 * The recurrence satisfied by v_m = V(F_m):
 *
 *     v_m = 2v_{m-1} + 3v_{m-2} - 4v_{m-3} - 2v_{m-4} + 2v_{m-5} + 1 - 2 floor(m/2)
 *
 * for m >= 7, seeded with (v_2, ..., v_6).
 */
struct RecurrenceSpec {
    static constexpr std::array<int, 5> kCoefficients{2, 3, -4, -2, 2}; // lags 1..5
    static constexpr int kFirstIndex = 2;
    static constexpr std::array<int, 5> kInitialData{2, 3, 7, 12, 26}; // v_2..v_6

    static std::int64_t forcing(int m) { return 1 - 2 * static_cast<std::int64_t>(m / 2); }

    /// x^5 - 2x^4 - 3x^3 + 4x^2 + 2x - 2, constant term first.
    static RationalPolynomial characteristic_polynomial();

    /// (x - 1)(x + 1)(x^3 - 2x^2 - 2x + 2) expanded, constant term first.
    static RationalPolynomial factored_characteristic_polynomial();

    /// v_2..v_last by iterating the recurrence forward, in exact integers.
    static std::vector<BigInt> iterate(int last);
};

/// m^2/4 - m*eps_m/2 with eps_m = m mod 2: a particular solution of the recurrence.
Rational particular_part(int m);

/*
 * Unknowns (g0, g1, g2, c3, c4). The three coefficients of the cubic roots
 * are the embeddings of c(t) = g0 + g1 t + g2 t^2, so their contribution
 * to v_m is Tr(c(t) t^m). Row m (2..6):
 *
 *     g0 p_m + g1 p_{m+1} + g2 p_{m+2} + c3 + (-1)^m c4 = v_m - particular_part(m)
 */
struct TraceSystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;
};

TraceSystem build_trace_system();

/// Real embedding of a field element at one isolated root, as an enclosure
/// plus its decimal midpoint.
struct Embedding {
    RationalInterval enclosure;
    std::string decimal;
};

Embedding embed(const CubicElement& element, const IsolatedRoot& root, int digits);

struct ClosedFormSolution {
    CubicElement c_field;
    Rational c3; // coefficient of 1^m
    Rational c4; // coefficient of (-1)^m
    /// Roots of the cubic by value: about 2.48, 0.69, -1.17.
    std::array<IsolatedRoot, 3> roots;
    int digits = kDefaultDigits;

    const IsolatedRoot& dominant_root() const { return roots[0]; }   // lambda_1
    const IsolatedRoot& negative_root() const { return roots[2]; }   // lambda_2
    const IsolatedRoot& small_root() const { return roots[1]; }      // lambda_5

    /// (c1, c2, c3, c4, c5) as decimals: c1 at 2.48, c2 at -1.17, c5 at 0.69.
    std::array<Embedding, 5> coefficient_vector() const;
};

/// Solves the trace system exactly and isolates the cubic's roots.
/// Throws SingularMatrixError if the system is singular and std::logic_error
/// if the dominant coefficient is not positive.
ClosedFormSolution solve_closed_form(int digits = kDefaultDigits);

/// v_m from the closed form, exactly. Requires m >= 2.
Rational closed_form_v(int m, const ClosedFormSolution& solution);

/// c1, the embedding of c(t) at the dominant root.
Embedding asymptotic_constant(const ClosedFormSolution& solution);

/// Enclosure of v / (c1 * lambda_1^m) - 1.
RationalInterval asymptotic_relative_error(int m, const BigInt& v, const ClosedFormSolution& solution);

} // namespace fibvar
