#pragma once

#include "fibvar/partition_counts.hpp"

#include <cstdint>
#include <vector>

namespace fibvar {

/// Prefix sums a[n] = A(n) = sum R(k) and v[n] = V(n) = sum R(k)^2 over k <= n.
struct MomentTable {
    std::uint64_t h_max = 0;
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> v;
};

MomentTable moment_table(const CountTable& counts);
MomentTable moment_table(std::uint64_t H, const Budget& budget = {});

/*
 * V and R sampled at Fibonacci arguments: entry m holds V(F_m) (resp. R(F_m))
 * for 2 <= m <= m_max. Entries 0 and 1 are unused and left at zero.
 */
struct FibMomentSeries {
    int m_max = 0;
    std::vector<std::uint64_t> v_at_fib;
    std::vector<std::uint64_t> r_at_fib;

    std::uint64_t v(int m) const;
    std::uint64_t r(int m) const;
};

/// One DP pass up to F_{m_max}.
FibMomentSeries fib_moment_series(int m_max, const Budget& budget = {});

/// V(F_m) for m >= 2.
std::uint64_t v_at_fib(int m, const Budget& budget = {});

struct LemmaRow {
    int m;
    std::int64_t lhs; // V(F_m) from the table
    std::int64_t rhs; // five-term recurrence evaluated on table values
    bool equal;
};

/// Right side of the recurrence for V(F_m): lags 1..5 weighted (2, 3, -4, -2, 2)
/// plus the forcing term 1 - 2 floor(m/2).
std::int64_t lemma_rhs(const FibMomentSeries& series, int m);

/// Compares V(F_m) against the recurrence for m_lo <= m <= m_hi.
/// Throws std::domain_error if m_lo < 7 or m_lo > m_hi.
std::vector<LemmaRow> verify_lemma(int m_lo, int m_hi, const Budget& budget = {});

/// w_m = V(F_{m-3}) - R(F_{m-3}) - R(F_{m-5}) - V(F_{m-5}), for m >= 7.
std::uint64_t w_closed_form(int m, const FibMomentSeries& series);
std::uint64_t w_closed_form(int m, const Budget& budget = {});

} // namespace fibvar
