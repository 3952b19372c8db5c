#include "fibvar/moments.hpp"

#include "fibvar/fibonacci.hpp"

#include <stdexcept>
#include <string>

namespace fibvar {

MomentTable moment_table(const CountTable& counts)
{
    MomentTable table;
    table.h_max = counts.h_max;
    table.a.resize(counts.r.size());
    table.v.resize(counts.r.size());
    std::uint64_t a = 0, v = 0;
    for (std::size_t n = 0; n < counts.r.size(); ++n) {
        const std::uint64_t value = counts.r[n];
        a += value;
        v += value * value;
        table.a[n] = a;
        table.v[n] = v;
    }
    return table;
}

MomentTable moment_table(std::uint64_t H, const Budget& budget)
{
    return moment_table(r_table(H, budget));
}

std::uint64_t FibMomentSeries::v(int m) const
{
    if (m < 2 || m > m_max)
        throw std::out_of_range("FibMomentSeries: V(F_" + std::to_string(m) + ") not in series");
    return v_at_fib[static_cast<std::size_t>(m)];
}

std::uint64_t FibMomentSeries::r(int m) const
{
    if (m < 2 || m > m_max)
        throw std::out_of_range("FibMomentSeries: R(F_" + std::to_string(m) + ") not in series");
    return r_at_fib[static_cast<std::size_t>(m)];
}

FibMomentSeries fib_moment_series(int m_max, const Budget& budget)
{
    if (m_max < 2)
        throw std::domain_error("fib_moment_series: m_max must be >= 2");
    if (m_max > kMaxFib64Index)
        throw ResourceError("fib_moment_series: F_" + std::to_string(m_max) + " is out of range");

    const CountTable counts = r_table(fib_u64(m_max), budget);
    FibMomentSeries series;
    series.m_max = m_max;
    series.v_at_fib.assign(static_cast<std::size_t>(m_max) + 1, 0);
    series.r_at_fib.assign(static_cast<std::size_t>(m_max) + 1, 0);

    // stream the squares once, sampling at each F_m
    std::uint64_t v = 0;
    int m = 2;
    std::uint64_t next_sample = fib_u64(m);
    for (std::uint64_t n = 0; n <= counts.h_max && m <= m_max; ++n) {
        const std::uint64_t value = counts.r[n];
        v += value * value;
        while (m <= m_max && n == next_sample) {
            series.v_at_fib[static_cast<std::size_t>(m)] = v;
            series.r_at_fib[static_cast<std::size_t>(m)] = value;
            ++m;
            if (m <= m_max)
                next_sample = fib_u64(m);
        }
    }
    return series;
}

std::uint64_t v_at_fib(int m, const Budget& budget)
{
    if (m < 2)
        throw std::domain_error("v_at_fib: m must be >= 2, got " + std::to_string(m));
    return fib_moment_series(m, budget).v(m);
}

std::int64_t lemma_rhs(const FibMomentSeries& series, int m)
{
    auto v = [&](int k) { return static_cast<std::int64_t>(series.v(k)); };
    return 2 * v(m - 1) + 3 * v(m - 2) - 4 * v(m - 3) - 2 * v(m - 4) + 2 * v(m - 5) + 1 -
           2 * static_cast<std::int64_t>(m / 2);
}

std::vector<LemmaRow> verify_lemma(int m_lo, int m_hi, const Budget& budget)
{
    if (m_lo < 7)
        throw std::domain_error("verify_lemma: the recurrence holds for m >= 7, got " + std::to_string(m_lo));
    if (m_hi < m_lo)
        throw std::domain_error("verify_lemma: empty range");

    const FibMomentSeries series = fib_moment_series(m_hi, budget);
    std::vector<LemmaRow> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        const auto lhs = static_cast<std::int64_t>(series.v(m));
        const std::int64_t rhs = lemma_rhs(series, m);
        rows.push_back({m, lhs, rhs, lhs == rhs});
    }
    return rows;
}

std::uint64_t w_closed_form(int m, const FibMomentSeries& series)
{
    if (m < 7)
        throw std::domain_error("w_closed_form: m must be >= 7, got " + std::to_string(m));
    const auto w = static_cast<std::int64_t>(series.v(m - 3)) - static_cast<std::int64_t>(series.r(m - 3)) -
                   static_cast<std::int64_t>(series.r(m - 5)) - static_cast<std::int64_t>(series.v(m - 5));
    if (w < 0)
        throw std::logic_error("w_closed_form: negative count at m = " + std::to_string(m));
    return static_cast<std::uint64_t>(w);
}

std::uint64_t w_closed_form(int m, const Budget& budget)
{
    if (m < 7)
        throw std::domain_error("w_closed_form: m must be >= 7, got " + std::to_string(m));
    return w_closed_form(m, fib_moment_series(m - 3, budget));
}

} // namespace fibvar
