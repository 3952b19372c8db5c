#include "fibvar/partition_counts.hpp"

#include "fibvar/fibonacci.hpp"

#include <stdexcept>
#include <string>

namespace fibvar {

CountTable r_table(std::uint64_t H, const Budget& budget)
{
    if (H >= budget.max_entries || H > kMaxTableIndex)
        throw ResourceError("r_table: H = " + std::to_string(H) + " needs " + std::to_string(H + 1) +
                            " entries, budget is " + std::to_string(budget.max_entries));

    CountTable table;
    table.h_max = H;
    table.r.assign(H + 1, 0);
    table.r[0] = 1;
    auto* counts = table.r.data();
    for (std::uint64_t value : distinct_fib_upto(H)) {
        // downward sweep: each value used at most once
        for (std::uint64_t n = H; n >= value; --n)
            counts[n] += counts[n - value];
    }
    return table;
}

std::uint64_t r(std::int64_t n, const Budget& budget)
{
    if (n < 0)
        return 0;
    const auto index = static_cast<std::uint64_t>(n);
    return r_table(index, budget)[index];
}

CarlitzReport check_carlitz(int m_max, const Budget& budget)
{
    if (m_max < 2)
        throw std::domain_error("check_carlitz: m_max must be >= 2");
    if (m_max > kMaxFib64Index)
        throw ResourceError("check_carlitz: F_" + std::to_string(m_max) + " is out of range");
    const CountTable table = r_table(fib_u64(m_max), budget);

    CarlitzReport report;
    for (int m = 2; m <= m_max; ++m) {
        CarlitzRow row{m, table[fib_u64(m)], static_cast<std::uint64_t>(m / 2), false};
        row.pass = row.r_at_fib == row.expected;
        report.pass = report.pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

SqrtBoundReport check_sqrt_bound(const CountTable& table)
{
    SqrtBoundReport report;
    for (std::uint64_t n = 0; n <= table.h_max; ++n) {
        const std::uint64_t value = table.r[n];
        const std::uint64_t square = value * value;
        if (square > n + 1 && report.bound_holds) {
            report.bound_holds = false;
            report.first_violation = n;
        }
        if (square == n + 1)
            report.equality_positions.push_back(n);
    }
    for (int m = 2; m <= 32; ++m) {
        const std::uint64_t f = fib_u64(m);
        const std::uint64_t candidate = f * f - 1;
        if (candidate > table.h_max)
            break;
        if (report.expected_positions.empty() || report.expected_positions.back() != candidate)
            report.expected_positions.push_back(candidate);
    }
    report.pass = report.bound_holds && report.equality_positions == report.expected_positions;
    return report;
}

SqrtBoundReport check_sqrt_bound(std::uint64_t H, const Budget& budget)
{
    return check_sqrt_bound(r_table(H, budget));
}

} // namespace fibvar
