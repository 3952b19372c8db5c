#include "fibvar/diophantine.hpp"

#include "fibvar/fibonacci.hpp"
#include "fibvar/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibvar {

namespace {

void require_index(int m, int lowest, int highest, const char* what)
{
    if (m < lowest)
        throw std::domain_error(std::string(what) + ": m must be >= " + std::to_string(lowest) + ", got " +
                                std::to_string(m));
    if (m > highest)
        throw ResourceError(std::string(what) + ": m = " + std::to_string(m) + " exceeds enumeration budget " +
                            std::to_string(highest));
}

/// Distinct Fibonacci values strictly below `bound`.
std::vector<std::uint64_t> values_below(std::uint64_t bound)
{
    if (bound == 0)
        return {};
    return distinct_fib_upto(bound - 1);
}

/// Visits every subset of `values` (increasing) whose sum is <= limit,
/// reporting its sum and largest element (0 for the empty set).
template <typename Visit>
void for_each_subset(const std::vector<std::uint64_t>& values, std::uint64_t limit, Visit&& visit)
{
    auto recurse = [&](auto&& self, std::size_t next, std::uint64_t sum, std::uint64_t top) -> void {
        visit(sum, top);
        for (std::size_t i = next; i < values.size(); ++i) {
            if (sum + values[i] > limit)
                break; // values increase, so later ones overflow too
            self(self, i + 1, sum + values[i], values[i]);
        }
    };
    recurse(recurse, 0, 0, 0);
}

/// Subset counts by sum over `values`, for sums <= limit.
std::vector<std::uint64_t> subset_sum_counts(const std::vector<std::uint64_t>& values, std::uint64_t limit)
{
    std::vector<std::uint64_t> counts(limit + 1, 0);
    for_each_subset(values, limit, [&](std::uint64_t sum, std::uint64_t) { ++counts[sum]; });
    return counts;
}

// Bucket slot for the largest part of one side.
enum TopClass : std::size_t { kTopM = 0, kTopM1 = 1, kTopM2 = 2, kTopOther = 3 };

struct WindowBuckets {
    std::uint64_t low = 0; // exclusive
    std::uint64_t high = 0; // inclusive
    std::vector<std::array<std::uint64_t, 4>> by_sum;
    std::set<std::uint64_t> tops;
};

WindowBuckets bucket_window(int m)
{
    const std::uint64_t fm = fib_u64(m), fm1 = fib_u64(m - 1), fm2 = fib_u64(m - 2);
    WindowBuckets buckets;
    buckets.low = fm1;
    buckets.high = fm;
    buckets.by_sum.assign(fm - fm1, {0, 0, 0, 0});
    for_each_subset(distinct_fib_upto(fm), fm, [&](std::uint64_t sum, std::uint64_t top) {
        if (sum <= fm1)
            return;
        std::size_t slot = kTopOther;
        if (top == fm)
            slot = kTopM;
        else if (top == fm1)
            slot = kTopM1;
        else if (top == fm2)
            slot = kTopM2;
        ++buckets.by_sum[sum - fm1 - 1][slot];
        buckets.tops.insert(top);
    });
    return buckets;
}

} // namespace

std::uint64_t count_window(int m, const Budget& budget)
{
    require_index(m, 4, budget.max_enumeration_index, "count_window");
    const WindowBuckets buckets = bucket_window(m);
    std::uint64_t total = 0;
    for (const auto& bucket : buckets.by_sum) {
        const std::uint64_t size = bucket[0] + bucket[1] + bucket[2] + bucket[3];
        total += size * size;
    }
    return total;
}

std::set<std::uint64_t> window_top_parts(int m, const Budget& budget)
{
    require_index(m, 4, budget.max_enumeration_index, "window_top_parts");
    return bucket_window(m).tops;
}

std::uint64_t count_w(int m, const Budget& budget)
{
    require_index(m, 7, budget.max_enumeration_index, "count_w");
    const std::uint64_t f1 = fib_u64(m - 1), f2 = fib_u64(m - 2), f3 = fib_u64(m - 3);

    // X + F_{m-2} lies in (F_{m-3}, F_{m-1}]; Y = X + F_{m-2} - F_{m-3}
    const std::uint64_t x_limit = f1 - f2;
    const std::uint64_t y_limit = f1 - f3;
    const auto xs = subset_sum_counts(values_below(f2), x_limit);
    const auto ys = subset_sum_counts(values_below(f3), y_limit);

    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x <= x_limit; ++x) {
        if (x + f2 <= f3)
            continue;
        total += xs[x] * ys[x + f2 - f3];
    }
    return total;
}

CaseBreakdown case_breakdown(int m, const Budget& budget)
{
    require_index(m, 7, budget.max_enumeration_index, "case_breakdown");
    const WindowBuckets buckets = bucket_window(m);

    CaseBreakdown result;
    result.m = m;
    for (const auto& b : buckets.by_sum) {
        const std::uint64_t size = b[0] + b[1] + b[2] + b[3];
        result.total += size * size;
        result.cases[0] += b[kTopM] * b[kTopM];
        result.cases[1] += b[kTopM1] * b[kTopM1];
        result.cases[2] += b[kTopM2] * b[kTopM2];
        result.cases[3] += 2 * b[kTopM] * b[kTopM1];
        result.cases[4] += 2 * b[kTopM1] * b[kTopM2];
    }
    std::uint64_t classified = 0;
    for (std::uint64_t c : result.cases)
        classified += c;
    result.unclassified = result.total - classified;
    result.w_bruteforce = count_w(m, budget);
    return result;
}

bool CaseReport::pass() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.pass; });
}

CaseReport verify_cases(int m, const Budget& budget)
{
    require_index(m, 7, budget.max_enumeration_index - 1, "verify_cases");

    CaseReport report;
    report.m = m;
    report.breakdown = case_breakdown(m, budget);
    const CaseBreakdown& b = report.breakdown;

    const FibMomentSeries series = fib_moment_series(m, budget);
    auto V = [&](int k) { return static_cast<std::int64_t>(series.v(k)); };
    auto R = [&](int k) { return static_cast<std::int64_t>(series.r(k)); };
    auto as_signed = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };

    const std::int64_t w_m = as_signed(b.w_bruteforce);
    const std::int64_t w_next = as_signed(count_w(m + 1, budget));

    auto check = [&](std::string name, std::int64_t observed, std::int64_t expected) {
        report.checks.push_back({std::move(name), observed, expected, observed == expected});
    };

    check("total = V(F_m) - V(F_{m-1})", as_signed(b.total), V(m) - V(m - 1));
    check("case sum = total", as_signed(b.total - b.unclassified), as_signed(b.total));
    check("case1 = 1", as_signed(b.case_count(1)), 1);
    check("case2 = V(F_{m-2}) - 1", as_signed(b.case_count(2)), V(m - 2) - 1);
    check("case3 = V(F_{m-1}) - 2V(F_{m-3}) - 2R(F_{m-1}) + 1 - 2w_m", as_signed(b.case_count(3)),
          V(m - 1) - 2 * V(m - 3) - 2 * R(m - 1) + 1 - 2 * w_m);
    check("case3 = V(F_{m-1}) - 4V(F_{m-3}) + 2V(F_{m-5}) - 2R(F_{m-1}) + 2R(F_{m-3}) + 2R(F_{m-5}) + 1",
          as_signed(b.case_count(3)),
          V(m - 1) - 4 * V(m - 3) + 2 * V(m - 5) - 2 * R(m - 1) + 2 * R(m - 3) + 2 * R(m - 5) + 1);
    check("case4 = 2R(F_{m-2})", as_signed(b.case_count(4)), 2 * R(m - 2));
    check("case5 = 2(w_{m+1} - R(F_{m-3}))", as_signed(b.case_count(5)), 2 * (w_next - R(m - 3)));
    check("case5 = 2(V(F_{m-2}) - R(F_{m-2}) - R(F_{m-3}) - R(F_{m-4}) - V(F_{m-4}))", as_signed(b.case_count(5)),
          2 * (V(m - 2) - R(m - 2) - R(m - 3) - R(m - 4) - V(m - 4)));
    check("w_m brute force = closed form", w_m, as_signed(w_closed_form(m, series)));
    return report;
}

} // namespace fibvar
