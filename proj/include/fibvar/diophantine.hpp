#pragma once

#include "fibvar/errors.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace fibvar {

/*
 * Exhaustive counts for the equal-sum system
 *
 *     F_{m-1} < x_1 + ... + x_s = y_1 + ... + y_t <= F_m
 *
 * over strictly increasing Fibonacci values. Every subset of distinct values
 * <= F_m is visited; subsets are bucketed by (sum, largest part) and ordered
 * pairs are counted within each bucket. Nothing here reads the DP tables, so
 * the results are an independent check on them.
 */

/// Ordered pairs of subsets with equal sum in (F_{m-1}, F_m]. Requires 4 <= m <= budget.
std::uint64_t count_window(int m, const Budget& budget = {});

/// Largest parts of the subsets whose sums land in (F_{m-1}, F_m].
std::set<std::uint64_t> window_top_parts(int m, const Budget& budget = {});

/// Pair counts split by (max xs, max ys):
///   case 1: both F_m          case 2: both F_{m-1}     case 3: both F_{m-2}
///   case 4: {F_m, F_{m-1}}    case 5: {F_{m-1}, F_{m-2}}
struct CaseBreakdown {
    int m = 0;
    std::uint64_t total = 0;
    std::array<std::uint64_t, 5> cases{};
    std::uint64_t unclassified = 0; // pairs fitting none of the five; zero for m >= 7
    std::uint64_t w_bruteforce = 0;

    std::uint64_t case_count(int k) const { return cases.at(static_cast<std::size_t>(k - 1)); }
};

CaseBreakdown case_breakdown(int m, const Budget& budget = {});

/// Brute-force w_m: pairs with x-part topped by F_{m-2}, y-part topped by F_{m-3},
/// F_{m-3} < X + F_{m-2} = Y + F_{m-3} <= F_{m-1} where X, Y are sums of
/// distinct values below F_{m-2} and F_{m-3}. Requires 7 <= m <= budget.
std::uint64_t count_w(int m, const Budget& budget = {});

struct CaseCheck {
    std::string name;
    std::int64_t observed;
    std::int64_t expected;
    bool pass;
};

struct CaseReport {
    int m = 0;
    CaseBreakdown breakdown;
    std::vector<CaseCheck> checks;

    bool pass() const;
};

/// Brute-force counts against the closed forms assembled from DP values.
/// Requires 7 <= m <= budget.max_enumeration_index - 1 (case 5 needs w_{m+1}).
CaseReport verify_cases(int m, const Budget& budget = {});

} // namespace fibvar
