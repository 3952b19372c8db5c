#pragma once

#include "fibvar/errors.hpp"

#include <cstdint>
#include <vector>

namespace fibvar {

/// Largest H accepted regardless of budget: keeps V(H) <= (H+1)(H+2)/2 inside 64 bits.
inline constexpr std::uint64_t kMaxTableIndex = 6'000'000'000ULL;

/*
 * R(n) for 0 <= n <= h_max, where R(n) counts sets of distinct Fibonacci
 * values summing to n. Entries are stored as 32 bits: R(n) <= sqrt(n+1),
 * so this is exact for every h_max below 2^64.
 */
struct CountTable {
    std::uint64_t h_max = 0;
    std::vector<std::uint32_t> r;

    std::uint64_t operator[](std::uint64_t n) const { return r.at(n); }
    std::uint64_t size() const { return r.size(); }
};

/// Distinct-parts DP over the Fibonacci values <= H.
/// Throws ResourceError when H + 1 exceeds budget.max_entries.
CountTable r_table(std::uint64_t H, const Budget& budget = {});

/// R(n), with R(n) = 0 for n < 0.
std::uint64_t r(std::int64_t n, const Budget& budget = {});

struct CarlitzRow {
    int m;
    std::uint64_t r_at_fib; // R(F_m)
    std::uint64_t expected; // floor(m / 2)
    bool pass;
};

struct CarlitzReport {
    std::vector<CarlitzRow> rows;
    bool pass = true;
};

/// Checks R(F_m) = floor(m/2) for 2 <= m <= m_max.
CarlitzReport check_carlitz(int m_max, const Budget& budget = {});

struct SqrtBoundReport {
    bool bound_holds = true; // R(n)^2 <= n + 1 throughout
    std::uint64_t first_violation = 0;
    std::vector<std::uint64_t> equality_positions; // {n : R(n)^2 = n + 1}
    std::vector<std::uint64_t> expected_positions; // {F_m^2 - 1 <= H : m >= 2}
    bool pass = true;
};

SqrtBoundReport check_sqrt_bound(std::uint64_t H, const Budget& budget = {});
SqrtBoundReport check_sqrt_bound(const CountTable& table);

} // namespace fibvar
