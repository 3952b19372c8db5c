#pragma once

#include "fibvar/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fibvar {

/// Largest index whose Fibonacci number fits in 64 bits (F_93 < 2^64 < F_94).
inline constexpr int kMaxFib64Index = 93;

/// F_m with F_1 = F_2 = 1, exact for every m >= 1. Throws std::domain_error for m < 1.
BigInt fib(int m);

/// F_m as a 64-bit value; throws std::domain_error for m < 1 and
/// std::overflow_error for m > kMaxFib64Index.
std::uint64_t fib_u64(int m);

/*
 * Fibonacci numbers up to a bound, kept two ways:
 *
 *   by index:  entry m is F_m for 1 <= m <= max_index() (entry 0 holds F_0 = 0)
 *   by value:  the distinct values 1, 2, 3, 5, 8, ... with 1 listed once
 *
 * Partitions use strictly increasing parts, so the value view is what the
 * counting code iterates over; the index view serves Zeckendorf and the
 * identities stated in terms of F_m.
 */
class FibTable {
public:
    /// Every F_m <= bound, and always at least F_1 and F_2.
    explicit FibTable(std::uint64_t bound);

    std::uint64_t operator[](int m) const;
    int max_index() const { return static_cast<int>(by_index_.size()) - 1; }

    std::span<const std::uint64_t> values_by_index() const { return by_index_; }
    std::span<const std::uint64_t> distinct_values() const { return distinct_; }

private:
    std::vector<std::uint64_t> by_index_;
    std::vector<std::uint64_t> distinct_;
};

/// All distinct Fibonacci values <= H in increasing order.
std::vector<std::uint64_t> distinct_fib_upto(std::uint64_t H);

/// Indices of a Zeckendorf expansion, strictly decreasing, each >= 2, none adjacent.
struct ZeckendorfRepr {
    std::vector<int> indices;

    /// Sum of F over the indices.
    std::uint64_t value() const;
    bool operator==(const ZeckendorfRepr&) const = default;
};

/// Greedy Zeckendorf expansion of n >= 1. Throws std::domain_error for n < 1.
ZeckendorfRepr zeckendorf(std::uint64_t n);

} // namespace fibvar
