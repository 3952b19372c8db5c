#pragma once

// Slow reference computations used only by tests. None of them share code
// paths with the library routines they check.

#include <cstdint>
#include <vector>

namespace fibvar::oracle {

/// Distinct Fibonacci values <= limit, by direct iteration on pairs.
inline std::vector<std::uint64_t> fib_values(std::uint64_t limit)
{
    std::vector<std::uint64_t> values;
    std::uint64_t a = 1, b = 2;
    if (limit >= 1)
        values.push_back(1);
    while (b <= limit) {
        values.push_back(b);
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return values;
}

/// R(n) for every n <= limit by walking all 2^k subsets of the values <= limit.
inline std::vector<std::uint64_t> subset_counts(std::uint64_t limit)
{
    const auto values = fib_values(limit);
    std::vector<std::uint64_t> counts(limit + 1, 0);
    const std::uint64_t subsets = std::uint64_t{1} << values.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < values.size() && sum <= limit; ++i)
            if (mask >> i & 1u)
                sum += values[i];
        if (sum <= limit)
            ++counts[sum];
    }
    return counts;
}

/// Number of ways to write n as F_{i1} + ... with non-adjacent indices >= 2,
/// by enumerating index subsets.
inline int zeckendorf_representation_count(std::uint64_t n)
{
    std::vector<std::uint64_t> by_index{0, 1, 1};
    while (by_index.back() <= n)
        by_index.push_back(by_index[by_index.size() - 1] + by_index[by_index.size() - 2]);
    const std::size_t k = by_index.size() - 2; // indices 2..size-1
    int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (mask & (mask >> 1))
            continue; // adjacent indices
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1u)
                sum += by_index[i + 2];
        if (sum == n)
            ++count;
    }
    return count;
}

} // namespace fibvar::oracle
