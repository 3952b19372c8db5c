#include "fibvar/fibonacci.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace fibvar {

BigInt fib(int m)
{
    if (m < 1)
        throw std::domain_error("fib: index must be >= 1, got " + std::to_string(m));
    BigInt result;
    mpz_fib_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
    return result;
}

std::uint64_t fib_u64(int m)
{
    if (m < 1)
        throw std::domain_error("fib: index must be >= 1, got " + std::to_string(m));
    if (m > kMaxFib64Index)
        throw std::overflow_error("fib: F_" + std::to_string(m) + " exceeds 64 bits");
    std::uint64_t prev = 0, cur = 1;
    for (int i = 1; i < m; ++i) {
        const std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

FibTable::FibTable(std::uint64_t bound)
{
    by_index_ = {0, 1, 1};
    for (int m = 3; m <= kMaxFib64Index; ++m) {
        const std::uint64_t next = by_index_[m - 1] + by_index_[m - 2];
        if (next > bound)
            break;
        by_index_.push_back(next);
    }
    for (std::size_t m = 2; m < by_index_.size(); ++m)
        if (by_index_[m] <= bound)
            distinct_.push_back(by_index_[m]);
}

std::uint64_t FibTable::operator[](int m) const
{
    if (m < 0 || m > max_index())
        throw std::out_of_range("FibTable: index " + std::to_string(m) + " outside table");
    return by_index_[static_cast<std::size_t>(m)];
}

std::vector<std::uint64_t> distinct_fib_upto(std::uint64_t H)
{
    const FibTable table(H);
    return {table.distinct_values().begin(), table.distinct_values().end()};
}

std::uint64_t ZeckendorfRepr::value() const
{
    std::uint64_t total = 0;
    for (int index : indices)
        total += fib_u64(index);
    return total;
}

ZeckendorfRepr zeckendorf(std::uint64_t n)
{
    if (n < 1)
        throw std::domain_error("zeckendorf: n must be >= 1");
    const FibTable table(n);
    ZeckendorfRepr repr;
    std::uint64_t rest = n;
    for (int m = table.max_index(); m >= 2 && rest > 0; --m) {
        if (table[m] <= rest) {
            repr.indices.push_back(m);
            rest -= table[m];
            --m; // greedy never picks adjacent indices
        }
    }
    return repr;
}

} // namespace fibvar
