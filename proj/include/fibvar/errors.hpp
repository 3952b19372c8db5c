#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibvar {

/// Raised when a request would exceed a configured memory or enumeration cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the exact solver when the system has no unique solution.
class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caps for table construction and brute-force enumeration.
struct Budget {
    /// Largest number of table entries (H + 1) a range DP may allocate.
    std::uint64_t max_entries = 100'000'000;
    /// Largest Fibonacci index m whose window (F_{m-1}, F_m] may be enumerated.
    int max_enumeration_index = 20;
};

} // namespace fibvar
