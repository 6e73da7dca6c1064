#pragma once

#include <cstdint>

namespace herald {

// ln(n!), relative error <= 1e-13 for all n.
//
// Backed by a lazily grown prefix table of compensated cumulative sums.
// Concurrent callers are safe: readers see a consistent published prefix while
// a writer extends the table (segmented storage, no reallocation).
double log_factorial(std::int64_t n);

// ln C(n, k). Requires 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

}  // namespace herald
