#include "herald/factorials.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <mutex>

#include "herald/errors.hpp"

namespace herald {
namespace {

// Segmented prefix table: fixed array of chunk pointers, chunks never move, so
// readers can index the published prefix without locking. Writers extend under
// a mutex and publish whole chunks with a release store.
constexpr std::int64_t kChunkSize = 4096;
constexpr std::int64_t kMaxChunks = 1024;  // 4.2M entries; far beyond any real use

struct FactorialTable {
  std::array<double*, kMaxChunks> chunks{};
  std::atomic<std::int64_t> published{0};  // number of valid entries
  std::mutex grow_mutex;
  // Live Neumaier accumulator for the cumulative sum of ln i; entries store
  // the compensated total, the (sum, carry) pair carries on across chunks.
  double sum = 0.0;
  double carry = 0.0;

  ~FactorialTable() {
    for (auto* c : chunks) delete[] c;
  }

  void extend_to(std::int64_t n) {
    std::lock_guard<std::mutex> lock(grow_mutex);
    std::int64_t size = published.load(std::memory_order_relaxed);
    if (n < size) return;
    while (size <= n) {
      const std::int64_t chunk_idx = size / kChunkSize;
      if (chunk_idx >= kMaxChunks) return;  // callers fall back to direct summation
      if (chunks[chunk_idx] == nullptr) chunks[chunk_idx] = new double[kChunkSize];
      double* chunk = chunks[chunk_idx];
      const std::int64_t end = (chunk_idx + 1) * kChunkSize;
      for (std::int64_t i = size; i < end; ++i) {
        if (i > 0) {
          const double term = std::log(static_cast<double>(i));
          const double t = sum + term;
          carry += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
          sum = t;
        }
        chunk[i - chunk_idx * kChunkSize] = sum + carry;
      }
      size = end;
      published.store(size, std::memory_order_release);
    }
  }

  double entry(std::int64_t n) const {
    return chunks[n / kChunkSize][n % kChunkSize];
  }
};

FactorialTable& table() {
  static FactorialTable t;
  return t;
}

}  // namespace

double log_factorial(std::int64_t n) {
  if (n < 0) throw DomainError("log_factorial: n must be >= 0");
  auto& t = table();
  std::int64_t size = t.published.load(std::memory_order_acquire);
  if (n >= size) {
    t.extend_to(n);
    size = t.published.load(std::memory_order_acquire);
  }
  if (n < size) return t.entry(n);
  // Past the table capacity: finish by direct summation from the last entry.
  double sum = t.entry(size - 1);
  double carry = 0.0;
  for (std::int64_t i = size; i <= n; ++i) {
    const double term = std::log(static_cast<double>(i));
    const double v = sum + term;
    carry += (std::fabs(sum) >= std::fabs(term)) ? (sum - v) + term : (term - v) + sum;
    sum = v;
  }
  return sum + carry;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace herald
