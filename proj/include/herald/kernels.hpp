#pragma once

#include <cstddef>
#include <span>

namespace herald::kernels {

// Reduction kernels for the amplitude-vector inner loops (norms, overlaps,
// photon-moment sums). Each has a scalar reference implementation and an AVX2
// variant; the backend is picked once at runtime from CPU features and can be
// forced for equivalence testing. Results of the two backends agree to
// accumulation-order rounding only, which the test suite pins down.

enum class Backend { scalar, avx2 };

Backend active_backend() noexcept;
bool backend_supported(Backend b) noexcept;

// Force a specific backend (throws DomainError if unsupported on this CPU).
void force_backend(Backend b);
// Return to CPU-feature autodetection.
void reset_backend() noexcept;

// Plain sum and sum of squares.
double sum(std::span<const double> x) noexcept;
double sum_squares(std::span<const double> x) noexcept;

// Inner product; sizes must match.
double dot(std::span<const double> a, std::span<const double> b);

// max_k |a[k] - b[k]|; sizes must match.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Photon-number moment sums over a parity amplitude vector: entry k multiplies
// the Fock state |f(k)> with f(k) = 2k + parity_offset.
struct MomentSums {
  double norm_sq;  // sum c_k^2
  double first;    // sum f(k)   c_k^2
  double second;   // sum f(k)^2 c_k^2
};
MomentSums photon_moment_sums(std::span<const double> amps, int parity_offset) noexcept;

// sum_k c_k c_{k+1} sqrt((f(k)+1)(f(k)+2)) -- the <a^2> sum for a real-valued
// parity state.
double pair_product_sum(std::span<const double> amps, int parity_offset) noexcept;

}  // namespace herald::kernels
