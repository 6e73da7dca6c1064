#include "herald/kernels.hpp"

#include <atomic>

#include "herald/errors.hpp"
#include "kernels_impl.hpp"

namespace herald::kernels {
namespace {

using detail::KernelVTable;

const KernelVTable* detect() {
#if defined(HERALD_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &detail::avx2_vtable;
  }
#endif
  return &detail::scalar_vtable;
}

std::atomic<const KernelVTable*> g_vtable{nullptr};

const KernelVTable& vt() {
  const KernelVTable* p = g_vtable.load(std::memory_order_acquire);
  if (p == nullptr) {
    p = detect();
    g_vtable.store(p, std::memory_order_release);
  }
  return *p;
}

}  // namespace

Backend active_backend() noexcept {
#if defined(HERALD_HAVE_AVX2)
  if (&vt() == &detail::avx2_vtable) return Backend::avx2;
#endif
  return Backend::scalar;
}

bool backend_supported(Backend b) noexcept {
  if (b == Backend::scalar) return true;
#if defined(HERALD_HAVE_AVX2)
  if (b == Backend::avx2) {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }
#endif
  return false;
}

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw DomainError("force_backend: backend not supported on this CPU");
  }
  if (b == Backend::scalar) {
    g_vtable.store(&detail::scalar_vtable, std::memory_order_release);
    return;
  }
#if defined(HERALD_HAVE_AVX2)
  g_vtable.store(&detail::avx2_vtable, std::memory_order_release);
#endif
}

void reset_backend() noexcept {
  g_vtable.store(detect(), std::memory_order_release);
}

double sum(std::span<const double> x) noexcept { return vt().sum(x.data(), x.size()); }

double sum_squares(std::span<const double> x) noexcept {
  return vt().sum_squares(x.data(), x.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("dot: size mismatch");
  return vt().dot(a.data(), b.data(), a.size());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("max_abs_diff: size mismatch");
  return vt().max_abs_diff(a.data(), b.data(), a.size());
}

MomentSums photon_moment_sums(std::span<const double> amps, int parity_offset) noexcept {
  return vt().photon_moment_sums(amps.data(), amps.size(), parity_offset);
}

double pair_product_sum(std::span<const double> amps, int parity_offset) noexcept {
  return vt().pair_product_sum(amps.data(), amps.size(), parity_offset);
}

}  // namespace herald::kernels
