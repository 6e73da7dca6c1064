#pragma once

#include <cstddef>

#include "herald/kernels.hpp"

namespace herald::kernels::detail {

struct KernelVTable {
  double (*sum)(const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*max_abs_diff)(const double*, const double*, std::size_t);
  MomentSums (*photon_moment_sums)(const double*, std::size_t, int);
  double (*pair_product_sum)(const double*, std::size_t, int);
};

extern const KernelVTable scalar_vtable;

#if defined(HERALD_HAVE_AVX2)
extern const KernelVTable avx2_vtable;
#endif

}  // namespace herald::kernels::detail
