#include <cmath>
#include <cstddef>

#include "kernels_impl.hpp"

namespace herald::kernels::detail {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

MomentSums photon_moment_sums_scalar(const double* c, std::size_t n, int offset) {
  double norm = 0.0, first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(2 * i) + offset;
    const double w = c[i] * c[i];
    norm += w;
    first += f * w;
    second += f * f * w;
  }
  return {norm, first, second};
}

double pair_product_sum_scalar(const double* c, std::size_t n, int offset) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double f = static_cast<double>(2 * i) + offset;
    acc += c[i] * c[i + 1] * std::sqrt((f + 1.0) * (f + 2.0));
  }
  return acc;
}

}  // namespace

const KernelVTable scalar_vtable = {
    sum_scalar,       sum_squares_scalar,        dot_scalar,
    max_abs_diff_scalar, photon_moment_sums_scalar, pair_product_sum_scalar,
};

}  // namespace herald::kernels::detail
