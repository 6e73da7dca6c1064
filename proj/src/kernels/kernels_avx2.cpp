// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached after the runtime CPU check.

#include <cmath>
#include <cstddef>
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace herald::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  const double a = _mm_cvtsd_f64(lo);
  const double b = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  return a > b ? a : b;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, d));
  }
  double m = hmax(acc);
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

MomentSums photon_moment_sums_avx2(const double* c, std::size_t n, int offset) {
  const __m256d step = _mm256_set1_pd(8.0);  // f advances by 2*4 per vector
  __m256d f = _mm256_add_pd(_mm256_set_pd(6.0, 4.0, 2.0, 0.0),
                            _mm256_set1_pd(static_cast<double>(offset)));
  __m256d norm = _mm256_setzero_pd();
  __m256d first = _mm256_setzero_pd();
  __m256d second = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(c + i);
    const __m256d w = _mm256_mul_pd(v, v);
    const __m256d fw = _mm256_mul_pd(f, w);
    norm = _mm256_add_pd(norm, w);
    first = _mm256_add_pd(first, fw);
    second = _mm256_fmadd_pd(f, fw, second);
    f = _mm256_add_pd(f, step);
  }
  MomentSums s{hsum(norm), hsum(first), hsum(second)};
  for (; i < n; ++i) {
    const double fi = static_cast<double>(2 * i) + offset;
    const double w = c[i] * c[i];
    s.norm_sq += w;
    s.first += fi * w;
    s.second += fi * fi * w;
  }
  return s;
}

double pair_product_sum_avx2(const double* c, std::size_t n, int offset) {
  if (n < 2) return 0.0;
  const std::size_t pairs = n - 1;
  __m256d f = _mm256_add_pd(_mm256_set_pd(6.0, 4.0, 2.0, 0.0),
                            _mm256_set1_pd(static_cast<double>(offset)));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    const __m256d w = _mm256_sqrt_pd(
        _mm256_mul_pd(_mm256_add_pd(f, one), _mm256_add_pd(f, two)));
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(c + i + 1));
    acc = _mm256_fmadd_pd(prod, w, acc);
    f = _mm256_add_pd(f, _mm256_set1_pd(8.0));
  }
  double r = hsum(acc);
  for (; i < pairs; ++i) {
    const double fi = static_cast<double>(2 * i) + offset;
    r += c[i] * c[i + 1] * std::sqrt((fi + 1.0) * (fi + 2.0));
  }
  return r;
}

}  // namespace

const KernelVTable avx2_vtable = {
    sum_avx2,       sum_squares_avx2,        dot_avx2,
    max_abs_diff_avx2, photon_moment_sums_avx2, pair_product_sum_avx2,
};

}  // namespace herald::kernels::detail
