#include "herald/states.hpp"

#include <cmath>
#include <string>

#include "herald/errors.hpp"
#include "herald/factorials.hpp"
#include "herald/kernels.hpp"
#include "herald/scalar_math.hpp"
#include "herald/z_ladder.hpp"

namespace herald {
namespace {

// ln of the un-normalized squared series term p_k for herald count n, chosen
// so that sum_k p_k = Z^(n)(y1) exactly (the odd case absorbs one power of y1).
// Even n = 2m: p_k = y1^(2k) [(2(k+m))!]^2 / [((k+m)!)^2 (2k)!]
// Odd  n = 2m+1: p_k = y1^(2k+1) [(2(k+m+1))!]^2 / [((k+m+1)!)^2 (2k+1)!]
double log_sq_term(double log_y1, int n, long k) {
  if (n % 2 == 0) {
    const long m = n / 2;
    return 2.0 * k * log_y1 + 2.0 * log_factorial(2 * (k + m)) -
           2.0 * log_factorial(k + m) - log_factorial(2 * k);
  }
  const long m = n / 2;
  return (2.0 * k + 1.0) * log_y1 + 2.0 * log_factorial(2 * (k + m + 1)) -
         2.0 * log_factorial(k + m + 1) - log_factorial(2 * k + 1);
}

void check_cutoff(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw DomainError("truncation cutoff must lie in (0, 1), got " + std::to_string(eps));
  }
}

// Round-off allowance added to the certified analytic tail: the stored bound
// also has to cover the floating-point error of summing K+1 squared exp()s.
double fp_allowance(int K) { return 1e-15 + 5e-16 * (K + 1); }

}  // namespace

int truncation_cutoff(const ModelParams& params, int n, double eps) {
  if (n < 0) throw DomainError("herald count n must be >= 0");
  check_cutoff(eps);
  const double y1 = params.y1();
  const double log_y1 = std::log(y1);
  const double rho = std::max(4.0 * y1 * y1, 0.9 * (4.0 * y1 * y1) + 0.1);
  const double log_tail_factor = std::log(rho / (1.0 - rho));
  const double log_z = ZLadder(y1, n).derivative(n).log_mag;

  double prev = log_sq_term(log_y1, n, 0);
  constexpr long kMaxIndex = 1000000;
  for (long k = 1; k <= kMaxIndex; ++k) {
    const double cur = log_sq_term(log_y1, n, k);
    if (cur - prev <= std::log(rho) &&
        cur + log_tail_factor - log_z <= std::log(eps)) {
      return static_cast<int>(k);
    }
    prev = cur;
  }
  throw ConvergenceError("truncation_cutoff: cannot certify eps = " + std::to_string(eps) +
                         " within index 1e6");
}

FockVector heralded_amplitudes(const ModelParams& params, int n, double cutoff) {
  if (n < 0) throw DomainError("herald count n must be >= 0");
  check_cutoff(cutoff);
  const double y1 = params.y1();
  const double log_y1 = std::log(y1);
  const int K = truncation_cutoff(params, n, cutoff);
  const double log_z = ZLadder(y1, n).derivative(n).log_mag;

  FockVector state;
  state.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
  state.herald_n = n;
  state.amps.resize(K + 1);
  for (long k = 0; k <= K; ++k) {
    state.amps[k] = std::exp(0.5 * (log_sq_term(log_y1, n, k) - log_z));
  }
  state.trunc_n = 2 * K + state.parity_offset();

  // Tail actually certified at K (can be smaller than the requested cutoff).
  const double rho = std::max(4.0 * y1 * y1, 0.9 * (4.0 * y1 * y1) + 0.1);
  const double cert = std::exp(log_sq_term(log_y1, n, K) - log_z) * rho / (1.0 - rho);
  state.tail_bound = std::min(cutoff, cert) + fp_allowance(K);
  return state;
}

FockVector smsv_amplitudes(double s, double cutoff) {
  if (!(s > 0.0)) throw DomainError("squeezing amplitude requires s > 0, got " + std::to_string(s));
  check_cutoff(cutoff);
  const ModelParams params(s, 1.0);
  const double y0 = params.y0();
  const double log_y0 = std::log(y0);
  const double half_log_cosh = 0.5 * log_cosh(s);
  const int K = truncation_cutoff(params, 0, cutoff);

  FockVector state;
  state.parity = Parity::even;
  state.herald_n = 0;
  state.amps.resize(K + 1);
  for (long k = 0; k <= K; ++k) {
    state.amps[k] = std::exp(k * log_y0 + 0.5 * log_factorial(2 * k) -
                             log_factorial(k) - half_log_cosh);
  }
  state.trunc_n = 2 * K;

  const double rho = std::max(4.0 * y0 * y0, 0.9 * (4.0 * y0 * y0) + 0.1);
  const double log_z = ZLadder(y0, 0).derivative(0).log_mag;
  const double cert = std::exp(log_sq_term(log_y0, 0, K) - log_z) * rho / (1.0 - rho);
  state.tail_bound = std::min(cutoff, cert) + fp_allowance(K);
  return state;
}

double FockVector::norm_sq() const { return kernels::sum_squares(amps); }

}  // namespace herald
