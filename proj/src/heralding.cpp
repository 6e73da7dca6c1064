#include "herald/heralding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "herald/errors.hpp"
#include "herald/factorials.hpp"
#include "herald/kernels.hpp"
#include "herald/scalar_math.hpp"
#include "herald/signed_log.hpp"
#include "herald/z_ladder.hpp"

namespace herald {
namespace {

double clamp_probability(double p, const char* what) {
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw ConsistencyError(std::string(what) + ": probability " + std::to_string(p) +
                           " outside [0, 1] beyond rounding tolerance");
  }
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace

double success_probability(const ModelParams& params, int n) {
  if (n < 0) throw DomainError("herald count n must be >= 0");
  const double t = params.t();
  const double y1 = params.y1();
  // (1-t^2)/t^2 vanishes at t = 1; pow_int supplies the 0^0 = 1 convention
  // that makes P_0(t=1) = Z(y0)/cosh s = 1.
  const SignedLog bs_factor =
      SignedLog::from_real((1.0 - t) * (1.0 + t)) / SignedLog::from_real(t * t);
  const SignedLog z_n = ZLadder(y1, n).derivative(n);
  const SignedLog p = pow_int(bs_factor, n) *
                      pow_int(SignedLog::from_real(y1), n) *
                      SignedLog::from_log(+1, -log_factorial(n)) * z_n /
                      SignedLog::from_log(+1, log_cosh(params.s()));
  return clamp_probability(p.to_real(), "success_probability");
}

HeraldDistribution herald_distribution(const ModelParams& params, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  HeraldDistribution dist{params, {}, 0.0};
  dist.probs.resize(n_max + 1);
  // One ladder serves every n; success_probability would rebuild it per call.
  const ZLadder ladder(params.y1(), n_max);
  const double t = params.t();
  const SignedLog bs_factor =
      SignedLog::from_real((1.0 - t) * (1.0 + t)) / SignedLog::from_real(t * t);
  const SignedLog sy1 = SignedLog::from_real(params.y1());
  const SignedLog inv_cosh = SignedLog::from_log(+1, -log_cosh(params.s()));
  for (int n = 0; n <= n_max; ++n) {
    const SignedLog p = pow_int(bs_factor, n) * pow_int(sy1, n) *
                        SignedLog::from_log(+1, -log_factorial(n)) *
                        ladder.derivative(n) * inv_cosh;
    dist.probs[n] = clamp_probability(p.to_real(), "herald_distribution");
  }
  dist.tail = std::max(0.0, 1.0 - kernels::sum(dist.probs));
  return dist;
}

HeraldDistribution herald_distribution_adaptive(const ModelParams& params,
                                                double target_tail, int ceiling) {
  if (!(target_tail > 0.0)) throw DomainError("target_tail must be > 0");
  if (ceiling < 0) throw DomainError("ceiling must be >= 0");
  int n_max = std::min(16, ceiling);
  while (true) {
    HeraldDistribution dist = herald_distribution(params, n_max);
    if (dist.tail < target_tail || n_max >= ceiling) return dist;
    n_max = std::min(2 * n_max, ceiling);
  }
}

}  // namespace herald
