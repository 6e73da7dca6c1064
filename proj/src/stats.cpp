#include "herald/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "herald/errors.hpp"
#include "herald/z_ladder.hpp"

namespace herald {
namespace {

struct LadderStats {
  double mean;
  double second;
  double variance;
  double var_x1;
  double var_x2;
};

double variance_from(double mean, double second) {
  const double v = second - mean * mean;
  if (v < -1e-9) {
    throw ConsistencyError("photon variance " + std::to_string(v) +
                           " negative beyond rounding tolerance");
  }
  return v < 0.0 ? 0.0 : v;
}

LadderStats ladder_stats(const ModelParams& params, int n) {
  const double y1 = params.y1();
  const ZLadder ladder(y1, n + 2);
  const SignedLog sy = SignedLog::from_real(y1);
  const SignedLog& zn = ladder.derivative(n);

  LadderStats out;
  out.mean = (sy * ladder.derivative(n + 1) / zn).to_real();
  out.second = (sy * sy * ladder.derivative(n + 2) / zn).to_real() + out.mean;
  out.variance = variance_from(out.mean, out.second);
  const double corr = (sy * yz_derivative(ladder, n + 1) / zn).to_real();
  out.var_x1 = 0.25 + 0.5 * out.mean + corr;
  out.var_x2 = 0.25 + 0.5 * out.mean - corr;
  return out;
}

double smsv_variance_generic(double s) {
  return ladder_stats(ModelParams(s, 1.0), 0).variance;
}

void check_n(int n) {
  if (n < 0) throw DomainError("herald count n must be >= 0");
}

}  // namespace

SmsvReference smsv_reference(double s) {
  if (!(s > 0.0)) throw DomainError("squeezing amplitude requires s > 0");
  const double sh2 = std::sinh(s) * std::sinh(s);
  SmsvReference ref;
  ref.s = s;
  ref.mean = sh2;
  ref.variance = 2.0 * (sh2 * sh2 + sh2);
  ref.var_x1 = std::exp(2.0 * s) / 4.0;
  ref.var_x2 = std::exp(-2.0 * s) / 4.0;
  ref.qcr = 1.0 / std::sqrt(ref.variance);
  return ref;
}

double mean_photon(const ModelParams& params, int n) {
  check_n(n);
  return ladder_stats(params, n).mean;
}

double second_moment(const ModelParams& params, int n) {
  check_n(n);
  return ladder_stats(params, n).second;
}

double photon_variance(const ModelParams& params, int n) {
  check_n(n);
  return ladder_stats(params, n).variance;
}

std::pair<double, double> quadrature_variances(const ModelParams& params, int n) {
  check_n(n);
  const LadderStats st = ladder_stats(params, n);
  return {st.var_x1, st.var_x2};
}

double qfi(const ModelParams& params, int n) { return photon_variance(params, n); }

double qcr_bound(const ModelParams& params, int n) {
  const double f = qfi(params, n);
  if (f <= 0.0) {
    throw UndefinedBoundError("Cramer-Rao bound undefined at zero Fisher information");
  }
  return 1.0 / std::sqrt(f);
}

double sensitivity_gain(const ModelParams& params, int n) {
  const double bound = qcr_bound(params, n);
  const double ref_var = smsv_variance_generic(params.s());
  if (ref_var <= 0.0) {
    throw UndefinedBoundError("reference Cramer-Rao bound undefined at zero Fisher information");
  }
  return -10.0 * std::log10(bound / (1.0 / std::sqrt(ref_var)));
}

Ratios ratios(const ModelParams& params, int n) {
  check_n(n);
  const LadderStats st = ladder_stats(params, n);
  const SmsvReference ref = smsv_reference(params.s());
  return {st.mean / ref.mean, std::sqrt(st.variance / ref.variance),
          std::sqrt(st.var_x2) / std::sqrt(ref.var_x2)};
}

HeraldStats compute_stats(const ModelParams& params, int n) {
  check_n(n);
  const LadderStats st = ladder_stats(params, n);
  const SmsvReference ref = smsv_reference(params.s());

  HeraldStats out;
  out.s = params.s();
  out.t = params.t();
  out.n = n;
  out.mean = st.mean;
  out.second_moment = st.second;
  out.variance = st.variance;
  out.var_x1 = st.var_x1;
  out.var_x2 = st.var_x2;
  out.qfi = st.variance;
  out.rn = st.mean / ref.mean;
  out.rv = std::sqrt(st.variance / ref.variance);
  out.rs = std::sqrt(st.var_x2) / std::sqrt(ref.var_x2);
  if (st.variance > 0.0) {
    out.qcr = 1.0 / std::sqrt(st.variance);
    // Same functional form for both bounds: at t = 1, n = 0 the two variances
    // are bitwise equal, the ratio is exactly 1 and the gain exactly 0 dB.
    const double ref_qcr = 1.0 / std::sqrt(smsv_variance_generic(params.s()));
    out.gain_db = -10.0 * std::log10(out.qcr / ref_qcr);
  } else {
    out.qcr = std::numeric_limits<double>::infinity();
    out.gain_db = -std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace herald
