#pragma once

#include <utility>

#include "herald/model_params.hpp"

namespace herald {

// Closed-form reference values for the un-subtracted squeezed-vacuum state.
struct SmsvReference {
  double s;
  double mean;      // sinh^2 s
  double variance;  // 2 (sinh^4 s + sinh^2 s)
  double var_x1;    // e^(2s)/4
  double var_x2;    // e^(-2s)/4
  double qcr;       // 1/sqrt(variance)
};

SmsvReference smsv_reference(double s);

// <n> for the n-heralded state: y1 Z^(n+1)/Z^(n) (the even and odd closed
// forms coincide in this indexing). Ratios of ladder entries are formed as
// log-magnitude differences before exponentiation.
double mean_photon(const ModelParams& params, int n);

// <n^2> = y1^2 Z^(n+2)/Z^(n) + <n>.
double second_moment(const ModelParams& params, int n);

// dn = <n^2> - <n>^2; the final subtraction runs in plain doubles. Results in
// [-1e-9, 0) are rounding and clamp to 0; anything more negative raises
// ConsistencyError.
double photon_variance(const ModelParams& params, int n);

// (D2X1, D2X2) = 1/4 + <n>/2 +- y1 (y1 Z)^(n+1) / Z^(n); vacuum variance 1/4.
std::pair<double, double> quadrature_variances(const ModelParams& params, int n);

// Quantum Fisher information of the phase generator n/2: equals the photon
// variance identically.
double qfi(const ModelParams& params, int n);

// Cramer-Rao phase bound 1/sqrt(qfi); throws UndefinedBoundError at qfi = 0.
double qcr_bound(const ModelParams& params, int n);

// -10 log10(qcr_n / qcr_smsv) in dB, positive when the heralded state beats
// the input state. The reference bound is computed through the same generic
// path at t = 1, n = 0, so the gain is exactly 0 there.
double sensitivity_gain(const ModelParams& params, int n);

struct Ratios {
  double rn;  // <n>_n / sinh^2 s
  double rv;  // sqrt(dn_n / dn_smsv)
  double rs;  // sqrt(D2X2_n) / (e^-s / 2), the squeezed-quadrature ratio
};
Ratios ratios(const ModelParams& params, int n);

// Full record for one (s, t, n); one ladder evaluation serves every field.
struct HeraldStats {
  double s;
  double t;
  int n;
  double mean;
  double second_moment;
  double variance;
  double var_x1;
  double var_x2;
  double qfi;
  double qcr;      // +inf when qfi = 0
  double rn;
  double rv;
  double rs;
  double gain_db;  // -inf when qfi = 0
};

HeraldStats compute_stats(const ModelParams& params, int n);

}  // namespace herald
