#pragma once

#include <cmath>
#include <limits>

namespace herald {

// Extended-range scalar stored as (sign, ln|value|). This is the currency of
// every internal product/ratio in the library: quantities like Z^(103)(y) carry
// factorial-scale magnitudes (ln |x| of several thousand) that overflow double
// long before the final, moderate-sized ratios are formed.
//
// Representation rules:
//   sign == 0  <=>  exact zero (log_mag is ignored, kept at -inf)
//   sign == +1/-1 with log_mag = ln|x|
//
// to_real() returns +-inf once log_mag exceeds ~709.78 (the double exp range);
// callers that may leave the representable range must stay in log domain.
struct SignedLog {
  int sign = 0;
  double log_mag = -std::numeric_limits<double>::infinity();

  static SignedLog zero() { return {}; }
  static SignedLog one() { return {+1, 0.0}; }

  static SignedLog from_log(int sign, double log_mag) {
    if (sign == 0) return zero();
    return {sign < 0 ? -1 : +1, log_mag};
  }

  static SignedLog from_real(double x) {
    if (x == 0.0) return zero();
    return {x > 0.0 ? +1 : -1, std::log(std::fabs(x))};
  }

  bool is_zero() const { return sign == 0; }

  double to_real() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_mag);
  }

  SignedLog operator-() const { return {-sign, log_mag}; }

  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.sign * b.sign, a.log_mag + b.log_mag};
  }

  friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return zero();
    return {a.sign * b.sign, a.log_mag - b.log_mag};
  }

  // Log-sum-exp anchored at the larger magnitude. Opposite-sign operands whose
  // log magnitudes agree to within 1e-15 collapse to exact zero, so chains of
  // cancellations cannot leave spurious tiny residues with arbitrary sign.
  friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLog& big = (a.log_mag >= b.log_mag) ? a : b;
    const SignedLog& small = (a.log_mag >= b.log_mag) ? b : a;
    const double d = small.log_mag - big.log_mag;  // <= 0
    if (a.sign == b.sign) {
      return {a.sign, big.log_mag + std::log1p(std::exp(d))};
    }
    if (d > -1e-15) return zero();
    // log(1 - e^d): use expm1 near d = 0 for accuracy.
    const double l = (d > -0.6931471805599453) ? std::log(-std::expm1(d))
                                               : std::log1p(-std::exp(d));
    return {big.sign, big.log_mag + l};
  }

  friend SignedLog operator-(const SignedLog& a, const SignedLog& b) { return a + (-b); }
};

// x^k with the 0^0 = 1 convention (needed for the n = 0 heralding factor).
inline SignedLog pow_int(const SignedLog& x, long k) {
  if (k == 0) return SignedLog::one();
  if (x.sign == 0) return SignedLog::zero();
  int sign = (x.sign < 0 && (k & 1L)) ? -1 : +1;
  return {sign, static_cast<double>(k) * x.log_mag};
}

inline bool abs_less(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b.sign != 0;
  if (b.sign == 0) return false;
  return a.log_mag < b.log_mag;
}

}  // namespace herald
