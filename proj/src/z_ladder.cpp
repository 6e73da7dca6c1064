#include "herald/z_ladder.hpp"

#include <cmath>
#include <string>

#include "herald/errors.hpp"
#include "herald/factorials.hpp"

namespace herald {
namespace {

void check_domain(double y) {
  if (!(y >= 0.0) || y > kMaxSeriesParameter) {
    throw DomainError("series parameter y must lie in [0, 0.5 - 1e-9], got " +
                      std::to_string(y));
  }
}

// (1 - 2y)(1 + 2y): for y near 1/2 the factored form keeps full precision
// (1 - 2y is exact by Sterbenz subtraction once 2y >= 0.5).
double one_minus_4y2(double y) { return (1.0 - 2.0 * y) * (1.0 + 2.0 * y); }

}  // namespace

ZLadder::ZLadder(double y, int order) : y_(y) {
  check_domain(y);
  if (order < 0) throw DomainError("ZLadder: order must be >= 0");
  const double q = one_minus_4y2(y);
  const SignedLog inv_q = SignedLog::from_log(+1, -std::log(q));
  const SignedLog sy = SignedLog::from_real(y);

  values_.reserve(order + 1);
  const SignedLog z0 = SignedLog::from_log(+1, -0.5 * std::log(q));
  values_.push_back(z0);
  if (order >= 1) values_.push_back(SignedLog::from_real(4.0) * sy * pow_int(z0, 3));
  for (int n = 1; n < order; ++n) {
    const SignedLog a = SignedLog::from_real(8.0 * n + 4.0) * sy * values_[n];
    const SignedLog b = SignedLog::from_real(4.0 * static_cast<double>(n) * n) * values_[n - 1];
    values_.push_back((a + b) * inv_q);
  }
}

const SignedLog& ZLadder::derivative(int j) const {
  if (j < 0 || j > order()) {
    throw CapacityError("ZLadder: derivative order " + std::to_string(j) +
                        " exceeds capacity " + std::to_string(order()));
  }
  return values_[static_cast<std::size_t>(j)];
}

SignedLog z_derivative_series(double y, int j, double tol) {
  check_domain(y);
  if (j < 0) throw DomainError("z_derivative_series: j must be >= 0");
  if (!(tol > 0.0)) throw DomainError("z_derivative_series: tol must be > 0");

  if (y == 0.0) {
    // Only the k = j/2 term survives (y^0 = 1); odd j has no such term.
    if (j % 2 != 0) return SignedLog::zero();
    const long k = j / 2;
    return SignedLog::from_log(
        +1, 2.0 * log_factorial(2 * k) - 2.0 * log_factorial(k));
  }

  const double log_y = std::log(y);
  SignedLog acc = SignedLog::zero();
  constexpr long kMaxTerms = 100000;
  long k = (j + 1) / 2;
  for (long i = 0; i < kMaxTerms; ++i, ++k) {
    // C(2k,k) (2k)!/(2k-j)! y^(2k-j) = exp(2 lf(2k) - 2 lf(k) - lf(2k-j) + (2k-j) ln y)
    const double lt = 2.0 * log_factorial(2 * k) - 2.0 * log_factorial(k) -
                      log_factorial(2 * k - j) + static_cast<double>(2 * k - j) * log_y;
    const SignedLog term = SignedLog::from_log(+1, lt);
    acc = acc + term;
    if (term.log_mag <= acc.log_mag + std::log(tol)) return acc;
  }
  throw ConvergenceError("z_derivative_series: no convergence after 100000 terms (y = " +
                         std::to_string(y) + ", j = " + std::to_string(j) + ")");
}

SignedLog yz_derivative(const ZLadder& ladder, int k) {
  if (k < 0) throw DomainError("yz_derivative: k must be >= 0");
  if (k > ladder.order()) {
    throw CapacityError("yz_derivative: order " + std::to_string(k) +
                        " exceeds ladder capacity " + std::to_string(ladder.order()));
  }
  const SignedLog sy = SignedLog::from_real(ladder.y());
  if (k == 0) return sy * ladder.derivative(0);
  return sy * ladder.derivative(k) +
         SignedLog::from_real(static_cast<double>(k)) * ladder.derivative(k - 1);
}

}  // namespace herald
