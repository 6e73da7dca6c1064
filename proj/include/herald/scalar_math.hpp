#pragma once

#include <cmath>

namespace herald {

// ln cosh s without overflow for large s.
inline double log_cosh(double s) {
  const double a = std::fabs(s);
  return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453;
}

}  // namespace herald
