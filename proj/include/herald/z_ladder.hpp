#pragma once

#include <vector>

#include "herald/signed_log.hpp"

namespace herald {

// Largest series parameter accepted: Z and all its derivatives diverge at
// y = 1/2 (infinitely squeezed light), so the domain is clipped just below.
inline constexpr double kMaxSeriesParameter = 0.5 - 1e-9;

// Default derivative capacity: covers herald counts up to n = 100 plus the
// n+2 order needed by the second-moment formulas.
inline constexpr int kDefaultLadderOrder = 128;

// Cached derivatives Z^(0..K) of the generating function
// Z(y) = (1 - 4y^2)^(-1/2) at a fixed y in [0, 1/2), kept in SignedLog form
// because high orders reach factorial-scale magnitudes.
//
// Built by the three-term recurrence obtained by differentiating the identity
// (1 - 4y^2) Z' = 4 y Z exactly n times:
//
//   Z^(n+1) = [ (8n+4) y Z^(n) + 4 n^2 Z^(n-1) ] / (1 - 4y^2)
//
// seeded with Z^(0) = (1-4y^2)^(-1/2) and Z^(1) = 4 y Z^3. Every term is
// nonnegative on the domain, so the recurrence accumulates no cancellation;
// z_derivative_series() is the independent oracle it is validated against.
//
// Immutable after construction and safe to share across threads.
class ZLadder {
 public:
  ZLadder(double y, int order);

  double y() const { return y_; }
  int order() const { return static_cast<int>(values_.size()) - 1; }

  // Z^(j)(y); throws CapacityError for j > order().
  const SignedLog& derivative(int j) const;

 private:
  double y_;
  std::vector<SignedLog> values_;
};

// Independent series oracle: term-wise differentiation of
// Z(y) = sum_k C(2k,k) y^(2k), i.e.
//   Z^(j)(y) = sum_{k >= ceil(j/2)} C(2k,k) (2k)!/(2k-j)! y^(2k-j),
// summed in SignedLog until the current term drops below tol times the running
// sum. Throws ConvergenceError if 100000 terms do not converge (only possible
// as y -> 1/2).
SignedLog z_derivative_series(double y, int j, double tol);

// k-th derivative of the product y. Z(y): (yZ)^(k) = y Z^(k) + k Z^(k-1)
// (exact Leibniz, d^2 y / dy^2 = 0); k = 0 gives y Z.
SignedLog yz_derivative(const ZLadder& ladder, int k);

}  // namespace herald
