#pragma once

#include <span>
#include <utility>
#include <vector>

#include "herald/fock_vector.hpp"

namespace herald {

// Two-mode amplitudes after the beam splitter, stored by anti-diagonals of
// total photon number: a passive splitter conserves the photon number, so an
// input level |M, 0> populates exactly the entries (j, M-j). diagonal(M) holds
// amp(j, M-j) for j = 0..M contiguously; diagonals outside the input parity
// stay empty.
class TwoModeAmplitudes {
 public:
  explicit TwoModeAmplitudes(int n_total) : diags_(n_total + 1) {}

  int n_total() const { return static_cast<int>(diags_.size()) - 1; }

  // Amplitude of |j>_1 |k>_2; zero off the populated diagonals.
  double amp(int j, int k) const;

  std::span<const double> diagonal(int total) const {
    return diags_[static_cast<std::size_t>(total)];
  }
  std::vector<double>& mutable_diagonal(int total) {
    return diags_[static_cast<std::size_t>(total)];
  }

  double norm_sq() const;

 private:
  std::vector<std::vector<double>> diags_;
};

// Expands each input level through a_1+ -> t a_1+ - r a_2+ (vacuum in mode 2):
//   |m, 0>  ->  sum_j sqrt(C(m, j)) t^j (-r)^(m-j) |j, m-j>.
// Norm is preserved up to the input's truncation tail. Throws CapacityError if
// n_total cannot hold the input support.
TwoModeAmplitudes bs_transform(const FockVector& input, double t, int n_total);

// Mode-1 slice at mode-2 photon number n, renormalized with the global sign
// fixed so the lowest nonzero amplitude is positive. Second member is the
// pre-normalization squared norm, i.e. the heralding probability. Throws
// NoSupportError on a zero-mass slice.
std::pair<FockVector, double> project_and_normalize(const TwoModeAmplitudes& state, int n);

// Plain direct-summation moments; no closed forms anywhere on this path.
// var_x1/var_x2 use <X1^2> = (2<a^2> + 2<n> + 1)/4 for real parity states
// (first quadrature moments vanish by parity).
struct StateMoments {
  double mean;
  double second_moment;
  double var_x1;
  double var_x2;
};
StateMoments moments_from_amplitudes(const FockVector& state);

// Both sides of the coherent-state overlap identity for the squeezed even
// state parameterized by R: the closed form
//   <alpha|SS> = sqrt(2R/(1+R^2)) exp(-R^2 alpha^2 / (1+R^2))
// versus the series built from the amplitudes a_2n = y^n sqrt((2n)!)/(sqrt(Z) n!),
// y = (1-R^2)/(2(1+R^2)), paired with coherent amplitudes
// e^(-alpha^2/2) alpha^(2n)/sqrt((2n)!). The caller asserts
// |series - closed| <= tol * |closed|.
struct OverlapCheck {
  double series_value;
  double closed_value;
};
OverlapCheck coherent_overlap_check(double R, double alpha, double tol);

// The a_2n amplitudes above, as plain reals (used by the R = e^-s bridge).
std::vector<double> squeezed_overlap_amplitudes(double R, int count);

}  // namespace herald
