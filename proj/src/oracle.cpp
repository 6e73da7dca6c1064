#include "herald/oracle.hpp"

#include <cmath>
#include <string>

#include "herald/errors.hpp"
#include "herald/factorials.hpp"
#include "herald/kernels.hpp"
#include "herald/signed_log.hpp"

namespace herald {

double TwoModeAmplitudes::amp(int j, int k) const {
  if (j < 0 || k < 0 || j + k > n_total()) return 0.0;
  const auto& diag = diags_[static_cast<std::size_t>(j + k)];
  return diag.empty() ? 0.0 : diag[static_cast<std::size_t>(j)];
}

double TwoModeAmplitudes::norm_sq() const {
  double total = 0.0;
  for (const auto& diag : diags_) total += kernels::sum_squares(diag);
  return total;
}

TwoModeAmplitudes bs_transform(const FockVector& input, double t, int n_total) {
  if (!(t > 0.0) || t > 1.0) throw DomainError("bs_transform: t must lie in (0, 1]");
  if (input.trunc_n > n_total) {
    throw CapacityError("bs_transform: n_total " + std::to_string(n_total) +
                        " cannot hold input support up to " + std::to_string(input.trunc_n));
  }
  const double r = std::sqrt((1.0 - t) * (1.0 + t));
  const double log_t = std::log(t);
  const double log_r = r > 0.0 ? std::log(r) : 0.0;

  TwoModeAmplitudes out(n_total);
  for (std::size_t idx = 0; idx < input.amps.size(); ++idx) {
    const int m = input.fock_number(idx);
    const double c_m = input.amps[idx];
    auto& diag = out.mutable_diagonal(m);
    diag.assign(static_cast<std::size_t>(m) + 1, 0.0);
    if (r == 0.0) {
      diag[static_cast<std::size_t>(m)] = c_m;  // fully transmitting splitter
      continue;
    }
    for (int j = 0; j <= m; ++j) {
      const double mag = std::exp(0.5 * log_binomial(m, j) + j * log_t + (m - j) * log_r);
      const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
      diag[static_cast<std::size_t>(j)] = c_m * sign * mag;
    }
  }
  return out;
}

std::pair<FockVector, double> project_and_normalize(const TwoModeAmplitudes& state, int n) {
  if (n < 0 || n > state.n_total()) {
    throw CapacityError("project_and_normalize: herald count " + std::to_string(n) +
                        " outside simulated range 0.." + std::to_string(state.n_total()));
  }
  // Entry (j, n) lives on diagonal j + n at position j.
  std::vector<double> slice;
  slice.reserve(static_cast<std::size_t>(state.n_total() - n) + 1);
  int first_fock = -1;
  for (int j = 0; j + n <= state.n_total(); ++j) {
    const auto diag = state.diagonal(j + n);
    if (diag.empty()) continue;
    if (first_fock < 0) first_fock = j;
    slice.push_back(diag[static_cast<std::size_t>(j)]);
  }
  const double prob = kernels::sum_squares(slice);
  if (slice.empty() || prob <= 0.0) {
    throw NoSupportError("project_and_normalize: no probability mass at herald count " +
                         std::to_string(n));
  }

  // Populated diagonals share the input parity, so the slice walks mode-1
  // Fock numbers first_fock, first_fock + 2, ... Pad with zeros if the slice
  // starts above the parity ground level so amps[k] <-> |2k + offset>.
  FockVector out;
  out.parity = (first_fock % 2 == 0) ? Parity::even : Parity::odd;
  out.herald_n = n;
  const int pad = (first_fock - out.parity_offset()) / 2;
  out.amps.assign(static_cast<std::size_t>(pad), 0.0);
  out.amps.insert(out.amps.end(), slice.begin(), slice.end());
  const double inv_norm = 1.0 / std::sqrt(prob);
  double lead = 0.0;
  for (double a : out.amps) {
    if (a != 0.0) {
      lead = a;
      break;
    }
  }
  const double sign_fix = lead < 0.0 ? -inv_norm : inv_norm;
  for (double& a : out.amps) a *= sign_fix;
  out.trunc_n = out.fock_number(out.amps.size() - 1);
  // Mass the truncated simulation never saw, conditioned on this outcome.
  const double residual = std::max(0.0, 1.0 - state.norm_sq());
  out.tail_bound = std::min(1.0, residual / prob + 1e-12);
  return {std::move(out), prob};
}

StateMoments moments_from_amplitudes(const FockVector& state) {
  const auto sums = kernels::photon_moment_sums(state.amps, state.parity_offset());
  const double a2 = kernels::pair_product_sum(state.amps, state.parity_offset());
  StateMoments m;
  m.mean = sums.first;
  m.second_moment = sums.second;
  m.var_x1 = (2.0 * a2 + 2.0 * sums.first + 1.0) / 4.0;
  m.var_x2 = (-2.0 * a2 + 2.0 * sums.first + 1.0) / 4.0;
  return m;
}

namespace {

// Series parameter of the R-squeezed even state; |y| < 1/2 for every R > 0.
double y_of_R(double R) { return (1.0 - R * R) / (2.0 * (1.0 + R * R)); }

}  // namespace

std::vector<double> squeezed_overlap_amplitudes(double R, int count) {
  if (!(R > 0.0)) throw DomainError("squeezed_overlap_amplitudes: R must be > 0");
  if (count < 0) throw DomainError("squeezed_overlap_amplitudes: count must be >= 0");
  const double y = y_of_R(R);
  const double log_z = -0.5 * std::log((1.0 - 2.0 * y) * (1.0 + 2.0 * y));
  const SignedLog sy = SignedLog::from_real(y);
  std::vector<double> amps(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const SignedLog a =
        pow_int(sy, k) *
        SignedLog::from_log(+1, 0.5 * log_factorial(2 * k) - log_factorial(k) - 0.5 * log_z);
    amps[static_cast<std::size_t>(k)] = a.to_real();
  }
  return amps;
}

OverlapCheck coherent_overlap_check(double R, double alpha, double tol) {
  if (!(R > 0.0)) throw DomainError("coherent_overlap_check: R must be > 0");
  if (!(tol > 0.0)) throw DomainError("coherent_overlap_check: tol must be > 0");
  OverlapCheck out;
  out.closed_value = std::sqrt(2.0 * R / (1.0 + R * R)) *
                     std::exp(-R * R * alpha * alpha / (1.0 + R * R));

  const double y = y_of_R(R);
  const double log_z = -0.5 * std::log((1.0 - 2.0 * y) * (1.0 + 2.0 * y));
  const SignedLog sy = SignedLog::from_real(y);
  const double half_alpha_sq = 0.5 * alpha * alpha;

  SignedLog acc = SignedLog::zero();
  constexpr long kMaxTerms = 100000;
  for (long k = 0; k < kMaxTerms; ++k) {
    const SignedLog a2k =
        pow_int(sy, k) *
        SignedLog::from_log(+1, 0.5 * log_factorial(2 * k) - log_factorial(k) - 0.5 * log_z);
    SignedLog coh;  // e^(-a^2/2) alpha^(2k) / sqrt((2k)!)
    if (alpha == 0.0) {
      coh = (k == 0) ? SignedLog::from_log(+1, 0.0) : SignedLog::zero();
    } else {
      coh = SignedLog::from_log(
          +1, -half_alpha_sq + 2.0 * k * std::log(std::fabs(alpha)) - 0.5 * log_factorial(2 * k));
    }
    const SignedLog term = a2k * coh;
    acc = acc + term;
    if (term.is_zero() || (!acc.is_zero() && term.log_mag <= acc.log_mag + std::log(tol))) {
      out.series_value = acc.to_real();
      return out;
    }
  }
  throw ConvergenceError("coherent_overlap_check: series did not converge");
}

}  // namespace herald
