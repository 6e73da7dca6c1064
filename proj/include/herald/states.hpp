#pragma once

#include "herald/fock_vector.hpp"
#include "herald/model_params.hpp"

namespace herald {

// Amplitude vector of the squeezed-vacuum input state over |2k>:
//   amps[k] = y0^k sqrt((2k)!) / (k! sqrt(cosh s)),
// truncated so the certified discarded mass is <= cutoff. Equals
// heralded_amplitudes with t = 1, n = 0.
FockVector smsv_amplitudes(double s, double cutoff);

// Amplitude vector of the n-heralded state (n detected photons), per the
// closed forms: for n = 2m,
//   amps[k] ~ y1^k (2(k+m))! / ((k+m)! sqrt((2k)!)),      norm sqrt(Z^(2m)),
// and for n = 2m+1,
//   amps[k] ~ y1^k (2(k+m+1))! / ((k+m+1)! sqrt((2k+1)!)), norm sqrt(Z^(2m+1)/y1).
// Products are evaluated in SignedLog and exponentiated per amplitude.
FockVector heralded_amplitudes(const ModelParams& params, int n, double cutoff);

// Smallest index K such that the certified geometric-ratio tail bound of the
// squared-amplitude series beyond K is <= eps. The bound uses the consecutive
// squared-term ratio, which converges to 4 y1^2 < 1: once the observed ratio
// falls below rho = max(4 y1^2, 0.9 * 4 y1^2 + 0.1), the remaining mass is
// bounded by term_K * rho / (1 - rho) (normalized by the exact Z^(n) total).
// Throws ConvergenceError if no K <= 1e6 certifies.
int truncation_cutoff(const ModelParams& params, int n, double eps);

}  // namespace herald
