#pragma once

#include <vector>

#include "herald/model_params.hpp"

namespace herald {

// Probability of detecting exactly n photons in the auxiliary mode:
//   P_n = (1/cosh s) ((1-t^2)/t^2)^n (y1^n / n!) Z^(n)(y1),
// evaluated in SignedLog; the result lies in [0, 1] (values outside by more
// than 1e-9 raise ConsistencyError, smaller excursions are clamped).
double success_probability(const ModelParams& params, int n);

struct HeraldDistribution {
  ModelParams params;
  std::vector<double> probs;  // probs[n] for n = 0..n_max
  double tail = 0.0;          // 1 - sum probs
};

HeraldDistribution herald_distribution(const ModelParams& params, int n_max);

// Doubles n_max until tail < target_tail or the ceiling is reached (the
// distribution widens quickly with s, so a fixed n_max does not travel well).
HeraldDistribution herald_distribution_adaptive(const ModelParams& params,
                                                double target_tail,
                                                int ceiling = 10000);

}  // namespace herald
