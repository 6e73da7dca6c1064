#pragma once

#include <cstddef>
#include <vector>

namespace herald {

enum class Parity { even, odd };

// A single-mode state of definite parity as real, nonnegative amplitudes:
// amps[k] multiplies |2k> (even) or |2k+1> (odd). The closed forms have
// positive coefficients throughout; any overall sign is a global phase and is
// normalized away, which makes state comparison well-defined.
//
// tail_bound is a certified upper bound on the probability mass discarded by
// truncation (including a small round-off allowance), so
//   1 - sum amps^2 <= tail_bound
// always holds.
struct FockVector {
  Parity parity = Parity::even;
  int herald_n = 0;  // detected photon count that heralded the state
  std::vector<double> amps;
  int trunc_n = 0;  // highest Fock number represented
  double tail_bound = 0.0;

  int parity_offset() const { return parity == Parity::odd ? 1 : 0; }
  int fock_number(std::size_t k) const {
    return 2 * static_cast<int>(k) + parity_offset();
  }
  double norm_sq() const;
};

}  // namespace herald
