#pragma once

#include <span>
#include <string>
#include <vector>

namespace herald {

struct CheckResult {
  std::string group;
  bool pass;
  std::string detail;
};

struct ValidateOptions {
  bool deep = false;      // extends the oracle grid with s = 1.5 (~300 Fock levels)
  double perturb = 0.0;   // test hook: offsets one closed-form amplitude before
                          // the oracle comparison so the check must trip
};

// Runs every invariant group and returns one result per group.
std::vector<CheckResult> run_validation(const ValidateOptions& options);

// max |a_k - b_k| with the shorter vector zero-padded.
double padded_max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace herald
