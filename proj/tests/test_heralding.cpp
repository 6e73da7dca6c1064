#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "herald/errors.hpp"
#include "herald/heralding.hpp"
#include "herald/kernels.hpp"
#include "herald/z_ladder.hpp"

using namespace herald;

TEST_CASE("fully transmitting splitter heralds vacuum with certainty") {
  const ModelParams p(1.0, 1.0);
  CHECK(success_probability(p, 0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 1; n <= 5; ++n) CHECK(success_probability(p, n) == 0.0);
}

TEST_CASE("success probabilities at s=1, t=0.9") {
  const ModelParams p(1.0, 0.9);
  CHECK(success_probability(p, 0) == doctest::Approx(0.82339826025160358).epsilon(1e-12));
  CHECK(success_probability(p, 1) == doctest::Approx(0.11865687400993629).epsilon(1e-12));
  CHECK_THROWS_AS(success_probability(p, -1), DomainError);
}

TEST_CASE("distribution completeness and bookkeeping") {
  const ModelParams p(1.0, 0.9);
  const HeraldDistribution d = herald_distribution(p, 60);
  CHECK(d.probs.size() == 61);
  for (double q : d.probs) {
    CHECK(q >= 0.0);
    CHECK(q <= 1.0);
  }
  CHECK(kernels::sum(d.probs) >= 1.0 - 1e-8);
  CHECK(kernels::sum(d.probs) + d.tail == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.tail >= 0.0);
  // Entries match the single-shot evaluation.
  for (int n : {0, 7, 23}) {
    CHECK(d.probs[static_cast<std::size_t>(n)] ==
          doctest::Approx(success_probability(p, n)).epsilon(1e-12));
  }
}

TEST_CASE("t to one limit concentrates on the no-click outcome") {
  const HeraldDistribution d = herald_distribution(ModelParams(1.0, 1.0), 5);
  CHECK(d.probs[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t n = 1; n < d.probs.size(); ++n) CHECK(d.probs[n] == 0.0);
}

TEST_CASE("no-click probability dominates for highly transmitting splitters") {
  for (const double t : {0.9, 0.98, 0.99}) {
    for (double s = 0.25; s <= 3.0 + 1e-9; s += 0.25) {
      const ModelParams p(s, t);
      const double p0 = success_probability(p, 0);
      for (int n = 1; n <= 10; ++n) CHECK(success_probability(p, n) < p0);
    }
  }
}

TEST_CASE("adaptive completeness over the worst grid corner") {
  // t = 1/2 maximizes the splitter factor on the test grid; s = 2 widens the
  // distribution the most.
  const HeraldDistribution d = herald_distribution_adaptive(ModelParams(2.0, 0.5), 1e-8, 400);
  CHECK(static_cast<int>(d.probs.size()) - 1 <= 400);
  CHECK(d.tail < 1e-8);
}

TEST_CASE("splitter factor scaling between two transmittances") {
  const double s = 1.2;
  const ModelParams pa(s, 0.8), pb(s, 0.95);
  const auto bs = [](const ModelParams& p) { return (1.0 - p.t() * p.t()) / (p.t() * p.t()); };
  for (int n = 1; n <= 4; ++n) {
    const double lhs = success_probability(pa, n) / success_probability(pb, n);
    const double zr =
        (ZLadder(pa.y1(), n).derivative(n) / ZLadder(pb.y1(), n).derivative(n)).to_real();
    const double rhs = std::pow(bs(pa) / bs(pb), n) * std::pow(pa.y1() / pb.y1(), n) * zr;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}
