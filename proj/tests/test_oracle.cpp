#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "herald/errors.hpp"
#include "herald/heralding.hpp"
#include "herald/kernels.hpp"
#include "herald/oracle.hpp"
#include "herald/states.hpp"
#include "herald/validation.hpp"

using namespace herald;

namespace {

FockVector single_level(int fock_n) {
  FockVector v;
  v.parity = (fock_n % 2 == 0) ? Parity::even : Parity::odd;
  v.amps.assign(static_cast<std::size_t>(fock_n / 2) + 1, 0.0);
  v.amps.back() = 1.0;
  v.trunc_n = fock_n;
  return v;
}

}  // namespace

TEST_CASE("single photon through the splitter") {
  const double t = 0.8;
  const double r = std::sqrt(1.0 - t * t);
  const TwoModeAmplitudes out = bs_transform(single_level(1), t, 1);
  CHECK(out.amp(1, 0) == doctest::Approx(t).epsilon(1e-15));
  CHECK(out.amp(0, 1) == doctest::Approx(-r).epsilon(1e-15));
  CHECK(out.amp(0, 0) == 0.0);
}

TEST_CASE("two photons through the splitter") {
  const double t = 0.8;
  const double r = std::sqrt(1.0 - t * t);
  const TwoModeAmplitudes out = bs_transform(single_level(2), t, 2);
  CHECK(out.amp(2, 0) == doctest::Approx(t * t).epsilon(1e-14));
  CHECK(out.amp(1, 1) == doctest::Approx(-std::sqrt(2.0) * t * r).epsilon(1e-14));
  CHECK(out.amp(0, 2) == doctest::Approx(r * r).epsilon(1e-14));
}

TEST_CASE("splitter transform preserves the norm") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 25; ++rep) {
    FockVector v;
    v.parity = (rep % 2 == 0) ? Parity::even : Parity::odd;
    v.amps.resize(1 + static_cast<std::size_t>(unit(rng) * 50));
    for (double& a : v.amps) a = unit(rng);
    const double norm = std::sqrt(kernels::sum_squares(v.amps));
    for (double& a : v.amps) a /= norm;
    v.trunc_n = v.fock_number(v.amps.size() - 1);
    const TwoModeAmplitudes out = bs_transform(v, 0.7, v.trunc_n);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(bs_transform(single_level(4), 0.7, 3), CapacityError);
}

TEST_CASE("fully transmitting splitter is the identity") {
  const FockVector in = smsv_amplitudes(0.8, 1e-13);
  const TwoModeAmplitudes out = bs_transform(in, 1.0, in.trunc_n);
  const auto [state, prob] = project_and_normalize(out, 0);
  CHECK(prob == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(padded_max_abs_diff(state.amps, in.amps) <= 1e-12);
}

TEST_CASE("total photon number is conserved across the splitter") {
  const FockVector in = smsv_amplitudes(0.8, 1e-12);
  const TwoModeAmplitudes out = bs_transform(in, 0.7, in.trunc_n);
  for (int j = 0; j <= out.n_total(); ++j) {
    for (int k = 0; j + k <= out.n_total(); ++k) {
      if ((j + k) % 2 == 1) CHECK(out.amp(j, k) == 0.0);  // even-parity input
    }
  }
}

TEST_CASE("projection parity bookkeeping") {
  const FockVector in = smsv_amplitudes(1.0, 1e-14);
  const TwoModeAmplitudes out = bs_transform(in, 0.9, in.trunc_n);
  const auto [even_state, p2] = project_and_normalize(out, 2);
  CHECK(even_state.parity == Parity::even);
  CHECK(even_state.fock_number(0) == 0);
  const auto [odd_state, p3] = project_and_normalize(out, 3);
  CHECK(odd_state.parity == Parity::odd);
  CHECK(odd_state.fock_number(0) == 1);
  CHECK(p2 > p3);
  for (double a : even_state.amps) CHECK(a >= 0.0);
  CHECK(std::fabs(kernels::sum_squares(even_state.amps) - 1.0) < 1e-12);
  CHECK_THROWS_AS(project_and_normalize(out, in.trunc_n + 1), CapacityError);
}

TEST_CASE("zero-mass slice raises no-support") {
  const TwoModeAmplitudes out = bs_transform(single_level(0), 0.7, 4);
  CHECK_THROWS_AS(project_and_normalize(out, 1), NoSupportError);
  CHECK_THROWS_AS(project_and_normalize(out, 5), CapacityError);
}

TEST_CASE("projection probabilities sum to the captured mass") {
  const FockVector in = smsv_amplitudes(1.0, 1e-14);
  const TwoModeAmplitudes out = bs_transform(in, 0.6, in.trunc_n);
  double total = 0.0;
  for (int n = 0; n <= in.trunc_n; ++n) total += project_and_normalize(out, n).second;
  CHECK(total >= 1.0 - in.tail_bound - 1e-12);
  CHECK(total <= 1.0 + 1e-12);
}

TEST_CASE("closed forms match the two-mode simulation") {
  // matched truncations: the input tail covers the 1/sqrt(P_n) inflation of
  // the conditional amplitudes, so every omitted entry stays below ~5e-11
  const FockVector in = smsv_amplitudes(1.0, 1e-28);
  const TwoModeAmplitudes out = bs_transform(in, 0.9, in.trunc_n);
  const ModelParams params(1.0, 0.9);
  for (int n = 0; n <= 6; ++n) {
    const auto [state, prob] = project_and_normalize(out, n);
    const FockVector closed = heralded_amplitudes(params, n, 1e-21);
    CHECK(padded_max_abs_diff(closed.amps, state.amps) <= 1e-10);
    CHECK(std::fabs(prob - success_probability(params, n)) <= 1e-10);
  }
}

TEST_CASE("direct moments of elementary states") {
  const StateMoments one = moments_from_amplitudes(single_level(1));
  CHECK(one.mean == 1.0);
  CHECK(one.second_moment == 1.0);
  CHECK(one.var_x1 == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(one.var_x2 == doctest::Approx(0.75).epsilon(1e-15));
  const StateMoments vac = moments_from_amplitudes(single_level(0));
  CHECK(vac.mean == 0.0);
  CHECK(vac.var_x1 == doctest::Approx(0.25).epsilon(1e-15));
  const StateMoments smsv = moments_from_amplitudes(smsv_amplitudes(1.0, 1e-14));
  CHECK(smsv.var_x2 == doctest::Approx(0.033833820809153173).epsilon(1e-9));
  CHECK(smsv.var_x1 == doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-9));
}

TEST_CASE("coherent overlap identity") {
  SUBCASE("unsqueezed limit is the vacuum") {
    const OverlapCheck c = coherent_overlap_check(1.0, 0.0, 1e-12);
    CHECK(c.closed_value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.series_value == doctest::Approx(1.0).epsilon(1e-12));
    const OverlapCheck g = coherent_overlap_check(1.0, 0.7, 1e-12);
    CHECK(g.closed_value == doctest::Approx(std::exp(-0.245)).epsilon(1e-13));
    CHECK(std::fabs(g.series_value - g.closed_value) <= 1e-12 * g.closed_value);
  }
  SUBCASE("frozen closed-form value") {
    const OverlapCheck c = coherent_overlap_check(0.5, 1.0, 1e-12);
    CHECK(c.closed_value == doctest::Approx(0.7322950476607850).epsilon(1e-13));
    CHECK(std::fabs(c.series_value - c.closed_value) <= 1e-10 * c.closed_value);
  }
  SUBCASE("R above one flips the series parameter sign") {
    const OverlapCheck c = coherent_overlap_check(2.0, 1.0, 1e-12);
    CHECK(c.closed_value == doctest::Approx(0.401892043210269).epsilon(1e-12));
    CHECK(std::fabs(c.series_value - c.closed_value) <= 1e-10 * c.closed_value);
  }
  SUBCASE("alpha = 0 reduces to the inverse normalization root") {
    for (const double R : {0.5, 2.0, 3.0}) {
      const OverlapCheck c = coherent_overlap_check(R, 0.0, 1e-12);
      CHECK(c.closed_value == doctest::Approx(std::sqrt(2.0 * R / (1.0 + R * R))).epsilon(1e-14));
      CHECK(std::fabs(c.series_value - c.closed_value) <= 1e-11);
    }
  }
  CHECK_THROWS_AS(coherent_overlap_check(-1.0, 0.5, 1e-10), DomainError);
}

TEST_CASE("R = e^-s bridge reproduces the squeezed-vacuum amplitudes") {
  for (const double s : {0.5, 1.0, 2.0}) {
    const FockVector smsv = smsv_amplitudes(s, 1e-13);
    const std::vector<double> bridge =
        squeezed_overlap_amplitudes(std::exp(-s), static_cast<int>(smsv.amps.size()));
    CHECK(padded_max_abs_diff(smsv.amps, bridge) <= 1e-12);
  }
}
