#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "relest/fisher.hpp"
#include "relest/state.hpp"
#include "relest/wavefunction.hpp"

using namespace relest;

namespace {

const PhysicalConfig kCfg{1.0, 0.1};

// Reduced grid for the fast unit checks; acceptance runs the full default.
WaveGrid test_grid() {
  WaveGrid g;
  g.p_max = 60.0;
  g.n_p = 320;
  g.x_max = 7.0;
  g.n_x = 320;
  return g;
}

double peak_value(const DensityProfile& p) {
  return *std::max_element(p.values.begin(), p.values.end());
}

}  // namespace

TEST_CASE("up density parity and origin zero") {
  const DensityProfile prof =
      psi_up_profile(kCfg, 0.7, test_grid(), DensityMode::normalized);
  const std::size_t n = prof.grid.size();
  REQUIRE((n % 2) == 1);
  const double peak = peak_value(prof);
  CHECK(prof.grid[n / 2] == 0.0);
  CHECK(prof.values[n / 2] <= 1e-10 * peak);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(prof.values[i] >= 0.0);
    CHECK(std::fabs(prof.values[i] - prof.values[n - 1 - i]) <= 1e-9 * peak);
  }
}

TEST_CASE("down density at rest is the gaussian of variance kappa^2/2") {
  const DensityProfile prof =
      psi_down_profile(kCfg, 0.0, test_grid(), DensityMode::normalized);
  const double k = kCfg.kappa;
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    const double x = prof.grid[i];
    const double expected = std::exp(-x * x / (k * k)) / (M_PI * k * k);
    CHECK(std::fabs(prof.values[i] - expected) <= 1e-8 / (k * k));
  }
  // even with the maximum at the origin
  const std::size_t n = prof.grid.size();
  CHECK(prof.values[n / 2] == doctest::Approx(peak_value(prof)));
}

TEST_CASE("normalized branches carry unit 2d mass") {
  WaveGrid g = test_grid();
  g.n_x = 384;
  CHECK(std::fabs(normalization_2d(kCfg, 0.7, SpinBranch::up, g) - 1.0) <
        1e-6);
  CHECK(std::fabs(normalization_2d(kCfg, 0.7, SpinBranch::down, g) - 1.0) <
        1e-6);
}

TEST_CASE("raw and normalized profiles are proportional by cosh(chi)/(4 pi)") {
  const WaveGrid g = test_grid();
  const DensityProfile raw = psi_up_profile(kCfg, 0.6, g, DensityMode::raw);
  const DensityProfile nrm =
      psi_up_profile(kCfg, 0.6, g, DensityMode::normalized);
  const double expected = boost_from_velocity(0.6).cosh_chi / (4.0 * M_PI);
  const double peak = peak_value(nrm);
  for (std::size_t i = 0; i < raw.values.size(); ++i) {
    if (nrm.values[i] < 1e-12 * peak) continue;
    CHECK(raw.values[i] / nrm.values[i] ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("serial and parallel kernels agree bitwise") {
  const WaveGrid g = test_grid();
  const DensityProfile a =
      psi_up_profile(kCfg, 0.8, g, DensityMode::normalized, Exec::parallel);
  const DensityProfile b =
      psi_up_profile(kCfg, 0.8, g, DensityMode::normalized, Exec::serial);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("peak location ordering and positivity") {
  const double p5 = peak_location(kCfg, 0.5);
  const double p7 = peak_location(kCfg, 0.7);
  const double p9 = peak_location(kCfg, 0.9);
  const double p98 = peak_location(kCfg, 0.98);
  CHECK(p5 > 0.0);
  CHECK(p7 < p9);
  CHECK(p9 < p98);
  SUBCASE("shape converges as v -> 0 while the branch weight empties") {
    const double p05 = peak_location(kCfg, 0.05);
    const double p02 = peak_location(kCfg, 0.02);
    CHECK(std::fabs(p05 - p02) / p05 < 0.05);
    CHECK(spin_up_probability(kCfg, 0.05) < 1e-3);
  }
}

TEST_CASE("density derivative profile") {
  const WaveGrid g = test_grid();
  const SampledCurve d = density_derivative_profile(kCfg, 0.7, g);
  const std::size_t n = d.grid.size();
  double scale = 0.0;
  for (double val : d.values) scale = std::max(scale, std::fabs(val));
  SUBCASE("odd with a zero at the origin") {
    CHECK(std::fabs(d.values[n / 2]) <= 1e-10 * scale);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(d.values[i] + d.values[n - 1 - i]) <= 1e-9 * scale);
  }
  SUBCASE("sign change brackets the peak within one grid cell") {
    const double peak = peak_location(kCfg, 0.7);
    const double h = d.grid[1] - d.grid[0];
    bool found = false;
    for (std::size_t i = n / 2 + 1; i + 1 < n; ++i) {
      if (d.values[i] > 0.0 && d.values[i + 1] <= 0.0) {
        CHECK(peak >= d.grid[i] - h);
        CHECK(peak <= d.grid[i + 1] + h);
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("classical fisher information") {
  WaveGrid g = test_grid();
  SUBCASE("rest frame reproduces 2/kappa^2") {
    const ClassicalFisher fi = classical_fisher_position(kCfg, 0.0, g);
    CHECK(std::fabs(fi.fi_theta1 - 200.0) / 200.0 < 1e-3);
    CHECK(fi.excluded_mass >= 0.0);
  }
  SUBCASE("never exceeds the quantum bound") {
    for (double v : {0.0, 0.6}) {
      const ClassicalFisher fi = classical_fisher_position(kCfg, v, g);
      CHECK(fi.fi_theta1 <= j_moving(kCfg, v).j11 * (1.0 + 1e-6));
    }
  }
  SUBCASE("the two axes agree by symmetry") {
    const ClassicalFisher f1 = classical_fisher_position(kCfg, 0.7, g, 0);
    const ClassicalFisher f2 = classical_fisher_position(kCfg, 0.7, g, 1);
    CHECK(std::fabs(f1.fi_theta1 - f2.fi_theta1) / f1.fi_theta1 < 5e-3);
  }
}

TEST_CASE("grid validation") {
  SUBCASE("momentum window must cover the wavepacket") {
    WaveGrid g = test_grid();
    g.p_max = 10.0;  // kappa p_max = 1
    CHECK_THROWS_AS(psi_down_profile(kCfg, 0.2, g, DensityMode::normalized),
                    ResolutionError);
  }
  SUBCASE("nyquist violation is reported") {
    WaveGrid g = test_grid();
    g.n_p = 64;  // dp * x_max far above pi
    CHECK_THROWS_AS(psi_down_profile(kCfg, 0.2, g, DensityMode::normalized),
                    ResolutionError);
  }
  SUBCASE("up branch needs motion") {
    CHECK_THROWS_AS(
        psi_up_profile(kCfg, 0.0, test_grid(), DensityMode::normalized),
        std::domain_error);
  }
  SUBCASE("velocity domain for densities") {
    CHECK_THROWS_AS(
        psi_down_profile(kCfg, 1.0, test_grid(), DensityMode::normalized),
        std::domain_error);
  }
}
