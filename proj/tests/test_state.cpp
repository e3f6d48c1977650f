#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "relest/mc.hpp"
#include "relest/quadrature.hpp"
#include "relest/special.hpp"
#include "relest/state.hpp"

using namespace relest;

TEST_CASE("gaussian_amp") {
  const PhysicalConfig cfg{1.0, 1.0};
  CHECK(gaussian_amp(0.0, cfg) ==
        doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-14));
  SUBCASE("normalized for several spreads") {
    for (double k : {0.1, 1.0, 3.0}) {
      const PhysicalConfig c{1.0, k};
      auto density = [&](double p) {
        const double a = gaussian_amp(p, c);
        return 2.0 * a * a;  // even integrand, fold to [0, inf)
      };
      const IntegralResult r = integrate_semi_infinite(density, {}, 1.0 / k);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("scaling identity phi(p; k) = sqrt(s) phi(s p; k/s)") {
    const double s = 2.0;
    for (double p : {0.0, 0.3, 1.7}) {
      const PhysicalConfig narrow{1.0, 1.0 / s};
      CHECK(gaussian_amp(p, cfg) ==
            doctest::Approx(std::sqrt(s) * gaussian_amp(s * p, narrow))
                .epsilon(1e-13));
    }
  }
}

TEST_CASE("amplitude") {
  const PhysicalConfig cfg{1.0, 1.0};
  SUBCASE("no up component at rest") {
    const Boost rest = boost_from_velocity(0.0);
    const SpinAmplitude a = amplitude({0.4, -0.2}, {1.0, 2.0}, rest, cfg);
    CHECK(std::abs(a.up) == 0.0);
    const double envelope = gaussian_amp(1.0, cfg) * gaussian_amp(2.0, cfg);
    CHECK(std::abs(a.down) == doctest::Approx(envelope).epsilon(1e-13));
  }
  SUBCASE("pointwise norm preservation at 500 random points") {
    std::mt19937_64 rng(2211);
    std::uniform_real_distribution<double> mom(-3.0, 3.0), vel(0.0, 0.99),
        shift(-2.0, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
      const Momentum2 p{mom(rng), mom(rng)};
      const Boost b = boost_from_velocity(vel(rng));
      const std::array<double, 2> theta{shift(rng), shift(rng)};
      const SpinAmplitude a = amplitude(theta, p, b, cfg);
      const double envelope = gaussian_amp(p.p1, cfg) * gaussian_amp(p.p2, cfg);
      CHECK(std::abs(std::norm(a.down) + std::norm(a.up) -
                     envelope * envelope) < 1e-12);
    }
  }
  SUBCASE("phi = 0 slice matches the spin rotation column") {
    const Boost b = boost_from_velocity(0.6);
    const Momentum2 p{1.0, 0.0};
    const SpinAmplitude a = amplitude({0.0, 0.0}, p, b, cfg);
    const WignerAngles ang = wigner_angles(p, b, cfg);
    const SpinHalfRep d = spin_half_rep(ang);
    const double envelope = gaussian_amp(1.0, cfg) * gaussian_amp(0.0, cfg);
    // the down column of the rotation carries the two amplitudes
    CHECK(std::abs(a.up - envelope * d.m[0][1]) < 1e-14);
    CHECK(std::abs(a.down - envelope * d.m[1][1]) < 1e-14);
    // real at phi = 0, with the half-angle sign fixed by sin(alpha) <= 0
    CHECK(a.up.imag() == 0.0);
    CHECK(a.up.real() == doctest::Approx(-envelope * ang.sin_alpha /
                                         (2.0 * std::sqrt(0.5 * (1.0 + ang.cos_alpha))))
                             .epsilon(1e-12));
  }
}

TEST_CASE("xi") {
  SUBCASE("unity at rest on a parameter grid") {
    for (double m : {0.5, 1.0, 2.0})
      for (double k : {0.1, 1.0, 3.0})
        CHECK(std::fabs(xi({m, k}, 0.0) - 1.0) < 1e-10);
  }
  SUBCASE("relativistic limit equals the closed form") {
    const PhysicalConfig cfg{1.0, 1.0};
    CHECK(xi(cfg, 1.0) ==
          doctest::Approx(std::sqrt(M_PI) * relest::erfcx(1.0)).epsilon(1e-10));
    // xi(1 - eps) approaches xi_rel from above at the sqrt(2 eps) rate
    CHECK(xi(cfg, 1.0 - 1e-12) == doctest::Approx(xi_rel(cfg)).epsilon(1e-6));
    const double gap10 = xi(cfg, 1.0 - 1e-10) - xi_rel(cfg);
    const double gap12 = xi(cfg, 1.0 - 1e-12) - xi_rel(cfg);
    CHECK(gap10 > 0.0);
    CHECK(gap12 > 0.0);
    CHECK(gap10 / gap12 == doctest::Approx(10.0).epsilon(0.05));
  }
  SUBCASE("decreasing in v") {
    const PhysicalConfig cfg{1.0, 1.0};
    CHECK(xi(cfg, 0.5) > xi(cfg, 0.9));
    double prev = 2.0;
    for (double v = 0.0; v <= 0.991; v += 0.1) {
      const double val = xi(cfg, v);
      CHECK(val < prev);
      CHECK(val >= xi_rel(cfg) - 1e-12);
      prev = val;
    }
  }
  SUBCASE("depends on m and kappa only through the product") {
    CHECK(xi({2.0, 0.5}, 0.8) == doctest::Approx(xi({0.5, 2.0}, 0.8)).epsilon(1e-11));
    CHECK(xi({4.0, 0.25}, 0.8) == doctest::Approx(xi({1.0, 1.0}, 0.8)).epsilon(1e-11));
  }
  SUBCASE("velocity validation") {
    CHECK_THROWS_AS(xi({1.0, 1.0}, -0.1), std::domain_error);
    CHECK_THROWS_AS(xi({1.0, 1.0}, 1.5), std::domain_error);
  }
}

TEST_CASE("xi_rel") {
  CHECK(xi_rel({1.0, 1.0}) ==
        doctest::Approx(0.75787215614131209).epsilon(1e-12));
  SUBCASE("vanishes as m kappa -> 0") {
    CHECK(xi_rel({1e-6, 1.0}) < 1e-5);
  }
  SUBCASE("approaches 1 - 1/(2 k'^2) for large m kappa") {
    const double k = 50.0;
    const double asym = 1.0 - 0.5 / (k * k);
    CHECK(std::fabs(xi_rel({k, 1.0}) - asym) / asym < 1e-3);
  }
}

TEST_CASE("spin_up_probability") {
  SUBCASE("zero at rest") {
    CHECK(spin_up_probability({1.0, 1.0}, 0.0) ==
          doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("reaches one half for narrow packets at v = 1") {
    CHECK(std::fabs(spin_up_probability({1e-4, 1.0}, 1.0) - 0.5) < 1e-3);
  }
  SUBCASE("monotone decreasing in m kappa at fixed v") {
    for (double v : {0.1, 0.5, 0.95}) {
      double prev = 1.0;
      for (double mk : {0.05, 0.2, 1.0, 3.0, 8.0}) {
        const double val = spin_up_probability({mk, 1.0}, v);
        CHECK(val < prev);
        CHECK(val >= 0.0);
        CHECK(val <= 0.5);
        prev = val;
      }
    }
  }
}

TEST_CASE("eta and kappa_eta") {
  const PhysicalConfig cfg{1.0, 1.0};
  SUBCASE("zero at rest") { CHECK(eta(cfg, 0.0) == 0.0); }
  SUBCASE("bounded by sqrt(pi) v / 4") {
    for (double m : {0.3, 1.0, 3.0})
      for (double k : {0.1, 1.0, 2.0})
        for (double v : {0.2, 0.7, 0.99})
          CHECK(kappa_eta({m, k}, v) < std::sqrt(M_PI) * v / 4.0);
  }
  SUBCASE("v = 1 equals the closed form") {
    CHECK(kappa_eta(cfg, 1.0) ==
          doctest::Approx(0.5 - 0.25 * std::sqrt(M_PI) * relest::erfcx(1.0))
              .epsilon(1e-8));
  }
  SUBCASE("regression anchors") {
    CHECK(kappa_eta(cfg, 0.9) ==
          doctest::Approx(0.21823627763592507).epsilon(1e-9));
    CHECK(eta({1.0, 2.0}, 0.9) ==
          doctest::Approx(kappa_eta({1.0, 2.0}, 0.9) / 2.0).epsilon(1e-14));
  }
  SUBCASE("both routes agree on a parameter grid") {
    // the dual-route consistency check runs inside every call; a disagreement
    // beyond 1e-9 would throw
    for (double m : {0.5, 1.0, 2.0})
      for (double k : {0.1, 1.0, 3.0})
        for (double v : {0.1, 0.6, 0.95, 1.0}) CHECK(kappa_eta({m, k}, v) >= 0.0);
  }
  SUBCASE("monte carlo agreement at (1, 1, 0.9)") {
    const double s = std::sqrt(1.0 - 0.81);
    auto integrand = [s](double p1, double p2) {
      const double p0 = std::hypot(1.0, std::hypot(p1, p2));
      return p1 * p1 * 0.9 / (p0 + s);
    };
    const McResult m = mc_integrate(integrand, 1.0, 1000000, 4242);
    CHECK(std::fabs(m.value - eta(cfg, 0.9)) < 4.0 * m.std_error);
  }
  SUBCASE("the (p2)^2 moment gives the same integral by symmetry") {
    for (double v : {0.4, 0.9}) {
      const double s = std::sqrt((1.0 - v) * (1.0 + v));
      auto swapped = [&](double p1, double p2) {
        const double p0 = std::hypot(1.0, std::hypot(p1, p2));
        return p2 * p2 * v / (p0 + s);
      };
      const double via_p2 =
          integrate_2d_gaussian_weighted(swapped, 1.0).value;
      CHECK(std::fabs(via_p2 - eta(cfg, v)) < 1e-9);
    }
  }
}

TEST_CASE("spin_weights and scalar_integrals bundles") {
  const PhysicalConfig cfg{1.0, 1.0};
  const SpinWeights w = spin_weights(cfg, 0.8);
  CHECK(w.p_down() + w.p_up() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w.p_down() == doctest::Approx(0.5 * (1.0 + xi(cfg, 0.8))).epsilon(1e-12));
  const ScalarIntegrals s = scalar_integrals(cfg, 0.8);
  CHECK(s.eta == doctest::Approx(eta(cfg, 0.8)).epsilon(1e-12));
  CHECK(s.nu == doctest::Approx(nu(cfg, 0.8)).epsilon(1e-12));
  CHECK(s.eta >= 0.0);
}

TEST_CASE("nu") {
  SUBCASE("rest value 1/(2 kappa^2)") {
    for (double k : {0.5, 1.0, 2.0})
      CHECK(nu({1.0, k}, 0.0) == doctest::Approx(0.5 / (k * k)).epsilon(1e-10));
  }
  SUBCASE("bounded by the second moment") {
    for (double v : {0.3, 0.9, 1.0})
      CHECK(std::fabs(nu({1.0, 1.0}, v)) <= 0.5 + 1e-12);
  }
  SUBCASE("monte carlo agreement at (1, 1, 0.9)") {
    const PhysicalConfig cfg{1.0, 1.0};
    const double value = nu(cfg, 0.9);
    CHECK(value > 0.0);
    CHECK(value < 0.5);
    const double s = std::sqrt(1.0 - 0.81);
    auto integrand = [s](double p1, double p2) {
      const double p0 = std::hypot(1.0, std::hypot(p1, p2));
      return p1 * p1 * (p0 * s + 1.0) / (p0 + s);
    };
    const McResult m = mc_integrate(integrand, 1.0, 1000000, 555);
    CHECK(std::fabs(m.value - value) < 4.0 * m.std_error);
  }
}

TEST_CASE("spin_reduced_state") {
  const PhysicalConfig cfg{1.0, 1.0};
  SUBCASE("pure spin-down at rest") {
    const SpinDensityMatrix rho = spin_reduced_state({0.0, 0.0}, cfg, 0.0);
    CHECK(std::abs(rho.m[0][0] - 1.0) < 1e-10);
    CHECK(std::abs(rho.m[1][1]) < 1e-10);
    CHECK(std::abs(rho.m[0][1]) < 1e-10);
  }
  SUBCASE("entries do not depend on the shift parameters") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    const SpinDensityMatrix ref = spin_reduced_state({0.0, 0.0}, cfg, 0.7);
    for (int trial = 0; trial < 20; ++trial) {
      const SpinDensityMatrix rho =
          spin_reduced_state({shift(rng), shift(rng)}, cfg, 0.7);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(std::abs(rho.m[i][j] - ref.m[i][j]) < 1e-12);
    }
  }
  SUBCASE("trace one, hermitian, weights from xi") {
    const SpinDensityMatrix rho = spin_reduced_state({0.3, -1.2}, cfg, 0.85);
    CHECK(std::abs(rho.m[0][0] + rho.m[1][1] - 1.0) < 1e-10);
    CHECK(std::abs(rho.m[0][1] - std::conj(rho.m[1][0])) < 1e-15);
    const double xiv = xi(cfg, 0.85);
    CHECK(std::abs(rho.m[0][0] - 0.5 * (1.0 + xiv)) < 1e-12);
    CHECK(std::abs(rho.m[1][1] - 0.5 * (1.0 - xiv)) < 1e-12);
    // positive semidefinite: both diagonal weights nonnegative and the
    // off-diagonal (which vanishes by the azimuthal average) inside the disc
    CHECK(rho.m[0][0].real() >= 0.0);
    CHECK(rho.m[1][1].real() >= 0.0);
    CHECK(std::abs(rho.m[0][1]) * std::abs(rho.m[0][1]) <=
          rho.m[0][0].real() * rho.m[1][1].real() + 1e-12);
  }
}
