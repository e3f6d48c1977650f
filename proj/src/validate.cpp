#include "relest/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "relest/fisher.hpp"
#include "relest/figures.hpp"
#include "relest/mc.hpp"
#include "relest/series.hpp"
#include "relest/special.hpp"
#include "relest/state.hpp"
#include "relest/wavefunction.hpp"

namespace relest {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  bool expected_failure = false;
};

class Collector {
 public:
  Collector(ValidationReport& report, std::ostream* progress,
            const std::string& filter)
      : report_(report), progress_(progress), filter_(filter) {}

  void run(const std::string& name, bool informational,
           const std::function<Outcome()>& body) {
    if (!filter_.empty() && name.find(filter_) == std::string::npos) return;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report_.checks.push_back({name, outcome.passed, informational,
                              outcome.expected_failure, outcome.detail,
                              seconds});
    if (progress_) {
      const char* flag = informational
                             ? "NOTE"
                             : (outcome.passed
                                    ? "PASS"
                                    : (outcome.expected_failure ? "XFAIL"
                                                                : "FAIL"));
      (*progress_) << "[" << flag << "] " << name << " (" << seconds
                   << " s): " << outcome.detail << "\n";
      progress_->flush();
    }
  }

 private:
  ValidationReport& report_;
  std::ostream* progress_;
  std::string filter_;
};

std::string num(double v) { return format_double(v); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(i * step);
  return g;
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.informational && !c.passed && !c.expected_failure) return false;
  return true;
}

ValidationReport run_validation(const ValidationTolerances& tol,
                                std::ostream* progress,
                                const std::string& name_filter) {
  ValidationReport report;
  Collector collect(report, progress, name_filter);

  // 1. rest-frame matrix and its inverse, exact arithmetic
  collect.run("01_rest_frame_matrix", false, [&] {
    double worst = 0.0;
    bool structure = true;
    for (double k : {0.1, 1.0, 3.0}) {
      const FisherMatrix j = j_rest({1.0, k});
      structure = structure && j.j11 == 2.0 / (k * k) &&
                  j.j22 == 2.0 / (k * k) && j.j12 == 0.0;
      const CrBound b = cr_bound(j);
      worst = std::max(worst,
                       std::fabs(b.var_theta1 - k * k / 2.0) / (k * k / 2.0));
      worst = std::max(worst,
                       std::fabs(b.var_theta2 - k * k / 2.0) / (k * k / 2.0));
    }
    return Outcome{structure && worst <= tol.rest_exact,
                   "diag exact; inverse off by " + num(worst) +
                       " (allowance " + num(tol.rest_exact) +
                       " for reciprocal rounding)"};
  });

  // 2a. xi at rest
  collect.run("02a_xi_rest_unity", false, [&] {
    double worst = 0.0;
    for (double m : {0.5, 1.0, 2.0})
      for (double k : {0.1, 1.0, 3.0})
        worst = std::max(worst, std::fabs(xi({m, k}, 0.0) - 1.0));
    return Outcome{worst <= tol.xi_rest,
                   "max |xi(0) - 1| = " + num(worst) + " (tol " +
                       num(tol.xi_rest) + ")"};
  });

  // 2b. xi near the relativistic limit against the closed form
  collect.run("02b_xi_relativistic_limit", false, [&] {
    const PhysicalConfig cfg{1.0, 1.0};
    const double closed = xi_rel(cfg);
    const double v = 1.0 - 1e-10;
    const double measured = xi(cfg, v);
    const double rel = std::fabs(measured - closed) / closed;
    Outcome out;
    out.passed = rel <= tol.xi_limit_rel;
    // The exact gap is s * 2k^2 int p e^{-k^2 p^2} p^2/(m^2+p^2) dp + O(s^2)
    // with s = sqrt(1-v^2); a failure is acceptable only if it matches that.
    const double s = std::sqrt((1.0 - v) * (1.0 + v));
    auto slope = [&](double p) {
      const double p2 = p * p;
      return 2.0 * p * std::exp(-p2) * p2 / (1.0 + p2);
    };
    const double predicted =
        s * integrate_semi_infinite(slope).value / closed;
    if (!out.passed)
      out.expected_failure = std::fabs(rel - predicted) <= 0.02 * predicted;
    out.detail = "rel gap " + num(rel) + " at v = 1 - 1e-10 (tol " +
                 num(tol.xi_limit_rel) + "); the exact limit gap is " +
                 num(predicted) + " = O(sqrt(1-v^2)), so the stated "
                 "tolerance/offset pair cannot be met" +
                 (out.expected_failure ? " (measured gap matches the math)"
                                       : "");
    return out;
  });

  // 3. closed form against the general-mixture oracle
  collect.run("03_closed_form_vs_oracle", false, [&] {
    double worst_rel = 0.0, worst_off = 0.0;
    for (double m : {0.5, 1.0, 2.0})
      for (double k : {0.1, 1.0, 3.0})
        for (double v : {0.3, 0.7, 0.95}) {
          const PhysicalConfig cfg{m, k};
          const FisherMatrix closed = j_moving(cfg, v);
          const FisherMatrix oracle = j_moving_oracle(cfg, v);
          worst_rel = std::max(
              worst_rel, std::fabs(oracle.j11 - closed.j11) / closed.j11);
          worst_rel = std::max(
              worst_rel, std::fabs(oracle.j22 - closed.j22) / closed.j22);
          worst_off = std::max(worst_off, std::fabs(oracle.j12));
        }
    return Outcome{worst_rel <= tol.oracle_rel && worst_off <= tol.oracle_offdiag,
                   "max rel diag diff " + num(worst_rel) + " (tol " +
                       num(tol.oracle_rel) + "), max |off-diagonal| " +
                       num(worst_off) + " (tol " + num(tol.oracle_offdiag) +
                       ") on the 3x3x3 grid"};
  });

  // 4. closed-form sandwich for kappa eta / v
  collect.run("04_kappa_eta_sandwich", false, [&] {
    const auto kps = log_grid(1e-2, 10.0, 20);
    double worst = -1e300;
    for (double kp : kps)
      for (int iv = 1; iv <= 20; ++iv) {
        const double v = iv / 20.0;
        const double ke = kappa_eta({kp, 1.0}, v);
        const KappaEtaBounds b = kappa_eta_bounds(kp);
        worst = std::max(worst, b.lower * v - ke);
        worst = std::max(worst, ke - b.upper * v);
      }
    const KappaEtaBounds small = kappa_eta_bounds(1e-6);
    const double limit = std::sqrt(M_PI) / 4.0;
    const bool small_ok =
        std::fabs(small.lower - limit) <= tol.bound_small_arg &&
        std::fabs(small.upper - limit) <= tol.bound_small_arg;
    return Outcome{worst <= tol.sandwich_slack && small_ok,
                   "max violation " + num(worst) + " (slack " +
                       num(tol.sandwich_slack) +
                       ") on the 20x20 grid; both bounds -> sqrt(pi)/4 at "
                       "k' = 1e-6 within " +
                       num(tol.bound_small_arg)};
  });

  // 5. information-loss ratio against its envelope
  collect.run("05_delta_envelope", false, [&] {
    const double at_rest = std::fabs(delta_ratio({1.0, 1.0}, 0.0).value - 1.0);
    double worst = -1e300;
    for (double k : log_grid(1e-2, 10.0, 20))
      for (int iv = 0; iv <= 19; ++iv) {
        const double v = iv == 19 ? 1.0 : iv / 19.0;
        worst = std::max(worst, delta_ratio({1.0, k}, v).value -
                                    delta_upper_bound(v));
      }
    const double narrow_limit = 1.0 / (1.0 - M_PI / 8.0);
    const double narrow = delta_ratio({1e-4, 1.0}, 1.0).value;
    const double narrow_rel = std::fabs(narrow - narrow_limit) / narrow_limit;
    const bool ok = at_rest <= tol.delta_rest &&
                    worst <= tol.delta_envelope_slack &&
                    narrow <= narrow_limit + tol.delta_envelope_slack &&
                    narrow_rel <= tol.delta_narrow_rel;
    return Outcome{ok, "|delta(0) - 1| = " + num(at_rest) +
                           "; max envelope violation " + num(worst) +
                           " (slack " + num(tol.delta_envelope_slack) +
                           "); delta(1) at m kappa = 1e-4 within " +
                           num(narrow_rel) + " of 1/(1 - pi/8)"};
  });

  // 6. relativistic-limit asymptotics of the inverse information
  collect.run("06_relativistic_asymptotics", false, [&] {
    const CrBound wide = cr_bound(j_rel({50.0, 1.0}));
    const double wide_excess = wide.var_theta1 - 0.5;
    const double wide_rel =
        std::fabs(wide_excess - 1.0 / 10000.0) / (1.0 / 10000.0);
    const CrBound narrow = cr_bound(j_rel({1e-3, 1.0}));
    const double narrow_limit = 1.0 / (1.0 - M_PI / 8.0);
    const double narrow_rel =
        std::fabs(narrow.var_theta1 / 0.5 - narrow_limit) / narrow_limit;
    return Outcome{wide_rel <= tol.asymptotics_rel &&
                       narrow_rel <= tol.asymptotics_rel,
                   "m kappa = 50: excess vs 1/(4 m^2) off by " + num(wide_rel) +
                       "; m kappa = 1e-3: ratio vs 1/(1 - pi/8) off by " +
                       num(narrow_rel) + " (tol " + num(tol.asymptotics_rel) +
                       ")"};
  });

  // 7. weak-commutativity scalar
  collect.run("07_weak_commutativity", false, [&] {
    const PhysicalConfig cfg{1.0, 1.0};
    const bool rest_zero = weak_commutativity(cfg, 0.0) == 0.0;
    bool positive = true;
    double worst = 0.0;
    for (double v : {0.3, 0.6, 0.9}) {
      const double wc = weak_commutativity(cfg, v);
      positive = positive && wc > 0.0;
      const double eta_v = eta(cfg, v);
      worst = std::max(worst,
                       std::fabs(wc - 8.0 * xi(cfg, v) * eta_v * eta_v));
    }
    return Outcome{rest_zero && positive && worst <= tol.weak_comm,
                   std::string("zero at rest: ") + (rest_zero ? "yes" : "no") +
                       "; positive in motion: " + (positive ? "yes" : "no") +
                       "; composition gap " + num(worst) + " (tol " +
                       num(tol.weak_comm) + ")"};
  });

  // 8. spin-only reduced state
  collect.run("08_spin_reduced_state", false, [&] {
    const PhysicalConfig cfg{1.0, 1.0};
    const SpinDensityMatrix ref = spin_reduced_state({0.0, 0.0}, cfg, 0.7);
    std::mt19937_64 rng(8181);
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    double worst_theta = 0.0, worst_trace = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const SpinDensityMatrix rho =
          spin_reduced_state({shift(rng), shift(rng)}, cfg, 0.7);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          worst_theta =
              std::max(worst_theta, std::abs(rho.m[i][j] - ref.m[i][j]));
      worst_trace = std::max(
          worst_trace, std::abs(rho.m[0][0] + rho.m[1][1] - 1.0));
    }
    return Outcome{worst_theta <= tol.spin_state_theta &&
                       worst_trace <= tol.spin_state_trace,
                   "max theta dependence " + num(worst_theta) + " (tol " +
                       num(tol.spin_state_theta) + "); max |trace - 1| = " +
                       num(worst_trace) + " (tol " + num(tol.spin_state_trace) +
                       ") over 20 random shifts"};
  });

  // 9. rotation algebra on random inputs
  collect.run("09_rotation_algebra", false, [&] {
    std::mt19937_64 rng(9191);
    std::uniform_real_distribution<double> mass(0.1, 5.0), mom(-5.0, 5.0),
        vel(0.0, 0.99);
    double worst_orth = 0.0, worst_euler = 0.0, worst_su2 = 0.0,
           worst_angle = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const PhysicalConfig cfg{mass(rng), 1.0};
      Momentum2 p{mom(rng), mom(rng)};
      if (p.magnitude() < 1e-3) p.p1 += 0.5;
      const Boost b = boost_from_velocity(vel(rng));
      const WignerAngles a = wigner_angles(p, b, cfg);
      worst_angle = std::max(
          worst_angle, std::fabs(a.cos_alpha * a.cos_alpha +
                                 a.sin_alpha * a.sin_alpha - 1.0));
      const Rotation3 w = wigner_matrix(p, b, cfg);
      double det = w.m[0][0] * (w.m[1][1] * w.m[2][2] - w.m[1][2] * w.m[2][1]) -
                   w.m[0][1] * (w.m[1][0] * w.m[2][2] - w.m[1][2] * w.m[2][0]) +
                   w.m[0][2] * (w.m[1][0] * w.m[2][1] - w.m[1][1] * w.m[2][0]);
      worst_orth = std::max(worst_orth, std::fabs(det - 1.0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double dot = 0.0;
          for (int k = 0; k < 3; ++k) dot += w.m[k][i] * w.m[k][j];
          worst_orth =
              std::max(worst_orth, std::fabs(dot - (i == j ? 1.0 : 0.0)));
        }
      const Rotation3 e = euler_reconstruct(a);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          worst_euler = std::max(worst_euler, std::fabs(w.m[i][j] - e.m[i][j]));
      const SpinHalfRep d = spin_half_rep(a);
      const std::complex<double> sdet =
          d.m[0][0] * d.m[1][1] - d.m[0][1] * d.m[1][0];
      worst_su2 = std::max(worst_su2, std::abs(sdet - 1.0));
      const std::complex<double> row =
          d.m[0][0] * std::conj(d.m[1][0]) + d.m[0][1] * std::conj(d.m[1][1]);
      worst_su2 = std::max(worst_su2, std::abs(row));
    }
    const bool ok = worst_orth <= tol.rotation_orthogonality &&
                    worst_euler <= tol.euler_reconstruction &&
                    worst_su2 <= tol.su2 && worst_angle <= tol.angle_identity;
    return Outcome{ok, "1000 draws: orthogonality/det " + num(worst_orth) +
                           ", euler " + num(worst_euler) + ", su2 " +
                           num(worst_su2) + ", angle identity " +
                           num(worst_angle)};
  });

  // 10. coordinate-space densities at the 512^2 momentum grid
  collect.run("10_coordinate_densities", false, [&] {
    const PhysicalConfig cfg{1.0, 0.1};
    const WaveGrid grid = default_wave_grid(cfg);

    const DensityProfile up =
        psi_up_profile(cfg, 0.7, grid, DensityMode::normalized);
    const std::size_t n = up.grid.size();
    double peak = 0.0;
    for (double val : up.values) peak = std::max(peak, val);
    double parity = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      parity = std::max(parity,
                        std::fabs(up.values[i] - up.values[n - 1 - i]) / peak);
    const double origin = up.values[n / 2] / peak;

    const double norm_up =
        std::fabs(normalization_2d(cfg, 0.7, SpinBranch::up, grid) - 1.0);
    const double norm_dn =
        std::fabs(normalization_2d(cfg, 0.7, SpinBranch::down, grid) - 1.0);

    const double p7 = peak_location(cfg, 0.7);
    const double p9 = peak_location(cfg, 0.9);
    const double p98 = peak_location(cfg, 0.98);
    const bool ordered = p7 < p9 && p9 < p98;

    const SampledCurve d = density_derivative_profile(cfg, 0.7, grid);
    double dscale = 0.0;
    for (double val : d.values) dscale = std::max(dscale, std::fabs(val));
    double odd = 0.0;
    for (std::size_t i = 0; i < d.grid.size(); ++i)
      odd = std::max(odd, std::fabs(d.values[i] +
                                    d.values[d.grid.size() - 1 - i]) / dscale);
    const double h = d.grid[1] - d.grid[0];
    bool bracket = false;
    for (std::size_t i = d.grid.size() / 2 + 1; i + 1 < d.grid.size(); ++i)
      if (d.values[i] > 0.0 && d.values[i + 1] <= 0.0) {
        bracket = p7 >= d.grid[i] - h && p7 <= d.grid[i + 1] + h;
        break;
      }

    const bool ok = parity <= tol.density_grid_rel &&
                    origin <= tol.density_grid_rel &&
                    norm_up <= tol.normalization &&
                    norm_dn <= tol.normalization && ordered && bracket &&
                    odd <= tol.density_grid_rel;
    return Outcome{
        ok, "parity " + num(parity) + ", origin " + num(origin) +
                ", |norm - 1| up/down " + num(norm_up) + "/" + num(norm_dn) +
                ", peaks " + num(p7) + " < " + num(p9) + " < " + num(p98) +
                (ordered ? " ordered" : " NOT ordered") +
                ", derivative odd " + num(odd) +
                (bracket ? ", sign change brackets the peak"
                         : ", sign change MISSES the peak")};
  });

  // 11. classical position information never beats the quantum bound
  collect.run("11_measurement_monotonicity", false, [&] {
    const PhysicalConfig cfg{1.0, 0.1};
    const WaveGrid grid = default_wave_grid(cfg);
    bool monotone = true;
    double rest_rel = 0.0;
    std::string detail;
    for (double v : {0.0, 0.3, 0.6, 0.9}) {
      const ClassicalFisher fi = classical_fisher_position(cfg, v, grid);
      const double bound = j_moving(cfg, v).j11;
      // grid tolerance: at v = 0 the two sides agree to rounding
      monotone = monotone && fi.fi_theta1 <= bound * (1.0 + 1e-6);
      if (v == 0.0)
        rest_rel = std::fabs(fi.fi_theta1 - 2.0 / (cfg.kappa * cfg.kappa)) /
                   (2.0 / (cfg.kappa * cfg.kappa));
      detail += "v=" + num(v) + ": " + num(fi.fi_theta1) + " <= " +
                num(bound) + "; ";
    }
    return Outcome{monotone && rest_rel <= tol.fi_rest_rel,
                   detail + "rest-frame rel err " + num(rest_rel) + " (tol " +
                       num(tol.fi_rest_rel) + ")"};
  });

  // 12. deterministic quadrature against the seeded Monte-Carlo oracle
  collect.run("12_quadrature_vs_monte_carlo", false, [&] {
    const PhysicalConfig cfg{1.0, 1.0};
    const double v = 0.9;
    const double s = std::sqrt((1.0 - v) * (1.0 + v));
    const std::uint64_t seed = tol.mc_seed;
    const std::int64_t n = 1000000;

    auto gauge = [&](const char* name, const Integrand2D& g, double reference,
                     std::string* out) {
      const McResult m = mc_integrate(g, cfg.kappa, n, seed);
      const double gap = std::fabs(m.value - reference);
      *out += std::string(name) + ": |gap| " + num(gap) + " vs " +
              num(tol.mc_sigmas) + " sigma = " +
              num(tol.mc_sigmas * m.std_error) + "; ";
      return gap <= tol.mc_sigmas * m.std_error;
    };

    std::string notes;
    const bool xi_ok = gauge(
        "xi",
        [&](double p1, double p2) {
          return relest::detail::cos_alpha(std::hypot(p1, p2), cfg.m, v, s);
        },
        xi(cfg, v), &notes);
    const bool eta_ok = gauge(
        "eta",
        [&](double p1, double p2) {
          return -p1 * p1 * relest::detail::sin_alpha_over_p(
                                std::hypot(p1, p2), cfg.m, v, s);
        },
        eta(cfg, v), &notes);
    const bool nu_ok = gauge(
        "nu",
        [&](double p1, double p2) {
          return p1 * p1 *
                 relest::detail::cos_alpha(std::hypot(p1, p2), cfg.m, v, s);
        },
        nu(cfg, v), &notes);
    return Outcome{xi_ok && eta_ok && nu_ok, notes + "seed " +
                       std::to_string(seed) + ", n = " + std::to_string(n)};
  });

  // 13. byte-identical figure output for identical configuration
  collect.run("13_csv_determinism", false, [&] {
    FigureOptions opt;
    opt.kappa_list = {0.1, 1.0};
    opt.curve_points = 60;
    auto render = [&] {
      std::string all;
      for (const CurveSeries& s : fig4_series(opt)) all += to_csv(s);
      return all;
    };
    const std::string first = render();
    const std::string second = render();
    return Outcome{!first.empty() && first == second,
                   "two renders of " + std::to_string(first.size()) +
                       " bytes " + (first == second ? "match" : "DIFFER")};
  });

  // dimensional note: xi depends on (m, kappa) only through the product
  collect.run("note_xi_dimensional_consistency", true, [&] {
    const double a = xi({2.0, 0.5}, 0.8);
    const double b = xi({0.5, 2.0}, 0.8);
    const double c = xi({1.0, 1.0}, 0.8);
    const double worst = std::max(std::fabs(a - b), std::fabs(a - c));
    return Outcome{worst <= 1e-11,
                   "xi integrand is dimensionally consistent: the value "
                   "depends on (m, kappa) only through m*kappa (spread " +
                       num(worst) + " across three decompositions of "
                       "m*kappa = 1)"};
  });

  return report;
}

}  // namespace relest
