#include "relest/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "relest/state.hpp"

namespace relest {

namespace {

constexpr double kQuotientFloor = 1e-300;  // relative to the density peak

void check_resolution(const PhysicalConfig& cfg, const WaveGrid& grid) {
  validate(cfg);
  if (grid.n_p < 16 || grid.n_x < 16 || !(grid.p_max > 0.0) ||
      !(grid.x_max > 0.0))
    throw std::invalid_argument("WaveGrid: degenerate grid");
  // The amplitude tail beyond the window scales like exp(-(kappa p_max)^2/2),
  // so 6/kappa keeps pointwise density errors near 1e-8.
  if (cfg.kappa * grid.p_max < 6.0)
    throw ResolutionError(
        "momentum window too small for the wavepacket tail; raise p_max "
        "toward 6/kappa or beyond");
  const double dp = 2.0 * grid.p_max / grid.n_p;
  if (dp * grid.x_max > M_PI)
    throw ResolutionError(
        "momentum grid too coarse for the requested coordinate range "
        "(Nyquist); increase the momentum point count or reduce x_max");
}

double branch_weight(double xiv, SpinBranch branch) {
  const SpinWeights weights{xiv};
  return branch == SpinBranch::down ? weights.p_down() : weights.p_up();
}

// Normalized momentum amplitude of one branch on the midpoint grid;
// derivative_axis 0/1 multiplies by i p1 / i p2 for a spectral derivative,
// -1 for none.
ComplexField build_amplitude(const PhysicalConfig& cfg, const Boost& b,
                             double norm, SpinBranch branch,
                             int derivative_axis, const UniformGrid& pgrid,
                             Exec exec) {
  const std::size_t n = static_cast<std::size_t>(pgrid.n);
  ComplexField amp(n * n);
  for_each_index(n, exec, [&](std::size_t i) {
    const double p1 = pgrid.point(static_cast<int>(i));
    const double g1 = gaussian_amp(p1, cfg);
    for (std::size_t j = 0; j < n; ++j) {
      const double p2 = pgrid.point(static_cast<int>(j));
      const SpinAmplitude f = spin_factors({p1, p2}, b, cfg);
      std::complex<double> val =
          norm * g1 * gaussian_amp(p2, cfg) *
          (branch == SpinBranch::down ? f.down : f.up);
      if (derivative_axis == 0) val *= std::complex<double>(0.0, p1);
      if (derivative_axis == 1) val *= std::complex<double>(0.0, p2);
      amp[i * n + j] = val;
    }
  });
  return amp;
}

// Plot grid: inclusive, symmetric, odd count so the origin is sampled.
std::vector<double> profile_axis(const WaveGrid& grid) {
  const int n = grid.n_x | 1;
  std::vector<double> x(n);
  const double step = 2.0 * grid.x_max / (n - 1);
  for (int i = 0; i < n; ++i) x[i] = -grid.x_max + i * step;
  x[n / 2] = 0.0;
  return x;
}

struct BranchSetup {
  Boost boost;
  double xi_v;
  double inv_sqrt_weight;
};

BranchSetup branch_setup(const PhysicalConfig& cfg, double v,
                         SpinBranch branch) {
  if (!(v >= 0.0) || !(v < 1.0))
    throw std::domain_error("coordinate-space densities need 0 <= v < 1");
  if (branch == SpinBranch::up && v == 0.0)
    throw std::domain_error("the up branch is empty at v = 0");
  const double xiv = xi(cfg, v);
  return {boost_from_velocity(v), xiv,
          1.0 / std::sqrt(branch_weight(xiv, branch))};
}

double raw_scale(const Boost& b) { return b.cosh_chi / (4.0 * M_PI); }

DensityProfile profile(const PhysicalConfig& cfg, double v, SpinBranch branch,
                       const WaveGrid& grid, DensityMode mode, Exec exec) {
  check_resolution(cfg, grid);
  const BranchSetup setup = branch_setup(cfg, v, branch);
  const UniformGrid pgrid{grid.p_max, grid.n_p};

  const ComplexField amp = build_amplitude(cfg, setup.boost,
                                           setup.inv_sqrt_weight, branch, -1,
                                           pgrid, exec);
  std::vector<double> x = profile_axis(grid);
  const auto psi = transform_slice(amp, pgrid, x, exec);

  const double scale = mode == DensityMode::raw ? raw_scale(setup.boost) : 1.0;
  DensityProfile out;
  out.grid = std::move(x);
  out.mode = mode;
  out.values.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    out.values[i] = scale * std::norm(psi[i]);
  return out;
}

}  // namespace

WaveGrid default_wave_grid(const PhysicalConfig& cfg) {
  validate(cfg);
  WaveGrid g;
  g.p_max = 6.0 / cfg.kappa;
  // The angle factor varies on momentum scale m, so the coordinate-space
  // branches carry exp(-2m|x|) tails far outside the Gaussian core of width
  // ~kappa; the window must cover both scales to hold the 1e-6 mass budget.
  g.x_max = 12.0 * cfg.kappa + 6.0 / cfg.m;
  const int core_res = static_cast<int>(std::ceil(8.0 * g.x_max / cfg.kappa));
  g.n_x = std::max(128, core_res);
  const double nyquist = 2.0 * g.p_max * g.x_max / M_PI;
  g.n_p = std::max(512, 64 * static_cast<int>(std::ceil(nyquist * 1.25 / 64.0)));
  return g;
}

DensityProfile psi_up_profile(const PhysicalConfig& cfg, double v,
                              const WaveGrid& grid, DensityMode mode,
                              Exec exec) {
  if (v == 0.0)
    throw std::domain_error("psi_up_profile: requires 0 < v < 1");
  return profile(cfg, v, SpinBranch::up, grid, mode, exec);
}

DensityProfile psi_down_profile(const PhysicalConfig& cfg, double v,
                                const WaveGrid& grid, DensityMode mode,
                                Exec exec) {
  return profile(cfg, v, SpinBranch::down, grid, mode, exec);
}

SampledCurve density_derivative_profile(const PhysicalConfig& cfg, double v,
                                        const WaveGrid& grid, DensityMode mode,
                                        Exec exec) {
  check_resolution(cfg, grid);
  if (v == 0.0)
    throw std::domain_error("density_derivative_profile: requires 0 < v < 1");
  const BranchSetup setup = branch_setup(cfg, v, SpinBranch::up);
  const UniformGrid pgrid{grid.p_max, grid.n_p};

  const ComplexField amp =
      build_amplitude(cfg, setup.boost, setup.inv_sqrt_weight, SpinBranch::up,
                      -1, pgrid, exec);
  const ComplexField damp =
      build_amplitude(cfg, setup.boost, setup.inv_sqrt_weight, SpinBranch::up,
                      0, pgrid, exec);

  std::vector<double> x = profile_axis(grid);
  const auto psi = transform_slice(amp, pgrid, x, exec);
  const auto dpsi = transform_slice(damp, pgrid, x, exec);

  const double scale = mode == DensityMode::raw ? raw_scale(setup.boost) : 1.0;
  SampledCurve out;
  out.grid = std::move(x);
  out.values.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    out.values[i] = 2.0 * scale * std::real(std::conj(psi[i]) * dpsi[i]);
  return out;
}

double peak_location(const PhysicalConfig& cfg, double v) {
  const WaveGrid grid = default_wave_grid(cfg);
  check_resolution(cfg, grid);
  const BranchSetup setup = branch_setup(cfg, v, SpinBranch::up);
  const UniformGrid pgrid{grid.p_max, grid.n_p};
  const ComplexField amp =
      build_amplitude(cfg, setup.boost, setup.inv_sqrt_weight, SpinBranch::up,
                      -1, pgrid, Exec::parallel);
  auto density = [&](double x) {
    return std::norm(transform_slice(amp, pgrid, {x}, Exec::serial)[0]);
  };

  // Coarse scan of the positive half; the density is even and vanishes at 0.
  const int n_scan = 1024;
  const double step = grid.x_max / n_scan;
  int best = -1;
  double best_val = -1.0;
  std::vector<double> xs(n_scan);
  for (int i = 0; i < n_scan; ++i) xs[i] = (i + 1) * step;
  const auto psi = transform_slice(amp, pgrid, xs, Exec::parallel);
  std::vector<double> vals(n_scan);
  for (int i = 0; i < n_scan; ++i) vals[i] = std::norm(psi[i]);
  for (int i = 1; i + 1 < n_scan; ++i)
    if (vals[i] > best_val) {
      best_val = vals[i];
      best = i;
    }
  if (best <= 0 || vals[best] <= vals[0] || best + 1 >= n_scan)
    throw std::runtime_error("peak_location: no interior maximum found");

  // Golden-section refinement inside the bracketing cell pair.
  double lo = xs[best - 1], hi = xs[best + 1];
  const double gold = 0.5 * (3.0 - std::sqrt(5.0));
  double x1 = lo + gold * (hi - lo), x2 = hi - gold * (hi - lo);
  double f1 = density(x1), f2 = density(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-11 * grid.x_max; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = hi - gold * (hi - lo);
      f2 = density(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = lo + gold * (hi - lo);
      f1 = density(x1);
    }
  }
  return 0.5 * (lo + hi);
}

double normalization_2d(const PhysicalConfig& cfg, double v, SpinBranch branch,
                        const WaveGrid& grid, Exec exec) {
  check_resolution(cfg, grid);
  const BranchSetup setup = branch_setup(cfg, v, branch);
  const UniformGrid pgrid{grid.p_max, grid.n_p};
  const UniformGrid xgrid{grid.x_max, grid.n_x};
  const ComplexField amp = build_amplitude(
      cfg, setup.boost, setup.inv_sqrt_weight, branch, -1, pgrid, exec);
  const ComplexField psi = transform_grid(amp, pgrid, xgrid, exec);

  const std::size_t n_x = static_cast<std::size_t>(grid.n_x);
  std::vector<double> row_mass(n_x, 0.0);
  for_each_index(n_x, exec, [&](std::size_t a) {
    double s = 0.0;
    for (std::size_t b = 0; b < n_x; ++b) s += std::norm(psi[a * n_x + b]);
    row_mass[a] = s;
  });
  double total = 0.0;
  for (double r : row_mass) total += r;
  const double dx = xgrid.step();
  return total * dx * dx;
}

ClassicalFisher classical_fisher_position(const PhysicalConfig& cfg, double v,
                                          const WaveGrid& grid, int axis,
                                          Exec exec) {
  check_resolution(cfg, grid);
  if (!(v >= 0.0) || !(v < 1.0))
    throw std::domain_error("classical_fisher_position: requires 0 <= v < 1");
  if (axis != 0 && axis != 1)
    throw std::invalid_argument("classical_fisher_position: axis must be 0 or 1");

  const double xiv = xi(cfg, v);
  const double w_dn = branch_weight(xiv, SpinBranch::down);
  const double w_up = branch_weight(xiv, SpinBranch::up);
  const Boost b = boost_from_velocity(v);
  const UniformGrid pgrid{grid.p_max, grid.n_p};
  const UniformGrid xgrid{grid.x_max, grid.n_x};
  const std::size_t n_x = static_cast<std::size_t>(grid.n_x);

  struct Fields {
    ComplexField psi, dpsi;
  };
  auto make_fields = [&](SpinBranch branch, double weight) {
    Fields f;
    if (weight <= 0.0) return f;
    const double norm = 1.0 / std::sqrt(weight);
    f.psi = transform_grid(
        build_amplitude(cfg, b, norm, branch, -1, pgrid, exec), pgrid, xgrid,
        exec);
    f.dpsi = transform_grid(
        build_amplitude(cfg, b, norm, branch, axis, pgrid, exec), pgrid,
        xgrid, exec);
    return f;
  };
  const Fields down = make_fields(SpinBranch::down, w_dn);
  const Fields up = make_fields(SpinBranch::up, w_up);

  // rho and d1 rho on the grid; note stage layout psi[a * n_x + b] with a
  // indexing x1.
  std::vector<double> rho(n_x * n_x), drho(n_x * n_x);
  for_each_index(n_x, exec, [&](std::size_t a) {
    for (std::size_t b2 = 0; b2 < n_x; ++b2) {
      const std::size_t idx = a * n_x + b2;
      double r = w_dn * std::norm(down.psi[idx]);
      double d = 2.0 * w_dn * std::real(std::conj(down.psi[idx]) *
                                        down.dpsi[idx]);
      if (w_up > 0.0) {
        r += w_up * std::norm(up.psi[idx]);
        d += 2.0 * w_up * std::real(std::conj(up.psi[idx]) * up.dpsi[idx]);
      }
      rho[idx] = r;
      drho[idx] = d;
    }
  });

  const double peak = *std::max_element(rho.begin(), rho.end());
  const double floor = kQuotientFloor * peak;
  std::vector<double> row_fi(n_x, 0.0), row_excluded(n_x, 0.0);
  for_each_index(n_x, exec, [&](std::size_t a) {
    double fi = 0.0, excluded = 0.0;
    for (std::size_t b2 = 0; b2 < n_x; ++b2) {
      const std::size_t idx = a * n_x + b2;
      if (rho[idx] > floor)
        fi += drho[idx] * drho[idx] / rho[idx];
      else
        excluded += rho[idx];
    }
    row_fi[a] = fi;
    row_excluded[a] = excluded;
  });
  double fi = 0.0, excluded = 0.0;
  for (std::size_t a = 0; a < n_x; ++a) {
    fi += row_fi[a];
    excluded += row_excluded[a];
  }
  const double dx = xgrid.step();
  return {fi * dx * dx, grid, excluded * dx * dx};
}

}  // namespace relest
