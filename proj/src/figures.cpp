#include "relest/figures.hpp"

#include <cmath>

#include "relest/fisher.hpp"
#include "relest/special.hpp"
#include "relest/state.hpp"

namespace relest {

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * step);
  out.back() = hi;
  return out;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo + i * step;
  out.back() = hi;
  return out;
}

void require_velocities(const std::vector<double>& vs, bool allow_limit) {
  for (double v : vs)
    if (!(v >= 0.0) || !(v <= 1.0) || (!allow_limit && v == 1.0))
      throw std::invalid_argument("velocity list outside the supported range");
}

// Short form for series names and filenames; metadata keeps full precision.
std::string tag(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

void append_tolerances(CurveSeries& series, const QuadratureSpec& spec) {
  series.metadata.emplace_back("rel_tol", format_double(spec.rel_tol));
  series.metadata.emplace_back("abs_tol", format_double(spec.abs_tol));
}

CurveSeries density_series(const FigureOptions& opt, double v,
                           bool derivative) {
  const PhysicalConfig cfg{opt.m, opt.kappa};
  WaveGrid grid = default_wave_grid(cfg);
  grid.x_max = opt.x_max > 0.0 ? opt.x_max : 5.0 * opt.kappa;
  grid.n_x = opt.grid_points;

  CurveSeries s;
  s.abscissa_label = "x1";
  if (derivative) {
    s.name = "fig3_v" + tag(v);
    s.ordinate_label = "ddensity_dx1";
    const SampledCurve curve =
        density_derivative_profile(cfg, v, grid, DensityMode::raw, opt.exec);
    for (std::size_t i = 0; i < curve.grid.size(); ++i)
      s.points.emplace_back(curve.grid[i], curve.values[i]);
  } else {
    s.name = "fig2_v" + tag(v);
    s.ordinate_label = "density";
    const DensityProfile prof =
        psi_up_profile(cfg, v, grid, DensityMode::raw, opt.exec);
    for (std::size_t i = 0; i < prof.grid.size(); ++i)
      s.points.emplace_back(prof.grid[i], prof.values[i]);
  }
  s.metadata.emplace_back("m", format_double(opt.m));
  s.metadata.emplace_back("kappa", format_double(opt.kappa));
  s.metadata.emplace_back("v", format_double(v));
  s.metadata.emplace_back("mode", "raw");
  s.metadata.emplace_back("p_max", format_double(grid.p_max));
  s.metadata.emplace_back("n_p", std::to_string(grid.n_p));
  s.metadata.emplace_back("x_max", format_double(grid.x_max));
  s.metadata.emplace_back("n_x", std::to_string(grid.n_x | 1));
  return s;
}

}  // namespace

std::vector<CurveSeries> fig1_series(const FigureOptions& opt) {
  std::vector<double> vs =
      opt.v_list.empty() ? std::vector<double>{0.1, 0.5, 0.95, 1.0}
                         : opt.v_list;
  require_velocities(vs, true);
  const std::vector<double> mk = log_spaced(1e-2, 10.0, opt.curve_points);

  std::vector<CurveSeries> out;
  for (double v : vs) {
    CurveSeries s;
    s.name = "fig1_v" + tag(v);
    s.abscissa_label = "m_kappa";
    s.ordinate_label = "p_up";
    s.points.resize(mk.size());
    for_each_index(mk.size(), opt.exec, [&](std::size_t i) {
      const PhysicalConfig cfg{mk[i], 1.0};
      const double value = v == 1.0 ? 0.5 * (1.0 - xi_rel(cfg))
                                    : 0.5 * (1.0 - xi(cfg, v, opt.quad));
      s.points[i] = {mk[i], value};
    });
    s.metadata.emplace_back("v", format_double(v));
    append_tolerances(s, opt.quad);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CurveSeries> fig2_series(const FigureOptions& opt) {
  std::vector<double> vs =
      opt.v_list.empty() ? std::vector<double>{0.99, 0.98, 0.9, 0.7, 0.1}
                         : opt.v_list;
  require_velocities(vs, false);
  std::vector<CurveSeries> out;
  for (double v : vs) out.push_back(density_series(opt, v, false));
  return out;
}

std::vector<CurveSeries> fig3_series(const FigureOptions& opt) {
  std::vector<double> vs = opt.v_list.empty()
                               ? std::vector<double>{0.98, 0.9, 0.7, 0.1}
                               : opt.v_list;
  require_velocities(vs, false);
  std::vector<CurveSeries> out;
  for (double v : vs) out.push_back(density_series(opt, v, true));
  return out;
}

std::vector<CurveSeries> fig4_series(const FigureOptions& opt) {
  const std::vector<double> kappas =
      opt.kappa_list.empty() ? std::vector<double>{0.1, 0.5, 1.0, 3.0}
                             : opt.kappa_list;
  const std::vector<double> vs = lin_spaced(0.0, 1.0, opt.curve_points);

  std::vector<CurveSeries> out;
  for (double k : kappas) {
    const PhysicalConfig cfg{opt.m, k};
    CurveSeries s;
    s.name = "fig4_kappa" + tag(k);
    s.abscissa_label = "v";
    s.ordinate_label = "delta";
    s.points.resize(vs.size());
    for_each_index(vs.size(), opt.exec, [&](std::size_t i) {
      const double v = vs[i];
      const double ke = v == 1.0 ? kappa_eta_rel(cfg.m * cfg.kappa)
                                 : kappa_eta(cfg, v, opt.quad);
      s.points[i] = {v, 1.0 / (1.0 - 2.0 * ke * ke)};
    });
    s.metadata.emplace_back("m", format_double(opt.m));
    s.metadata.emplace_back("kappa", format_double(k));
    append_tolerances(s, opt.quad);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CurveSeries> fig5_series(const FigureOptions& opt) {
  std::vector<double> vs = opt.v_list.empty()
                               ? std::vector<double>{0.95, 0.7, 0.1}
                               : opt.v_list;
  require_velocities(vs, true);
  const std::vector<double> mk = log_spaced(1e-2, 10.0, opt.curve_points);

  std::vector<CurveSeries> out;
  for (double v : vs) {
    CurveSeries s;
    s.name = "fig5_v" + tag(v);
    s.abscissa_label = "m_kappa";
    s.ordinate_label = "kappa_eta_over_v";
    s.points.resize(mk.size());
    for_each_index(mk.size(), opt.exec, [&](std::size_t i) {
      const PhysicalConfig cfg{mk[i], 1.0};
      const double ke = v == 1.0 ? kappa_eta_rel(mk[i])
                                 : kappa_eta(cfg, v, opt.quad);
      s.points[i] = {mk[i], std::fabs(ke) / v};
    });
    s.metadata.emplace_back("v", format_double(v));
    append_tolerances(s, opt.quad);
    out.push_back(std::move(s));
  }
  // closed-form sandwich curves, velocity independent
  for (const char* which : {"lower", "upper"}) {
    CurveSeries s;
    s.name = std::string("fig5_bound_") + which;
    s.abscissa_label = "m_kappa";
    s.ordinate_label = "kappa_eta_over_v";
    s.points.resize(mk.size());
    const bool lower = std::string(which) == "lower";
    for_each_index(mk.size(), opt.exec, [&](std::size_t i) {
      const KappaEtaBounds b = kappa_eta_bounds(mk[i]);
      s.points[i] = {mk[i], lower ? b.lower : b.upper};
    });
    s.metadata.emplace_back("bound", which);
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::json compute_record(const ComputeOptions& opt) {
  const PhysicalConfig cfg{opt.m, opt.kappa};
  validate(cfg);
  if (!(opt.v >= 0.0) || !(opt.v <= 1.0))
    throw std::invalid_argument("compute: v must lie in [0, 1]");
  const double v = opt.v;
  const bool limit = v == 1.0;

  const double xiv = limit ? xi_rel(cfg) : xi(cfg, v, opt.quad);
  const double ke =
      limit ? kappa_eta_rel(cfg.m * cfg.kappa) : kappa_eta(cfg, v, opt.quad);
  const double eta_v = ke / cfg.kappa;
  const ScalarIntegrals scalars{eta_v, nu(cfg, v, opt.quad)};
  const FisherMatrix rest = j_rest(cfg);
  const FisherMatrix moving = j_moving(cfg, v);
  const FisherMatrix rel = j_rel(cfg);
  const CrBound bound = cr_bound(moving);
  const KappaEtaBounds keb = kappa_eta_bounds(cfg.m * cfg.kappa);

  auto matrix = [](const FisherMatrix& j) {
    return nlohmann::json{{j.j11, j.j12}, {j.j12, j.j22}};
  };

  nlohmann::json results{
      {"xi", xiv},
      {"xi_rel", xi_rel(cfg)},
      {"spin_up_probability", 0.5 * (1.0 - xiv)},
      {"eta", eta_v},
      {"kappa_eta", ke},
      {"kappa_eta_bounds", {{"lower", keb.lower}, {"upper", keb.upper}}},
      {"nu", scalars.nu},
      {"j_rest", matrix(rest)},
      {"j_moving", matrix(moving)},
      {"j_rel", matrix(rel)},
      {"delta", 1.0 / (1.0 - 2.0 * ke * ke)},
      {"delta_upper_bound", delta_upper_bound(v)},
      {"weak_commutativity", 8.0 * xiv * eta_v * eta_v},
      {"cr_var_theta1", bound.var_theta1},
      {"cr_var_theta2", bound.var_theta2},
  };

  if (opt.classical_fi) {
    if (limit)
      throw std::invalid_argument(
          "compute: the classical position information needs v < 1");
    WaveGrid grid = default_wave_grid(cfg);
    if (opt.x_max > 0.0) grid.x_max = opt.x_max;
    if (opt.grid_points > 0) grid.n_x = opt.grid_points;
    const ClassicalFisher fi = classical_fisher_position(cfg, v, grid);
    results["classical_fi_theta1"] = fi.fi_theta1;
    results["classical_fi_excluded_mass"] = fi.excluded_mass;
  }

  return nlohmann::json{
      {"schema_version", 1},
      {"inputs", {{"m", opt.m}, {"kappa", opt.kappa}, {"v", v}}},
      {"tolerances",
       {{"rel_tol", opt.quad.rel_tol}, {"abs_tol", opt.quad.abs_tol}}},
      {"provenance",
       {{"xi_method", limit ? "closed-form limit" : "adaptive quadrature"},
        {"eta_method", limit ? "closed-form limit"
                             : "radial quadrature, cross-checked in 2d"}}},
      {"results", results}};
}

}  // namespace relest
