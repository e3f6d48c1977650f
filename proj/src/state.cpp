#include "relest/state.hpp"

#include <cmath>
#include <stdexcept>

#include "relest/special.hpp"

namespace relest {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

void require_velocity(double v, bool allow_limit) {
  if (!(v >= 0.0) || !(v <= 1.0) || (!allow_limit && v == 1.0))
    throw std::domain_error("velocity outside the supported range");
}

double sqrt_one_minus_v2(double v) {
  return v == 1.0 ? 0.0 : std::sqrt((1.0 - v) * (1.0 + v));
}

}  // namespace

namespace detail {

double cos_alpha(double p_mag, double m, double /*v*/, double s) {
  const double p0 = std::sqrt(m * m + p_mag * p_mag);
  return (p0 * s + m) / (p0 + m * s);
}

double sin_alpha_over_p(double p_mag, double m, double v, double s) {
  const double p0 = std::sqrt(m * m + p_mag * p_mag);
  return -v / (p0 + m * s);
}

}  // namespace detail

double gaussian_amp(double p, const PhysicalConfig& cfg) {
  validate(cfg);
  const double k = cfg.kappa;
  return std::sqrt(k) * std::pow(M_PI, -0.25) * std::exp(-0.5 * k * k * p * p);
}

SpinAmplitude spin_factors(const Momentum2& p, const Boost& b,
                           const PhysicalConfig& cfg) {
  const WignerAngles a = wigner_angles(p, b, cfg);
  const double half_cos = std::sqrt(0.5 * (1.0 + a.cos_alpha));
  const double half_sin = a.sin_alpha / (2.0 * half_cos);
  const std::complex<double> phase(std::cos(a.phi), std::sin(a.phi));
  return {half_cos, -phase * half_sin};
}

SpinAmplitude amplitude(const std::array<double, 2>& theta, const Momentum2& p,
                        const Boost& b, const PhysicalConfig& cfg) {
  const SpinAmplitude f = spin_factors(p, b, cfg);
  const double envelope = gaussian_amp(p.p1, cfg) * gaussian_amp(p.p2, cfg);
  const double arg = -(p.p1 * theta[0] + p.p2 * theta[1]);
  const std::complex<double> shift(std::cos(arg), std::sin(arg));
  return {envelope * shift * f.down, envelope * shift * f.up};
}

double xi(const PhysicalConfig& cfg, double v, const QuadratureSpec& spec) {
  validate(cfg);
  require_velocity(v, true);
  const double m = cfg.m, k = cfg.kappa;
  const double s = sqrt_one_minus_v2(v);
  auto integrand = [m, k, s](double p) {
    const double p0 = std::sqrt(m * m + p * p);
    return 2.0 * k * k * p * std::exp(-k * k * p * p) * (p0 * s + m) /
           (p0 + m * s);
  };
  return integrate_semi_infinite(integrand, spec, 1.0 / k).value;
}

double xi_rel(const PhysicalConfig& cfg) {
  validate(cfg);
  const double mk = cfg.m * cfg.kappa;
  return kSqrtPi * mk * erfcx(mk);
}

SpinWeights spin_weights(const PhysicalConfig& cfg, double v,
                         const QuadratureSpec& spec) {
  return {xi(cfg, v, spec)};
}

double spin_up_probability(const PhysicalConfig& cfg, double v) {
  return spin_weights(cfg, v).p_up();
}

double kappa_eta(const PhysicalConfig& cfg, double v,
                 const QuadratureSpec& spec) {
  validate(cfg);
  require_velocity(v, true);
  if (v == 0.0) return 0.0;

  const double m = cfg.m, k = cfg.kappa;
  const double s = sqrt_one_minus_v2(v);
  const double kp = m * k;

  // Radial route in the reduced variable p' = |p| / m.
  auto radial = [kp, s](double q) {
    return kp * kp * kp * q * q * q * std::exp(-kp * kp * q * q) /
           (std::sqrt(1.0 + q * q) + s);
  };
  const double from_radial =
      v * integrate_semi_infinite(radial, spec, 1.0 / kp).value;

  // Cartesian route: -(p1)^2 / |p| * sin(alpha) against the squared density.
  auto cartesian = [m, v, s](double p1, double p2) {
    const double pm = std::hypot(p1, p2);
    return -p1 * p1 * detail::sin_alpha_over_p(pm, m, v, s);
  };
  const double from_cartesian =
      k * integrate_2d_gaussian_weighted(cartesian, k, spec).value;

  const double diff = std::fabs(from_radial - from_cartesian);
  const double route_tol =
      std::max(1e-9, 8.0 * spec.rel_tol) * std::max(1.0, std::fabs(from_radial)) +
      8.0 * spec.abs_tol;
  if (diff > route_tol)
    throw ConvergenceError(
        "kappa_eta: radial and cartesian routes disagree",
        {from_radial, diff, 0});
  return from_radial;
}

double eta(const PhysicalConfig& cfg, double v, const QuadratureSpec& spec) {
  return kappa_eta(cfg, v, spec) / cfg.kappa;
}

double nu(const PhysicalConfig& cfg, double v, const QuadratureSpec& spec) {
  validate(cfg);
  require_velocity(v, true);
  const double m = cfg.m;
  const double s = sqrt_one_minus_v2(v);
  auto integrand = [m, v, s](double p1, double p2) {
    return p1 * p1 * detail::cos_alpha(std::hypot(p1, p2), m, v, s);
  };
  return integrate_2d_gaussian_weighted(integrand, cfg.kappa, spec).value;
}

ScalarIntegrals scalar_integrals(const PhysicalConfig& cfg, double v,
                                 const QuadratureSpec& spec) {
  return {eta(cfg, v, spec), nu(cfg, v, spec)};
}

SpinDensityMatrix spin_reduced_state(const std::array<double, 2>& theta,
                                     const PhysicalConfig& cfg, double v) {
  validate(cfg);
  require_velocity(v, false);
  const Boost b = boost_from_velocity(v);

  const double xiv = xi(cfg, v);

  // Off-diagonal with the shift phases kept in the numerics; they cancel
  // pointwise, which is exactly the theta-independence being checked.
  auto cross = [&](double p1, double p2) -> std::complex<double> {
    const Momentum2 p{p1, p2};
    const SpinAmplitude f = spin_factors(p, b, cfg);
    const double arg = -(p1 * theta[0] + p2 * theta[1]);
    const std::complex<double> shift(std::cos(arg), std::sin(arg));
    return (f.down * shift) * std::conj(f.up * shift);
  };
  QuadratureSpec offdiag_spec;
  offdiag_spec.rel_tol = 1e-8;
  offdiag_spec.abs_tol = 1e-14;
  const double re =
      integrate_2d_gaussian_weighted(
          [&](double q1, double q2) { return cross(q1, q2).real(); }, cfg.kappa,
          offdiag_spec)
          .value;
  const double im =
      integrate_2d_gaussian_weighted(
          [&](double q1, double q2) { return cross(q1, q2).imag(); }, cfg.kappa,
          offdiag_spec)
          .value;

  SpinDensityMatrix rho;
  rho.m[0][0] = 0.5 * (1.0 + xiv);
  rho.m[1][1] = 0.5 * (1.0 - xiv);
  rho.m[0][1] = {re, im};
  rho.m[1][0] = std::conj(rho.m[0][1]);
  return rho;
}

}  // namespace relest
