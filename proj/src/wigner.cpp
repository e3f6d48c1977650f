#include "relest/wigner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace relest {

namespace {

using M4 = std::array<std::array<double, 4>, 4>;

M4 multiply(const M4& a, const M4& b) {
  M4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

// Standard boost taking the rest momentum (m, 0) to (p0, px, py, pz).
M4 standard_boost(double m, double px, double py, double pz) {
  const double p0 = std::sqrt(m * m + px * px + py * py + pz * pz);
  const double v[3] = {px, py, pz};
  M4 l{};
  l[0][0] = p0 / m;
  for (int i = 0; i < 3; ++i) {
    l[0][i + 1] = l[i + 1][0] = v[i] / m;
    for (int j = 0; j < 3; ++j)
      l[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + v[i] * v[j] / (m * (p0 + m));
  }
  return l;
}

// A standard boost is symmetric, so its inverse is eta * L * eta.
M4 invert_boost(M4 l) {
  for (int i = 1; i < 4; ++i) {
    l[0][i] = -l[0][i];
    l[i][0] = -l[i][0];
  }
  return l;
}

void require_finite_boost(const Boost& b, const char* who) {
  if (b.relativistic_limit)
    throw std::domain_error(std::string(who) +
                            ": undefined at the relativistic limit v = 1");
}

Rotation3 rotation_z(double cos_phi, double sin_phi) {
  Rotation3 r;
  r.m = {{{cos_phi, -sin_phi, 0.0}, {sin_phi, cos_phi, 0.0}, {0.0, 0.0, 1.0}}};
  return r;
}

Rotation3 rotation_y(double cos_a, double sin_a) {
  Rotation3 r;
  r.m = {{{cos_a, 0.0, -sin_a}, {0.0, 1.0, 0.0}, {sin_a, 0.0, cos_a}}};
  return r;
}

Rotation3 multiply(const Rotation3& a, const Rotation3& b) {
  Rotation3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      c.m[i][j] = s;
    }
  return c;
}

}  // namespace

void validate(const PhysicalConfig& cfg) {
  if (!(cfg.m > 0.0) || !std::isfinite(cfg.m))
    throw std::domain_error("PhysicalConfig: mass must be positive and finite");
  if (!(cfg.kappa > 0.0) || !std::isfinite(cfg.kappa))
    throw std::domain_error("PhysicalConfig: kappa must be positive and finite");
}

double Momentum2::magnitude() const { return std::hypot(p1, p2); }

Boost boost_from_velocity(double v) {
  if (!(v >= 0.0) || !(v <= 1.0))
    throw std::domain_error("boost_from_velocity: v must lie in [0, 1]");
  if (v == 1.0) {
    Boost b;
    b.v = 1.0;
    b.cosh_chi = std::numeric_limits<double>::infinity();
    b.sinh_chi = std::numeric_limits<double>::infinity();
    b.relativistic_limit = true;
    return b;
  }
  const double s = std::sqrt((1.0 - v) * (1.0 + v));
  return {v, 1.0 / s, v / s, false};
}

std::array<double, 3> boost_momentum(const Momentum2& p, const Boost& b,
                                     const PhysicalConfig& cfg) {
  validate(cfg);
  require_finite_boost(b, "boost_momentum");
  const double p0 = std::sqrt(cfg.m * cfg.m + p.p1 * p.p1 + p.p2 * p.p2);
  return {p.p1, p.p2, -p0 * b.sinh_chi};
}

WignerAngles wigner_angles(const Momentum2& p, const Boost& b,
                           const PhysicalConfig& cfg) {
  validate(cfg);
  require_finite_boost(b, "wigner_angles");
  const double pm = p.magnitude();
  const double p0 = std::sqrt(cfg.m * cfg.m + pm * pm);
  const double denom = p0 * b.cosh_chi + cfg.m;
  WignerAngles a;
  a.cos_alpha = (p0 + cfg.m * b.cosh_chi) / denom;
  a.sin_alpha = -pm * b.sinh_chi / denom;
  a.phi = pm > 0.0 ? std::atan2(p.p2, p.p1) : 0.0;
  return a;
}

Rotation3 wigner_matrix(const Momentum2& p, const Boost& b,
                        const PhysicalConfig& cfg) {
  const double pm = p.magnitude();
  if (pm == 0.0)
    throw std::domain_error("wigner_matrix: |p| = 0 is degenerate");
  const WignerAngles a = wigner_angles(p, b, cfg);
  const double c = p.p1 / pm, s = p.p2 / pm;  // cos phi, sin phi
  const double ca = a.cos_alpha, sa = a.sin_alpha;
  Rotation3 w;
  w.m[0][0] = s * s + c * c * ca;
  w.m[1][1] = c * c + s * s * ca;
  w.m[0][1] = w.m[1][0] = -c * s * (1.0 - ca);
  w.m[0][2] = -c * sa;
  w.m[2][0] = c * sa;
  w.m[1][2] = -s * sa;
  w.m[2][1] = s * sa;
  w.m[2][2] = ca;
  return w;
}

Rotation3 wigner_matrix_composed(const Momentum2& p, const Boost& b,
                                 const PhysicalConfig& cfg) {
  validate(cfg);
  require_finite_boost(b, "wigner_matrix_composed");
  if (p.magnitude() == 0.0)
    throw std::domain_error("wigner_matrix_composed: |p| = 0 is degenerate");

  M4 lambda{};
  lambda[0][0] = lambda[3][3] = b.cosh_chi;
  lambda[0][3] = lambda[3][0] = -b.sinh_chi;
  lambda[1][1] = lambda[2][2] = 1.0;

  const double p0 = std::sqrt(cfg.m * cfg.m + p.p1 * p.p1 + p.p2 * p.p2);
  const M4 l_p = standard_boost(cfg.m, p.p1, p.p2, 0.0);
  const M4 l_bp_inv =
      invert_boost(standard_boost(cfg.m, p.p1, p.p2, -p0 * b.sinh_chi));
  const M4 w = multiply(l_bp_inv, multiply(lambda, l_p));

  // The time row and column are trivial for this configuration.
  constexpr double kTol = 1e-9;
  if (std::fabs(w[0][0] - 1.0) > kTol || std::fabs(w[0][1]) > kTol ||
      std::fabs(w[0][2]) > kTol || std::fabs(w[0][3]) > kTol ||
      std::fabs(w[1][0]) > kTol || std::fabs(w[2][0]) > kTol ||
      std::fabs(w[3][0]) > kTol)
    throw std::runtime_error(
        "wigner_matrix_composed: time row/column not trivial");

  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = w[i + 1][j + 1];
  return r;
}

Rotation3 euler_reconstruct(const WignerAngles& a) {
  const double c = std::cos(a.phi), s = std::sin(a.phi);
  return multiply(rotation_z(c, s),
                  multiply(rotation_y(a.cos_alpha, a.sin_alpha),
                           rotation_z(c, -s)));
}

SpinHalfRep spin_half_rep(const WignerAngles& a) {
  if (!(a.cos_alpha > 0.0))
    throw std::domain_error("spin_half_rep: cos(alpha) must be positive");
  const double half_cos = std::sqrt(0.5 * (1.0 + a.cos_alpha));
  const double half_sin = a.sin_alpha / (2.0 * half_cos);
  const std::complex<double> phase(std::cos(a.phi), std::sin(a.phi));
  SpinHalfRep d;
  d.m[0][0] = half_cos;
  d.m[0][1] = -phase * half_sin;
  d.m[1][0] = std::conj(phase) * half_sin;
  d.m[1][1] = half_cos;
  return d;
}

}  // namespace relest
