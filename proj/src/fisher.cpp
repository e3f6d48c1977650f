#include "relest/fisher.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "relest/quadrature.hpp"
#include "relest/special.hpp"

namespace relest {

namespace {
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
}

FisherMatrix FisherMatrix::inverse() const {
  const double det = j11 * j22 - j12 * j12;
  if (det == 0.0) throw std::domain_error("FisherMatrix: singular");
  return {j22 / det, -j12 / det, j11 / det};
}

std::array<double, 2> FisherMatrix::eigenvalues() const {
  const double mean = 0.5 * (j11 + j22);
  const double r = std::hypot(0.5 * (j11 - j22), j12);
  return {mean - r, mean + r};
}

FisherMatrix j_rest(const PhysicalConfig& cfg) {
  validate(cfg);
  const double d = 2.0 / (cfg.kappa * cfg.kappa);
  return {d, 0.0, d};
}

double kappa_eta_rel(double m_kappa) {
  if (!(m_kappa > 0.0)) throw std::domain_error("kappa_eta_rel: m kappa <= 0");
  return 0.5 * m_kappa +
         0.25 * kSqrtPi * erfcx(m_kappa) * (1.0 - 2.0 * m_kappa * m_kappa);
}

FisherMatrix j_rel(const PhysicalConfig& cfg) {
  validate(cfg);
  const double ke = kappa_eta_rel(cfg.m * cfg.kappa);
  const double d = 2.0 / (cfg.kappa * cfg.kappa) * (1.0 - 2.0 * ke * ke);
  return {d, 0.0, d};
}

FisherMatrix j_moving(const PhysicalConfig& cfg, double v) {
  validate(cfg);
  if (v == 1.0) return j_rel(cfg);
  const double ke = kappa_eta(cfg, v);
  const double d = 2.0 / (cfg.kappa * cfg.kappa) * (1.0 - 2.0 * ke * ke);
  return {d, 0.0, d};
}

FisherMatrix j_moving_oracle(const PhysicalConfig& cfg, double v) {
  validate(cfg);
  if (!(v > 0.0) || !(v < 1.0))
    throw std::domain_error("j_moving_oracle: requires 0 < v < 1");

  const double m = cfg.m, k = cfg.kappa;
  const double s = std::sqrt((1.0 - v) * (1.0 + v));

  auto quad = [&](auto&& g) {
    return integrate_2d_gaussian_weighted(g, k).value;
  };
  auto f2_down = [&](double p1, double p2) {
    return 0.5 * (1.0 + detail::cos_alpha(std::hypot(p1, p2), m, v, s));
  };
  auto f2_up = [&](double p1, double p2) {
    return 0.5 * (1.0 - detail::cos_alpha(std::hypot(p1, p2), m, v, s));
  };
  // sin(alpha/2) cos(alpha/2) / |p| = sin(alpha) / (2 |p|), smooth at p = 0.
  auto half_overlap = [&](double p1, double p2) {
    return 0.5 * detail::sin_alpha_over_p(std::hypot(p1, p2), m, v, s);
  };

  const double w_dn = quad(f2_down);
  const double w_up = quad(f2_up);
  if (std::fabs(w_dn + w_up - 1.0) > 1e-8)
    throw ConvergenceError("j_moving_oracle: branch weights do not sum to 1",
                           {w_dn + w_up, std::fabs(w_dn + w_up - 1.0), 0});

  // Second moments <d_j psi | d_k psi> per branch, unnormalized.
  double d_dn[2][2], d_up[2][2];
  double g_dn[2], g_up[2];
  std::complex<double> c[2];
  for (int j = 0; j < 2; ++j) {
    for (int kk = j; kk < 2; ++kk) {
      auto mom = [&](double p1, double p2) {
        const double pj = j == 0 ? p1 : p2;
        const double pk = kk == 0 ? p1 : p2;
        return pj * pk;
      };
      d_dn[j][kk] = d_dn[kk][j] =
          quad([&](double p1, double p2) { return mom(p1, p2) * f2_down(p1, p2); });
      d_up[j][kk] = d_up[kk][j] =
          quad([&](double p1, double p2) { return mom(p1, p2) * f2_up(p1, p2); });
    }
    g_dn[j] = quad([&](double p1, double p2) {
      return (j == 0 ? p1 : p2) * f2_down(p1, p2);
    });
    g_up[j] = quad([&](double p1, double p2) {
      return (j == 0 ? p1 : p2) * f2_up(p1, p2);
    });
    // odd integrands: these first moments must vanish
    if (std::fabs(g_dn[j]) > 1e-8 / k || std::fabs(g_up[j]) > 1e-8 / k)
      throw ConvergenceError(
          "j_moving_oracle: first-moment inner product did not vanish",
          {g_dn[j], std::fabs(g_up[j]), 0});
    // <psi_up | d_j psi_down> = B_j + i A_j with
    //   A_j = int p_j p1 sin(a)/(2|p|),  B_j = int p_j p2 sin(a)/(2|p|).
    const double a_j = quad([&](double p1, double p2) {
      return (j == 0 ? p1 : p2) * p1 * half_overlap(p1, p2);
    });
    const double b_j = quad([&](double p1, double p2) {
      return (j == 0 ? p1 : p2) * p2 * half_overlap(p1, p2);
    });
    c[j] = {b_j, a_j};
  }

  FisherMatrix jm;
  auto assemble = [&](int j, int kk) {
    double val = 4.0 * (d_dn[j][kk] + d_up[j][kk]);
    val -= 4.0 * (g_dn[j] * g_dn[kk] / w_dn + g_up[j] * g_up[kk] / w_up);
    val -= 16.0 * std::real(std::conj(c[j]) * c[kk]);
    return val;
  };
  jm.j11 = assemble(0, 0);
  jm.j12 = assemble(0, 1);
  jm.j22 = assemble(1, 1);
  return jm;
}

CrBound cr_bound(const FisherMatrix& j) {
  const FisherMatrix inv = j.inverse();
  return {inv.j11, inv.j22};
}

DeltaRatio delta_ratio(const PhysicalConfig& cfg, double v) {
  validate(cfg);
  const double ke = v == 1.0 ? kappa_eta_rel(cfg.m * cfg.kappa)
                             : kappa_eta(cfg, v);
  return {1.0 / (1.0 - 2.0 * ke * ke)};
}

double delta_upper_bound(double v) {
  if (!(v >= 0.0) || !(v <= 1.0))
    throw std::domain_error("delta_upper_bound: v must lie in [0, 1]");
  return 1.0 / (1.0 - M_PI * v * v / 8.0);
}

KappaEtaBounds kappa_eta_bounds(double m_kappa) {
  if (!(m_kappa > 0.0))
    throw std::domain_error("kappa_eta_bounds: m kappa must be positive");
  return {0.25 * kSqrtPi * erfcx(m_kappa), kappa_eta_rel(m_kappa)};
}

double weak_commutativity(const PhysicalConfig& cfg, double v) {
  validate(cfg);
  const double xiv = v == 1.0 ? xi_rel(cfg) : xi(cfg, v);
  const double ke = v == 1.0 ? kappa_eta_rel(cfg.m * cfg.kappa)
                             : kappa_eta(cfg, v);
  const double eta_v = ke / cfg.kappa;
  return 8.0 * xiv * eta_v * eta_v;
}

}  // namespace relest
