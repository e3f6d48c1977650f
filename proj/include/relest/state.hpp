#pragma once

#include <array>
#include <complex>

#include "relest/quadrature.hpp"
#include "relest/wigner.hpp"

namespace relest {

// Values of the two spin components of the boosted momentum-space amplitude
// at one momentum point. |down|^2 + |up|^2 equals the squared wavepacket
// density there for every boost: the rotation is norm-preserving pointwise.
struct SpinAmplitude {
  std::complex<double> down;
  std::complex<double> up;
};

// Mixture weights of the two spin branches. xi = 1 iff v = 0.
struct SpinWeights {
  double xi = 1.0;
  double p_down() const { return 0.5 * (1.0 + xi); }
  double p_up() const { return 0.5 * (1.0 - xi); }
};

struct ScalarIntegrals {
  double eta = 0.0;  // momentum units, >= 0; zero iff v = 0
  double nu = 0.0;   // momentum^2 units; 1/(2 kappa^2) at v = 0
};

// 2x2 Hermitian, trace-one reduced state of the spin alone.
struct SpinDensityMatrix {
  std::array<std::array<std::complex<double>, 2>, 2> m{};
};

// Ground-state Gaussian momentum amplitude, kappa^{1/2} pi^{-1/4} e^{-k^2 p^2/2}.
double gaussian_amp(double p, const PhysicalConfig& cfg);

// Non-Gaussian factors of the two amplitude components at theta = 0:
// down = cos(alpha/2), up = -e^{i phi} sin(alpha/2).
SpinAmplitude spin_factors(const Momentum2& p, const Boost& b,
                           const PhysicalConfig& cfg);

// Full amplitude including the Gaussian envelope and the shift phases.
SpinAmplitude amplitude(const std::array<double, 2>& theta, const Momentum2& p,
                        const Boost& b, const PhysicalConfig& cfg);

// Spin-down weight indicator: xi = <cos alpha> over the squared wavepacket
// density. 1 at v = 0; at v = 1 the limit integrand m / sqrt(m^2 + p^2) is
// used directly.
double xi(const PhysicalConfig& cfg, double v,
          const QuadratureSpec& spec = {});

// Closed-form minimum of xi over v, attained as v -> 1:
// sqrt(pi) * (m kappa) * erfcx(m kappa).
double xi_rel(const PhysicalConfig& cfg);

// Mixture weights at a given velocity.
SpinWeights spin_weights(const PhysicalConfig& cfg, double v,
                         const QuadratureSpec& spec = {});

// (1 - xi)/2, the population of the boost-induced spin-up branch.
double spin_up_probability(const PhysicalConfig& cfg, double v);

// Dimensionless kappa * eta. Two independent routes are evaluated on every
// call -- a radial 1D quadrature and a Cartesian 2D quadrature -- and must
// agree to 1e-9; a mismatch raises ConvergenceError.
double kappa_eta(const PhysicalConfig& cfg, double v,
                 const QuadratureSpec& spec = {});

// Overlap integral eta = (kappa eta) / kappa, in momentum units, >= 0.
double eta(const PhysicalConfig& cfg, double v,
           const QuadratureSpec& spec = {});

// cos(alpha)-weighted second moment; drops out of the Fisher matrix but is
// needed by the general-mixture route.
double nu(const PhysicalConfig& cfg, double v,
          const QuadratureSpec& spec = {});

// Both overlap integrals in one call.
ScalarIntegrals scalar_integrals(const PhysicalConfig& cfg, double v,
                                 const QuadratureSpec& spec = {});

// Reduced state after tracing out the momentum. Entries are theta-independent
// because the shift phases cancel pointwise; the off-diagonals also vanish by
// the azimuthal average and are evaluated by quadrature as a cross-check.
SpinDensityMatrix spin_reduced_state(const std::array<double, 2>& theta,
                                     const PhysicalConfig& cfg, double v);

namespace detail {
// Smooth closed forms used by the integrands, valid for all v in [0, 1]
// (s = sqrt(1 - v^2)):
//   cos(alpha)     = (p0 s + m) / (p0 + m s)
//   sin(alpha)/|p| = -v / (p0 + m s)
double cos_alpha(double p_mag, double m, double v, double s);
double sin_alpha_over_p(double p_mag, double m, double v, double s);
}  // namespace detail

}  // namespace relest
