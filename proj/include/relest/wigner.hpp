#pragma once

#include <array>
#include <complex>

namespace relest {

// Particle and wavepacket parameters in natural units (hbar = c = 1).
// Every dimensionless result depends on (m * kappa, v) only.
struct PhysicalConfig {
  double m = 1.0;      // mass, > 0
  double kappa = 1.0;  // momentum-space spread parameter, > 0
};

void validate(const PhysicalConfig& cfg);

// Boost along the z axis with velocity v in [0, 1]. v == 1 is a distinguished
// marker with no finite rapidity; quantities at the relativistic limit are
// computed from their own limit forms, never from this struct.
struct Boost {
  double v = 0.0;
  double cosh_chi = 1.0;
  double sinh_chi = 0.0;
  bool relativistic_limit = false;
};

// In-plane momentum; the z component is identically zero in this model.
struct Momentum2 {
  double p1 = 0.0;
  double p2 = 0.0;
  double magnitude() const;
};

// Rotation angles induced by the boost at a given transverse momentum.
// cos_alpha in (0, 1], sin_alpha in (-1, 0]; phi is the momentum azimuth,
// set to 0 at |p| = 0 where it is unobservable.
struct WignerAngles {
  double cos_alpha = 1.0;
  double sin_alpha = 0.0;
  double phi = 0.0;
};

struct Rotation3 {
  std::array<std::array<double, 3>, 3> m{};
};

struct SpinHalfRep {
  std::array<std::array<std::complex<double>, 2>, 2> m{};
};

Boost boost_from_velocity(double v);

// Spatial part of the boosted four-momentum: (p1, p2, -p0 sinh chi).
std::array<double, 3> boost_momentum(const Momentum2& p, const Boost& b,
                                     const PhysicalConfig& cfg);

WignerAngles wigner_angles(const Momentum2& p, const Boost& b,
                           const PhysicalConfig& cfg);

// Spatial 3x3 block of the momentum-dependent rotation, assembled from the
// closed-form angles. Requires |p| > 0; use wigner_angles at the origin.
Rotation3 wigner_matrix(const Momentum2& p, const Boost& b,
                        const PhysicalConfig& cfg);

// Same rotation obtained the long way round, as the composition of standard
// boosts: inverse(L(boosted p)) * Lambda * L(p). Slower and less accurate;
// kept as an independent cross-check of the closed forms.
Rotation3 wigner_matrix_composed(const Momentum2& p, const Boost& b,
                                 const PhysicalConfig& cfg);

// Two-angle Euler form R3(phi) R2(alpha) R3(-phi) that reproduces
// wigner_matrix entrywise.
Rotation3 euler_reconstruct(const WignerAngles& a);

// 2x2 spin-1/2 representation:
//   [ cos(a/2)            -e^{+i phi} sin(a/2) ]
//   [ e^{-i phi} sin(a/2)  cos(a/2)            ]
SpinHalfRep spin_half_rep(const WignerAngles& a);

}  // namespace relest
