#pragma once

#include <array>

#include "relest/state.hpp"
#include "relest/wigner.hpp"

namespace relest {

// Symmetric 2x2 Fisher information matrix for the shift parameters
// (theta1, theta2); units 1/length^2. Diagonal for this model.
struct FisherMatrix {
  double j11 = 0.0;
  double j12 = 0.0;
  double j22 = 0.0;

  FisherMatrix inverse() const;
  // Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;
};

// Diagonal of the inverse Fisher matrix: the variance floor per parameter.
struct CrBound {
  double var_theta1 = 0.0;
  double var_theta2 = 0.0;
};

// Moving-frame to rest-frame ratio of the variance bound; >= 1, equal to 1
// only at v = 0.
struct DeltaRatio {
  double value = 1.0;
};

// Closed-form bounds on (kappa eta)/v as functions of k' = m kappa. `lower`
// and `upper` name the sandwich role:
//   lower = (sqrt(pi)/4) erfcx(k')            -- the v -> 0 integrand, whose
//                                                denominator sqrt(1+p'^2)+1
//                                                is the larger one;
//   upper = k'/2 + (sqrt(pi)/4) erfcx(k') (1 - 2 k'^2)
//                                             -- the v -> 1 integrand, with
//                                                denominator sqrt(1+p'^2).
// Both decrease monotonically in k' from the common limit sqrt(pi)/4.
struct KappaEtaBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Rest frame: (2/kappa^2) I.
FisherMatrix j_rest(const PhysicalConfig& cfg);

// Moving frame: (2/kappa^2)(1 - 2 (kappa eta)^2) I. At v = 1 the closed-form
// relativistic limit is used.
FisherMatrix j_moving(const PhysicalConfig& cfg, double v);

// Same matrix assembled from numerically evaluated inner products of the
// rank-2 mixture (including the nu-dependent terms and the full off-diagonal
// structure). Independent of the closed-form route; 0 < v < 1.
FisherMatrix j_moving_oracle(const PhysicalConfig& cfg, double v);

// Relativistic limit, finite for every (m, kappa):
// (2/kappa^2) {1 - 2 [k'/2 + (sqrt(pi)/4) erfcx(k') (1 - 2 k'^2)]^2} I.
FisherMatrix j_rel(const PhysicalConfig& cfg);

// kappa * eta at v = 1 in closed form (equals kappa_eta_bounds(..).upper).
double kappa_eta_rel(double m_kappa);

CrBound cr_bound(const FisherMatrix& j);

// Information-loss ratio 1 / (1 - 2 (kappa eta)^2).
DeltaRatio delta_ratio(const PhysicalConfig& cfg, double v);

// Small-kappa envelope 1 / (1 - pi v^2 / 8) of the loss ratio.
double delta_upper_bound(double v);

KappaEtaBounds kappa_eta_bounds(double m_kappa);

// Magnitude of the weak-commutativity trace scalar, 8 xi eta^2. Zero iff
// v = 0; nonzero values mean the variance bound is not attainable even
// asymptotically.
double weak_commutativity(const PhysicalConfig& cfg, double v);

}  // namespace relest
