#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace relest {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 400;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// Raised when the requested tolerance cannot be certified within the
// subdivision budget; carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, IntegralResult best)
      : std::runtime_error(what), best_(best) {}
  const IntegralResult& best() const { return best_; }

 private:
  IntegralResult best_;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Adaptive Gauss-Kronrod (7,15) integral of f over [a, b].
IntegralResult integrate_finite(const Integrand1D& f, double a, double b,
                                const QuadratureSpec& spec = {});

// Integral of f over [0, inf). The range is mapped to [0, 1) through
// x = scale * t / (1 - t); pass a scale near the integrand's decay length so
// the initial subdivision already resolves the bulk of the mass.
IntegralResult integrate_semi_infinite(const Integrand1D& f,
                                       const QuadratureSpec& spec = {},
                                       double scale = 1.0);

// Integral of g(p1, p2) * (kappa^2/pi) exp(-kappa^2 (p1^2 + p2^2)) over R^2,
// i.e. g weighted by the squared momentum-space wavepacket density, which is
// normalized to 1. Evaluated as an iterated adaptive integral; the error
// estimate accounts for both directions.
IntegralResult integrate_2d_gaussian_weighted(const Integrand2D& g,
                                              double kappa,
                                              const QuadratureSpec& spec = {});

}  // namespace relest
