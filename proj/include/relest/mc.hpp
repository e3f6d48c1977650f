#pragma once

#include <cstdint>

#include "relest/parallel.hpp"
#include "relest/quadrature.hpp"

namespace relest {

struct McResult {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Monte-Carlo estimate of integral g(p1,p2) * (kappa^2/pi) exp(-kappa^2 |p|^2)
// over R^2 by importance sampling from the normalized Gaussian weight.
// Bit-reproducible for a given (seed, n_samples): sampling is split into a
// fixed number of independently seeded streams whose partial sums are combined
// in stream order, so the result does not depend on the execution policy or
// thread count.
McResult mc_integrate(const Integrand2D& g, double kappa,
                      std::int64_t n_samples, std::uint64_t seed,
                      Exec exec = Exec::parallel);

}  // namespace relest
