#pragma once

#include <complex>
#include <vector>

#include "relest/parallel.hpp"

namespace relest {

// Midpoint grid: n samples at -extent + (i + 1/2) * step, symmetric about 0.
struct UniformGrid {
  double extent = 1.0;
  int n = 0;
  double step() const { return 2.0 * extent / n; }
  double point(int i) const { return -extent + (i + 0.5) * step(); }
};

// Row-major n x n field over a momentum grid: a[i * n + j] = f(p_i, p_j).
using ComplexField = std::vector<std::complex<double>>;

// psi(x) = (dp^2 / 2pi) sum_{ij} a(i,j) e^{i p_i x}  -- the x2 = 0 slice of
// the separable transform (the inner p2 sum has unit phase there).
std::vector<std::complex<double>> transform_slice(
    const ComplexField& amp, const UniformGrid& pgrid,
    const std::vector<double>& x, Exec exec = Exec::parallel);

// Full transform onto xgrid x xgrid (row-major out[a * n_x + b] = psi(x_a, x_b)):
// psi(x, y) = (dp^2 / 2pi) sum_{ij} a(i,j) e^{i (p_i x + p_j y)}.
ComplexField transform_grid(const ComplexField& amp, const UniformGrid& pgrid,
                            const UniformGrid& xgrid,
                            Exec exec = Exec::parallel);

}  // namespace relest
