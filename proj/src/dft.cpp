#include "relest/dft.hpp"

#include <cmath>
#include <stdexcept>

namespace relest {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;

// phases[b * n_p + j] = e^{i p_j x_b}
std::vector<std::complex<double>> phase_table(const UniformGrid& pgrid,
                                              const std::vector<double>& x,
                                              Exec exec) {
  std::vector<std::complex<double>> table(x.size() *
                                          static_cast<std::size_t>(pgrid.n));
  for_each_index(x.size(), exec, [&](std::size_t b) {
    for (int j = 0; j < pgrid.n; ++j) {
      const double arg = pgrid.point(j) * x[b];
      table[b * pgrid.n + j] = {std::cos(arg), std::sin(arg)};
    }
  });
  return table;
}

}  // namespace

std::vector<std::complex<double>> transform_slice(
    const ComplexField& amp, const UniformGrid& pgrid,
    const std::vector<double>& x, Exec exec) {
  const std::size_t n = static_cast<std::size_t>(pgrid.n);
  if (amp.size() != n * n)
    throw std::invalid_argument("transform_slice: field/grid size mismatch");

  // Collapse the p2 direction first; at x2 = 0 it is a plain sum.
  std::vector<std::complex<double>> row_sums(n);
  for_each_index(n, exec, [&](std::size_t i) {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += amp[i * n + j];
    row_sums[i] = s;
  });

  const double weight = pgrid.step() * pgrid.step() / kTwoPi;
  std::vector<std::complex<double>> out(x.size());
  for_each_index(x.size(), exec, [&](std::size_t k) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double arg = pgrid.point(static_cast<int>(i)) * x[k];
      s += row_sums[i] * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    out[k] = weight * s;
  });
  return out;
}

ComplexField transform_grid(const ComplexField& amp, const UniformGrid& pgrid,
                            const UniformGrid& xgrid, Exec exec) {
  const std::size_t n_p = static_cast<std::size_t>(pgrid.n);
  const std::size_t n_x = static_cast<std::size_t>(xgrid.n);
  if (amp.size() != n_p * n_p)
    throw std::invalid_argument("transform_grid: field/grid size mismatch");

  std::vector<double> x(n_x);
  for (std::size_t b = 0; b < n_x; ++b) x[b] = xgrid.point(static_cast<int>(b));
  const auto phases = phase_table(pgrid, x, exec);  // [b * n_p + j]

  // Stage 1: phi(b, i) = sum_j a(i, j) e^{i p_j x_b}
  ComplexField phi(n_x * n_p);
  for_each_index(n_x, exec, [&](std::size_t b) {
    const std::complex<double>* ph = &phases[b * n_p];
    for (std::size_t i = 0; i < n_p; ++i) {
      const std::complex<double>* row = &amp[i * n_p];
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < n_p; ++j) s += row[j] * ph[j];
      phi[b * n_p + i] = s;
    }
  });

  // Stage 2: psi(a, b) = (dp^2/2pi) sum_i phi(b, i) e^{i p_i x_a}
  const double weight = pgrid.step() * pgrid.step() / kTwoPi;
  ComplexField out(n_x * n_x);
  for_each_index(n_x, exec, [&](std::size_t a) {
    const std::complex<double>* ph = &phases[a * n_p];
    for (std::size_t b = 0; b < n_x; ++b) {
      const std::complex<double>* row = &phi[b * n_p];
      std::complex<double> s = 0.0;
      for (std::size_t i = 0; i < n_p; ++i) s += row[i] * ph[i];
      out[a * n_x + b] = weight * s;
    }
  });
  return out;
}

}  // namespace relest
