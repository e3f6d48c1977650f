#include "relest/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace relest {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Segment {
  double a, b;
  double value;
  double error;
  double resabs;  // integral of |f| over the segment, for the rounding floor
};

bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }

Segment evaluate_segment(const Integrand1D& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  const double fc = f(center);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::fabs(fc);
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double lo = f(center - half * kXgk[j]);
    const double hi = f(center + half * kXgk[j]);
    fv[2 * j] = lo;
    fv[2 * j + 1] = hi;
    resk += kWgk[j] * (lo + hi);
    resabs += kWgk[j] * (std::fabs(lo) + std::fabs(hi));
    if (j % 2 == 1) resg += kWg[j / 2] * (lo + hi);
  }

  const double mean = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] *
              (std::fabs(fv[2 * j] - mean) + std::fabs(fv[2 * j + 1] - mean));
  resasc *= std::fabs(half);

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * 2.22e-16 * resabs * std::fabs(half));
  return {a, b, resk * half, err, resabs * std::fabs(half)};
}

IntegralResult adaptive(const Integrand1D& f, double a, double b,
                        const QuadratureSpec& spec, int initial_segments) {
  if (!(spec.rel_tol > 0.0) || spec.abs_tol < 0.0 || spec.max_subdivisions < 1)
    throw std::invalid_argument("quadrature: invalid tolerance spec");

  std::priority_queue<Segment> queue;
  double total = 0.0, total_err = 0.0, total_resabs = 0.0;
  std::int64_t evals = 0;

  const double width = (b - a) / initial_segments;
  for (int i = 0; i < initial_segments; ++i) {
    Segment s = evaluate_segment(f, a + i * width, a + (i + 1) * width);
    evals += 15;
    total += s.value;
    total_err += s.error;
    total_resabs += s.resabs;
    queue.push(s);
  }

  // Subdividing cannot push the estimate below the rounding floor of the
  // integrand itself; accept a noise-limited result instead of refining
  // forever (this is how odd integrands come back as ~0 with a tiny bound).
  auto converged = [&] {
    if (total_err <= std::max(spec.rel_tol * std::fabs(total), spec.abs_tol))
      return true;
    return total_err <= 500.0 * 2.22e-16 * total_resabs;
  };

  int splits = 0;
  while (!converged()) {
    if (splits >= spec.max_subdivisions)
      throw ConvergenceError("quadrature: subdivision budget exhausted",
                             {total, total_err, evals});
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("quadrature: interval too small to split",
                             {total, total_err, evals});
    Segment left = evaluate_segment(f, worst.a, mid);
    Segment right = evaluate_segment(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  return {total, total_err, evals};
}

}  // namespace

IntegralResult integrate_finite(const Integrand1D& f, double a, double b,
                                const QuadratureSpec& spec) {
  return adaptive(f, a, b, spec, 4);
}

IntegralResult integrate_semi_infinite(const Integrand1D& f,
                                       const QuadratureSpec& spec,
                                       double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("integrate_semi_infinite: bad scale");
  auto mapped = [&f, scale](double t) {
    const double u = 1.0 - t;
    const double x = scale * t / u;
    const double v = f(x) * scale / (u * u);
    return std::isfinite(v) ? v : 0.0;  // far tail underflow
  };
  return adaptive(mapped, 0.0, 1.0, spec, 8);
}

IntegralResult integrate_2d_gaussian_weighted(const Integrand2D& g,
                                              double kappa,
                                              const QuadratureSpec& spec) {
  if (!(kappa > 0.0)) throw std::invalid_argument("2d quadrature: kappa <= 0");

  const double norm = kappa / std::sqrt(M_PI);  // one axis of the weight
  const double scale = 1.0 / kappa;

  // Two-sided map for one axis: p = scale * t / (1 - t^2), t in (-1, 1).
  auto axis_integral = [&](const Integrand1D& h, const QuadratureSpec& s,
                           std::int64_t* evals) {
    auto mapped = [&h, scale](double t) {
      const double u = 1.0 - t * t;
      const double p = scale * t / u;
      const double jac = scale * (1.0 + t * t) / (u * u);
      const double v = h(p) * jac;
      return std::isfinite(v) ? v : 0.0;
    };
    IntegralResult r = adaptive(mapped, -1.0, 1.0, s, 8);
    *evals += r.evaluations;
    return r;
  };

  QuadratureSpec inner_spec = spec;
  inner_spec.rel_tol = spec.rel_tol / 8.0;
  inner_spec.abs_tol = spec.abs_tol / 8.0;

  std::int64_t evals = 0;
  double worst_inner_err = 0.0;

  auto outer_integrand = [&](double p1) {
    const double w1 = norm * std::exp(-kappa * kappa * p1 * p1);
    if (w1 == 0.0) return 0.0;
    auto inner = [&](double p2) {
      const double w2 = norm * std::exp(-kappa * kappa * p2 * p2);
      return w2 == 0.0 ? 0.0 : w2 * g(p1, p2);
    };
    IntegralResult r = axis_integral(inner, inner_spec, &evals);
    worst_inner_err = std::max(worst_inner_err, r.error_estimate);
    return w1 * r.value;
  };

  IntegralResult outer = axis_integral(outer_integrand, spec, &evals);
  outer.evaluations = evals;
  outer.error_estimate += worst_inner_err;
  return outer;
}

}  // namespace relest
