#include "relest/special.hpp"

#include <cmath>
#include <stdexcept>

namespace relest {

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869480794515607726;

// Stieltjes continued fraction
//   erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz scheme. Converges quickly for x >= 2.
double erfcx_continued_fraction(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return kInvSqrtPi / f;
}

}  // namespace

double erfcx(double x) {
  if (!std::isfinite(x)) throw std::domain_error("erfcx: non-finite argument");
  if (x < 0.0) throw std::domain_error("erfcx: negative argument not supported");
  if (x < 2.0) return std::exp(x * x) * std::erfc(x);
  return erfcx_continued_fraction(x);
}

double erfc(double x) {
  if (!std::isfinite(x)) throw std::domain_error("erfc: non-finite argument");
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 2.0) return std::erfc(x);
  return erfcx_continued_fraction(x) * std::exp(-x * x);
}

}  // namespace relest
