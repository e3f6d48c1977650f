#pragma once

namespace relest {

// Scaled complementary error function, exp(x^2) * erfc(x), for x >= 0.
// Stays O(1/x) as x grows, so expressions of the form exp(k^2) erfc(k) can be
// evaluated far beyond k ~ 27 where the unscaled product overflows.
// Relative accuracy <= 1e-12 on [0, 1e4] and beyond.
double erfcx(double x);

// Complementary error function, (2/sqrt(pi)) * integral_x^inf exp(-t^2) dt.
// Derived from erfcx for x >= 0; for large x the result underflows gracefully
// together with exp(-x^2).
double erfc(double x);

}  // namespace relest
