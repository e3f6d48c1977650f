#include "relest/mc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace relest {

namespace {

constexpr int kStreams = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1]; the mt19937_64 stream is specified bit-exactly by the
// standard, and the mapping below avoids the implementation-defined
// std::normal_distribution.
double uniform_01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

McResult mc_integrate(const Integrand2D& g, double kappa,
                      std::int64_t n_samples, std::uint64_t seed, Exec exec) {
  if (!(kappa > 0.0)) throw std::invalid_argument("mc_integrate: kappa <= 0");
  if (n_samples < 1000)
    throw std::invalid_argument("mc_integrate: need at least 1000 samples");

  const double sigma = 1.0 / (kappa * std::sqrt(2.0));
  std::vector<double> sums(kStreams, 0.0), sq_sums(kStreams, 0.0);

  for_each_index(kStreams, exec, [&](std::size_t c) {
    const std::int64_t base = n_samples / kStreams;
    const std::int64_t n_c =
        base + (static_cast<std::int64_t>(c) < n_samples % kStreams ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed ^ (0x51ed2700ULL + c)));
    double s = 0.0, s2 = 0.0;
    for (std::int64_t i = 0; i < n_c; i += 2) {
      // Box-Muller pair
      const double u1 = uniform_01(rng);
      const double u2 = uniform_01(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double z0 = r * std::cos(2.0 * M_PI * u2);
      const double z1 = r * std::sin(2.0 * M_PI * u2);
      {
        const double v = g(sigma * z0, sigma * z1);
        s += v;
        s2 += v * v;
      }
      if (i + 1 < n_c) {
        const double u3 = uniform_01(rng);
        const double u4 = uniform_01(rng);
        const double rr = std::sqrt(-2.0 * std::log(u3));
        const double v = g(sigma * rr * std::cos(2.0 * M_PI * u4),
                           sigma * rr * std::sin(2.0 * M_PI * u4));
        s += v;
        s2 += v * v;
      }
    }
    sums[c] = s;
    sq_sums[c] = s2;
  });

  double sum = 0.0, sq = 0.0;
  for (int c = 0; c < kStreams; ++c) {
    sum += sums[c];
    sq += sq_sums[c];
  }
  const double n = static_cast<double>(n_samples);
  const double mean = sum / n;
  double var = (sq - n * mean * mean) / (n - 1.0);
  if (var < 0.0) var = 0.0;
  return {mean, std::sqrt(var / n), n_samples, seed};
}

}  // namespace relest
