// Timing comparison of the serial reference kernels against the OpenMP ones.
// The implementations are arithmetic-identical, so outputs must match
// bitwise; this binary reports timings, speedups, and that equality.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "relest/dft.hpp"
#include "relest/figures.hpp"
#include "relest/mc.hpp"
#include "relest/state.hpp"
#include "relest/wavefunction.hpp"

using namespace relest;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-28s %9.3f s %9.3f s %6.2fx  %s\n", name, serial_s, parallel_s,
              serial_s / parallel_s, equal ? "bitwise equal" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-28s %11s %11s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const PhysicalConfig cfg{1.0, 0.1};
    WaveGrid grid = default_wave_grid(cfg);
    grid.n_x = 384;
    auto run = [&](Exec exec) {
      const auto start = clock_type::now();
      const double norm = normalization_2d(cfg, 0.7, SpinBranch::up, grid, exec);
      return std::pair{seconds_since(start), norm};
    };
    const auto [ts, vs] = run(Exec::serial);
    const auto [tp, vp] = run(Exec::parallel);
    report("2d transform + reduction", ts, tp, vs == vp);
  }

  {
    auto integrand = [](double p1, double p2) {
      return p1 * p1 * std::exp(0.1 * std::sin(p2));
    };
    auto run = [&](Exec exec) {
      const auto start = clock_type::now();
      const McResult r = mc_integrate(integrand, 0.7, 4000000, 99, exec);
      return std::pair{seconds_since(start), r.value};
    };
    const auto [ts, vs] = run(Exec::serial);
    const auto [tp, vp] = run(Exec::parallel);
    report("monte carlo (4e6 samples)", ts, tp, vs == vp);
  }

  {
    FigureOptions opt;
    opt.kappa_list = {0.1, 1.0};
    opt.curve_points = 48;
    auto run = [&](Exec exec) {
      opt.exec = exec;
      const auto start = clock_type::now();
      const auto set = fig4_series(opt);
      double checksum = 0.0;
      for (const auto& s : set)
        for (const auto& [x, y] : s.points) checksum += y;
      return std::pair{seconds_since(start), checksum};
    };
    const auto [ts, vs] = run(Exec::serial);
    const auto [tp, vp] = run(Exec::parallel);
    report("loss-ratio sweep (2x48)", ts, tp, vs == vp);
  }

  return 0;
}
