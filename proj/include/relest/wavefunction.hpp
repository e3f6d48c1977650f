#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "relest/dft.hpp"
#include "relest/parallel.hpp"
#include "relest/wigner.hpp"

namespace relest {

// Normalization of coordinate-space densities.
//   normalized: the 2D (x1, x2) density integrates to 1.
//   raw: boost-scaled absolute convention; pointwise cosh(chi)/(4 pi) times
//        the normalized density, so it diverges toward v -> 1 like the
//        observed amplitudes do.
enum class DensityMode { raw, normalized };

enum class SpinBranch { down, up };

// Momentum window [-p_max, p_max]^2 with n_p midpoints per axis, coordinate
// window [-x_max, x_max] with n_x samples per axis.
struct WaveGrid {
  double x_max = 1.0;
  int n_x = 512;
  double p_max = 8.0;
  int n_p = 512;
};

// p_max = 8/kappa (weight tail below 1e-27), x_max = 12 kappa.
WaveGrid default_wave_grid(const PhysicalConfig& cfg);

class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Slice samples along x1 at x2 = 0. The sample count is rounded up to an odd
// number so the origin is always on the grid.
struct DensityProfile {
  std::vector<double> grid;    // x1 samples
  std::vector<double> values;  // density samples, >= 0
  DensityMode mode = DensityMode::normalized;
};

// Signed samples (used for the density derivative).
struct SampledCurve {
  std::vector<double> grid;
  std::vector<double> values;
};

struct ClassicalFisher {
  double fi_theta1 = 0.0;
  WaveGrid grid_spec;
  double excluded_mass = 0.0;  // density mass below the quotient floor
};

// |psi_up(x1, 0)|^2 of the boost-induced spin-up branch; odd amplitude, so
// the density is even with a zero at the origin. Requires 0 < v < 1.
DensityProfile psi_up_profile(const PhysicalConfig& cfg, double v,
                              const WaveGrid& grid, DensityMode mode,
                              Exec exec = Exec::parallel);

// |psi_down(x1, 0)|^2; even amplitude peaked at the origin. 0 <= v < 1.
DensityProfile psi_down_profile(const PhysicalConfig& cfg, double v,
                                const WaveGrid& grid, DensityMode mode,
                                Exec exec = Exec::parallel);

// d/dx1 of the up density, differentiated under the integral (the integrand
// is multiplied by the momentum component, never finite-differenced).
SampledCurve density_derivative_profile(const PhysicalConfig& cfg, double v,
                                        const WaveGrid& grid,
                                        DensityMode mode = DensityMode::raw,
                                        Exec exec = Exec::parallel);

// Positive abscissa of the up-density maximum, refined by local parabolic
// interpolation on the default grid.
double peak_location(const PhysicalConfig& cfg, double v);

// Total 2D mass of the normalized branch density; 1 up to grid error.
double normalization_2d(const PhysicalConfig& cfg, double v, SpinBranch branch,
                        const WaveGrid& grid, Exec exec = Exec::parallel);

// Classical Fisher information of the 2D position measurement at theta = 0.
// The shift structure makes FI = int (d rho)^2 / rho with the derivative
// along `axis`; rho is the xi-weighted mixture of the two branch densities.
// The two axes agree by symmetry (axis 1 exists to verify this). 0 <= v < 1.
ClassicalFisher classical_fisher_position(const PhysicalConfig& cfg, double v,
                                          const WaveGrid& grid, int axis = 0,
                                          Exec exec = Exec::parallel);

}  // namespace relest
