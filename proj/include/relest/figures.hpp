#pragma once

#include <vector>

#include <json.hpp>

#include "relest/quadrature.hpp"
#include "relest/series.hpp"
#include "relest/wavefunction.hpp"

namespace relest {

// Knobs shared by the curve builders. Empty lists select the per-figure
// defaults. Grid points are computed concurrently; series assembly follows
// the input order, so identical options give identical output.
struct FigureOptions {
  double m = 1.0;
  double kappa = 0.1;                // coordinate-space figures
  std::vector<double> v_list;        // velocities (figures 1, 2, 3, 5)
  std::vector<double> kappa_list;    // spreads (figure 4)
  int curve_points = 200;            // samples per sweep curve
  int grid_points = 512;             // coordinate samples (figures 2, 3)
  double x_max = 0.0;                // 0 -> 5 * kappa
  QuadratureSpec quad;               // tolerance overrides
  Exec exec = Exec::parallel;
};

// Spin-up population (1 - xi)/2 against m*kappa, one series per velocity.
std::vector<CurveSeries> fig1_series(const FigureOptions& opt);

// Up-branch coordinate density (raw convention), one series per velocity.
std::vector<CurveSeries> fig2_series(const FigureOptions& opt);

// x1 derivative of the up-branch density, one series per velocity.
std::vector<CurveSeries> fig3_series(const FigureOptions& opt);

// Information-loss ratio against v, one series per kappa.
std::vector<CurveSeries> fig4_series(const FigureOptions& opt);

// |kappa eta|/v against m*kappa per velocity, plus the two closed-form
// bound curves.
std::vector<CurveSeries> fig5_series(const FigureOptions& opt);

struct ComputeOptions {
  double m = 1.0;
  double kappa = 1.0;
  double v = 0.0;
  bool classical_fi = false;
  int grid_points = 0;  // 0 -> default wave grid
  double x_max = 0.0;   // 0 -> default wave grid
  QuadratureSpec quad;
};

// Every scalar and matrix quantity at one parameter point, as a versioned
// JSON record. v = 1 values come from the closed-form limit paths.
nlohmann::json compute_record(const ComputeOptions& opt);

}  // namespace relest
