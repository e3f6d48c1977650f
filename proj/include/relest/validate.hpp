#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relest {

// Tolerances of the validation checks. Defaults are the contract; they are
// injectable so a deliberately impossible value can prove a check has teeth.
struct ValidationTolerances {
  double rest_exact = 4.4e-16;        // IEEE reciprocal rounding allowance
  double xi_rest = 1e-10;
  double xi_limit_rel = 1e-6;
  double oracle_rel = 1e-8;
  double oracle_offdiag = 1e-10;
  double sandwich_slack = 1e-9;
  double bound_small_arg = 1e-5;
  double delta_envelope_slack = 1e-9;
  double delta_rest = 1e-10;
  double delta_narrow_rel = 5e-3;
  double asymptotics_rel = 1e-2;
  double weak_comm = 1e-10;
  double spin_state_theta = 1e-12;
  double spin_state_trace = 1e-10;
  double rotation_orthogonality = 1e-12;
  double euler_reconstruction = 1e-11;
  double su2 = 1e-12;
  double angle_identity = 1e-12;
  double density_grid_rel = 1e-9;
  double normalization = 1e-6;
  double fi_rest_rel = 1e-3;
  double mc_sigmas = 4.0;
  unsigned long long mc_seed = 20240817ULL;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool informational = false;   // notes don't gate the outcome
  // Set when a failure equals a documented, mathematically forced gap (the
  // runner verifies the measured value against the predicted one); such a
  // failure is reported but does not gate the outcome.
  bool expected_failure = false;
  std::string detail;           // measured vs expected
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  // True when every check either passed, is informational, or failed in
  // exactly the documented expected way.
  bool all_passed() const;
};

// Runs every validation check; one line per check goes to `progress` when it
// is non-null. Heavy checks use the parallel kernels. A non-empty
// `name_filter` restricts the run to checks whose name contains it.
ValidationReport run_validation(const ValidationTolerances& tol = {},
                                std::ostream* progress = nullptr,
                                const std::string& name_filter = "");

}  // namespace relest
