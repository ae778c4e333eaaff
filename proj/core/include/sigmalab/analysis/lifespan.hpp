#pragma once

#include <vector>

#include "sigmalab/analysis/fit.hpp"
#include "sigmalab/analysis/report.hpp"
#include "sigmalab/model/params.hpp"
#include "sigmalab/semilinear/integrate.hpp"

namespace sigmalab::analysis {

/// Grid and data for the blow-up runs. Data: (u0, u1) = (v0, v1) =
/// eps * (0, e^{-|x|^2 / width^2}), a positive bump in the velocities.
struct LifespanSetup {
  int points = 1024;
  double half_length = 64.0;
  double width = 1.0;
  double dt = 0.05;
  double horizon = 1e5;
  double threshold_factor = 1e6;
  semilinear::CouplingKind kind = semilinear::CouplingKind::UU;
  double rel_tolerance = 0.25;
};

struct LifespanCurve {
  std::vector<double> eps_values;
  std::vector<double> t_detect;
  double fitted_slope = 0.0;
  double predicted_slope = 0.0;
  double rel_error = 0.0;
  bool monotone = true;
  bool pass = false;
};

/// eps values, 5 per decade by default, log-spaced over [lo, hi].
std::vector<double> eps_decade(double lo, double hi, int count = 5);

/// Requires the blow-up condition to hold strictly. Throws
/// NoBlowupObserved if a run reaches the horizon.
LifespanCurve lifespan_sweep(const model::ModelParams& params, const std::vector<double>& eps,
                             const LifespanSetup& setup, unsigned workers = 1);

/// Initial state for one eps.
semilinear::SystemState bump_state(const LifespanSetup& setup, int n, double eps);

CaseResult to_case_result(const std::string& id, const LifespanCurve& c, double rel_tolerance);

}  // namespace sigmalab::analysis
