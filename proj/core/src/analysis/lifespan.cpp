#include "sigmalab/analysis/lifespan.hpp"

#include <cmath>
#include <sstream>

#include "sigmalab/analysis/parallel.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/model/regions.hpp"

namespace sigmalab::analysis {

std::vector<double> eps_decade(double lo, double hi, int count) {
  return geometric_samples(lo, hi, count);
}

semilinear::SystemState bump_state(const LifespanSetup& setup, int n, double eps) {
  const auto grid = spectral::make_grid(n, setup.points, setup.half_length);
  const double w2 = setup.width * setup.width;
  auto bump = spectral::SpectralField::from_function(grid, [&](const double* x) {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += x[d] * x[d];
    return eps * std::exp(-r2 / w2);
  });
  semilinear::SystemState s(grid);
  s.ut = bump;
  s.vt = bump;
  return s;
}

LifespanCurve lifespan_sweep(const model::ModelParams& params, const std::vector<double>& eps,
                             const LifespanSetup& setup, unsigned workers) {
  if (eps.size() < 5) throw InsufficientData("lifespan sweep needs >= 5 eps values");
  const auto verdict = model::blowup_condition(params);
  if (!verdict.admissible) {
    throw DomainError("blow-up condition fails: " + verdict.violated.front().describe());
  }
  LifespanCurve curve;
  curve.predicted_slope = model::lifespan_exponent(params).to_double();
  curve.eps_values = eps;
  curve.t_detect.assign(eps.size(), 0.0);

  const auto phys = model::to_physical(params);
  semilinear::IntegrateOptions opt;
  opt.horizon = setup.horizon;
  opt.dt = setup.dt;
  opt.threshold_factor = setup.threshold_factor;
  opt.samples_per_decade = 2;
  parallel_for(eps.size(), workers, [&](std::size_t i) {
    const auto init = bump_state(setup, params.n, eps[i]);
    const auto res = semilinear::integrate(init, setup.kind, phys, opt);
    if (!res.blowup.blew_up) {
      std::ostringstream msg;
      msg << "no blow-up up to t = " << setup.horizon << " for eps = " << eps[i];
      throw NoBlowupObserved(msg.str());
    }
    curve.t_detect[i] = *res.blowup.t_detect;
  });

  int inversions = 0;
  for (std::size_t i = 1; i < eps.size(); ++i) {
    if (eps[i] > eps[i - 1] && !(curve.t_detect[i] < curve.t_detect[i - 1])) ++inversions;
  }
  curve.monotone = inversions <= 1;
  curve.fitted_slope = fit_loglog(curve.eps_values, curve.t_detect).slope;
  curve.rel_error = std::abs(curve.fitted_slope - curve.predicted_slope) /
                    std::abs(curve.predicted_slope);
  curve.pass = curve.monotone && curve.rel_error <= setup.rel_tolerance;
  return curve;
}

CaseResult to_case_result(const std::string& id, const LifespanCurve& c, double rel_tolerance) {
  CaseResult r;
  r.case_id = id;
  r.predicted = c.predicted_slope;
  r.measured = c.fitted_slope;
  r.tolerance = rel_tolerance;
  r.pass = c.pass;
  r.note = c.monotone ? "relative tolerance" : "lifespan not monotone in eps";
  for (std::size_t i = 0; i < c.eps_values.size(); ++i) {
    r.series.emplace_back(c.eps_values[i], c.t_detect[i]);
  }
  return r;
}

}  // namespace sigmalab::analysis
