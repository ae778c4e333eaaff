#include "sigmalab/analysis/linear.hpp"

#include <cmath>

#include "sigmalab/errors.hpp"

namespace sigmalab::analysis {

using model::Corollary;
using model::ModelParams;
using model::Number;

propagator::RadialProfile data_profile(const ModelParams& params, Datum datum) {
  const auto c = model::derive_constants(params);
  double kappa = 0.0;
  if (params.m == Number(2)) {
    const double eta = 0.01 * (c.k_plus - params.delta).to_double();
    kappa = -0.5 * params.n + eta;
  } else if (!(params.m == Number(1))) {
    throw InvalidParams("m", "simulated data exist only for m = 1 (Gaussian) and m = 2 (L^2 only)");
  }
  propagator::RadialProfile p;
  p.b = 1.0;
  p.kappa0 = p.kappa1 = kappa;
  p.c0 = datum == Datum::W1 ? 0.0 : 1.0;
  p.c1 = datum == Datum::W0 ? 0.0 : 1.0;
  return p;
}

LinearVerdict verify_linear_decay(const LinearCase& c) {
  LinearVerdict v;
  v.prediction = model::decay_prediction(c.params, c.j, c.a, c.corollary);
  const double e0 = v.prediction.exponent_data0.to_double();
  const double e1 = v.prediction.exponent_data1.to_double();
  v.predicted = c.datum == Datum::W0 ? e0 : c.datum == Datum::W1 ? e1 : std::max(e0, e1);

  const auto profile = data_profile(c.params, c.datum);
  const auto phys = model::to_physical(c.params);
  const double a = c.a.to_double();
  std::vector<double> ts = geometric_samples(c.window.first, c.window.second, c.points);
  std::vector<double> norms;
  for (double t : ts) {
    norms.push_back(propagator::radial_norm(profile, t, c.j, a, c.params.n, phys));
    v.series.emplace_back(t, norms.back());
  }
  v.fit = fit_decay(ts, norms, c.window);
  v.pass = std::abs(v.fit.slope - v.predicted) <= c.tolerance;
  return v;
}

namespace {

LinearCase make(const char* id, Number sigma, Number delta, int n, Number m, int j, Number a,
                Corollary cor, Datum d) {
  LinearCase c;
  c.id = id;
  c.params.sigma = sigma;
  c.params.delta = delta;
  c.params.n = n;
  c.params.m = m;
  c.j = j;
  c.a = a;
  c.corollary = cor;
  c.datum = d;
  return c;
}

}  // namespace

std::vector<LinearCase> default_linear_matrix() {
  const Number half(1, 2), quarter(1, 4), three_q(3, 4), three_h(3, 2);
  const auto S = Corollary::Sharp;
  const auto G = Corollary::General;
  return {
      make("half_n3_w1_j0_a0", 1, half, 3, 1, 0, 0, S, Datum::W1),
      make("half_n3_w1_j0_akp", 1, half, 3, 1, 0, 1, S, Datum::W1),
      make("below_n2_w0_j0_a0", 1, quarter, 2, 1, 0, 0, S, Datum::W0),
      make("below_n2_w0_j1_a0", 1, quarter, 2, 1, 1, 0, S, Datum::W0),
      make("below_n2_w1_j1_a0", 1, quarter, 2, 1, 1, 0, S, Datum::W1),
      make("below_n3_w1_j0_a0", 1, quarter, 3, 1, 0, 0, S, Datum::W1),
      make("above_n3_w1_j0_a0", 1, three_q, 3, 1, 0, 0, S, Datum::W1),
      make("above_n4_w1_j1_a0", 1, three_q, 4, 1, 1, 0, S, Datum::W1),
      make("above_n3_w0_j0_akp", 1, three_q, 3, 1, 0, three_h, S, Datum::W0),
      make("half_s2_n4_w0_j0_a0", 2, 1, 4, 1, 0, 0, G, Datum::W0),
      make("half_n3_w0_j0_a0_l2", 1, half, 3, 2, 0, 0, S, Datum::W0),
      make("half_n3_w1_j0_a0_l2", 1, half, 3, 2, 0, 0, S, Datum::W1),
      make("below_n2_w0_j0_a0_l2", 1, quarter, 2, 2, 0, 0, G, Datum::W0),
      make("below_n1_w1_j0_a0_l2", 1, quarter, 1, 2, 0, 0, G, Datum::W1),
      make("above_n2_w0_j0_akp_l2", 1, three_q, 2, 2, 0, three_h, G, Datum::W0),
      make("half_n1_w0_j1_akp", 1, half, 1, 1, 1, 1, G, Datum::W0),
  };
}

CaseResult to_case_result(const LinearCase& c, const LinearVerdict& v) {
  CaseResult r;
  r.case_id = c.id;
  r.predicted = v.predicted;
  r.measured = v.fit.slope;
  r.tolerance = c.tolerance;
  r.pass = v.pass;
  r.note = std::string(model::to_string(c.corollary)) + " estimate";
  r.series = v.series;
  return r;
}

}  // namespace sigmalab::analysis
