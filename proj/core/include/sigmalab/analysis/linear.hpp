#pragma once

#include <string>
#include <vector>

#include "sigmalab/analysis/fit.hpp"
#include "sigmalab/analysis/report.hpp"
#include "sigmalab/model/decay.hpp"
#include "sigmalab/propagator/radial.hpp"

namespace sigmalab::analysis {

enum class Datum { W0, W1, Both };

/// One linear decay experiment on R^n via radial quadrature.
struct LinearCase {
  std::string id;
  model::ModelParams params;
  int j = 0;
  model::Number a{0};
  model::Corollary corollary = model::Corollary::Sharp;
  Datum datum = Datum::W1;
  double tolerance = 0.05;
  std::pair<double, double> window{1e2, 1e4};
  int points = 16;
};

struct LinearVerdict {
  SlopeFit fit;
  model::DecayPrediction prediction;
  double predicted = 0.0;
  bool pass = false;
  std::vector<std::pair<double, double>> series;
};

/// Radial data spectra modelling the integrability m of the case: Gaussian
/// for m = 1, rho^{-n/2 + eta} e^{-rho^2} (eta = (k+ - delta)/100) for m = 2.
/// Intermediate m has no canonical profile and is rejected.
propagator::RadialProfile data_profile(const model::ModelParams& params, Datum datum);

/// Measures the decay slope and compares with the predicted exponent
/// (data0 for w0, data1 for w1, the larger of the two for both).
LinearVerdict verify_linear_decay(const LinearCase& c);

/// The regression matrix: all three regimes, j in {0,1}, a in {0, k+},
/// m in {1,2}, n in 1..4.
std::vector<LinearCase> default_linear_matrix();

CaseResult to_case_result(const LinearCase& c, const LinearVerdict& v);

}  // namespace sigmalab::analysis
