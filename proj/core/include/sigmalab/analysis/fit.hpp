#pragma once

#include <utility>
#include <vector>

namespace sigmalab::analysis {

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::pair<double, double> window{0.0, 0.0};
  int n_points = 0;
};

/// Least squares of log(norm) against log(1 + t) over samples with t inside
/// `window` (inclusive). Throws InsufficientData with fewer than 8 samples
/// in the window, NonPositiveNorm for a norm <= 0 there.
SlopeFit fit_decay(const std::vector<double>& times, const std::vector<double>& norms,
                   std::pair<double, double> window);

/// Plain least squares of log y against log x (all points), for lifespan
/// curves and other pure power laws.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// `count` geometrically spaced points covering [lo, hi].
std::vector<double> geometric_samples(double lo, double hi, int count);

}  // namespace sigmalab::analysis
