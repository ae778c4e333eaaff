#include "sigmalab/analysis/fit.hpp"

#include <cmath>
#include <string>

#include "sigmalab/errors.hpp"

namespace sigmalab::analysis {

namespace {

SlopeFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InsufficientData("all abscissae coincide");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    sse += r * r;
  }
  f.r_squared = syy == 0.0 ? 1.0 : std::max(0.0, std::min(1.0, 1.0 - sse / syy));
  f.n_points = static_cast<int>(x.size());
  return f;
}

}  // namespace

SlopeFit fit_decay(const std::vector<double>& times, const std::vector<double>& norms,
                   std::pair<double, double> window) {
  if (times.size() != norms.size()) throw InsufficientData("times and norms differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < window.first || times[i] > window.second) continue;
    if (!(norms[i] > 0.0)) {
      throw NonPositiveNorm("norm " + std::to_string(norms[i]) + " at t = " +
                            std::to_string(times[i]));
    }
    x.push_back(std::log1p(times[i]));
    y.push_back(std::log(norms[i]));
  }
  if (x.size() < 8) {
    throw InsufficientData("need >= 8 samples in window, got " + std::to_string(x.size()));
  }
  auto f = ols(x, y);
  f.window = window;
  return f;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InsufficientData("need >= 2 matching points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw NonPositiveNorm("log-log fit needs positive data");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  auto f = ols(lx, ly);
  f.window = {x.front(), x.back()};
  return f;
}

std::vector<double> geometric_samples(double lo, double hi, int count) {
  std::vector<double> out;
  if (count == 1) return {lo};
  const double r = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(lo * std::exp(r * i));
  out.back() = hi;
  return out;
}

}  // namespace sigmalab::analysis
