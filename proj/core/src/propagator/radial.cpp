#include "sigmalab/propagator/radial.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sigmalab/errors.hpp"

namespace sigmalab::propagator {

namespace {

// Longest piece, in log(rho), handed to one adaptive integration.
constexpr double kMaxLogSpan = 6.0;

double integrate_piece(const std::function<double(double)>& f, double lo, double hi,
                       const QuadratureSpec& spec, double& err) {
  using boost::math::quadrature::gauss_kronrod;
  auto g = [&](double y) {
    const double rho = std::exp(y);
    return f(rho) * rho;
  };
  double e = 0.0;
  const double v =
      gauss_kronrod<double, 31>::integrate(g, std::log(lo), std::log(hi), spec.max_depth,
                                           spec.rel_tol * 1e-2, &e);
  err += e;
  return v;
}

}  // namespace

double sphere_plancherel_factor(int n) {
  const double nn = n;
  const double sphere = 2.0 * std::pow(std::numbers::pi, nn / 2.0) / std::tgamma(nn / 2.0);
  return sphere / std::pow(2.0 * std::numbers::pi, nn);
}

double integrate_log_pieces(const std::function<double(double)>& f, double lo, double hi,
                            std::vector<double> breaks, const QuadratureSpec& spec) {
  if (!(lo > 0.0) || !(hi > lo)) throw QuadratureFailure("integration range must be 0 < lo < hi");
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> pts;
  for (double x : breaks) {
    if (x < lo || x > hi || !std::isfinite(x)) continue;
    if (!pts.empty() && std::log(x / pts.back()) < 1e-12) continue;
    // Split long stretches so each adaptive run sees a bounded log range.
    if (!pts.empty()) {
      const double span = std::log(x / pts.back());
      const int extra = static_cast<int>(std::floor(span / kMaxLogSpan));
      const double base = pts.back();
      for (int k = 1; k <= extra; ++k) {
        const double y = base * std::exp(span * k / (extra + 1));
        pts.push_back(y);
      }
    }
    pts.push_back(x);
  }
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate_piece(f, pts[i], pts[i + 1], spec, err);
  if (!std::isfinite(total) || err > spec.rel_tol * std::abs(total)) {
    std::ostringstream msg;
    msg << "quadrature error " << err << " exceeds rel_tol " << spec.rel_tol << " of |" << total
        << "|";
    throw QuadratureFailure(msg.str());
  }
  return total;
}

double integrate_radial(const std::function<double(double)>& f, double hi,
                        std::vector<double> breaks, const QuadratureSpec& spec) {
  const double lo = std::min(spec.rho_floor, 1e-3 * hi);
  double total = integrate_log_pieces(f, lo, hi, std::move(breaks), spec);
  // Below lo the integrand is a pure power rho^s to working precision;
  // integrate it in closed form.
  const double f_lo = f(lo);
  if (f_lo != 0.0) {
    const double f_in = f(lo * std::exp(-1.0));
    const double s = std::log(f_lo / f_in);
    if (!(s + 1.0 > 0.0)) {
      throw QuadratureFailure("integrand is not integrable at rho = 0 (local power " +
                              std::to_string(s) + ")");
    }
    total += f_lo * lo / (s + 1.0);
  }
  return total;
}

double radial_norm(const RadialProfile& data, double t, int j, double a, int n,
                   const PhysicalParams& prm, const QuadratureSpec& spec) {
  if (j != 0 && j != 1) throw InvalidParams("j", "must be 0 or 1");
  if (a < 0.0) throw InvalidParams("a", "must be >= 0");
  if (t < 0.0) throw InvalidParams("t", "must be >= 0");
  if (!(data.b > 0.0)) throw InvalidParams("profile.b", "must be positive");
  const double weight_pow = n - 1 + 2.0 * a;
  auto f = [&](double rho) {
    const auto k = real_kernels(t, rho, prm);
    const double kk0 = j == 0 ? k.k0 : k.dk0;
    const double kk1 = j == 0 ? k.k1 : k.dk1;
    double amp = 0.0;
    if (data.c0 != 0.0) amp += data.c0 * std::pow(rho, data.kappa0) * kk0;
    if (data.c1 != 0.0) amp += data.c1 * std::pow(rho, data.kappa1) * kk1;
    return std::pow(rho, weight_pow) * amp * amp * std::exp(-2.0 * data.b * rho * rho);
  };

  std::vector<double> breaks = {1.0};
  if (const double rd = degenerate_radius(prm); rd > 0.0) breaks.push_back(rd);
  if (t > 0.0) {
    for (double alpha : {2.0 * prm.delta, 2.0 * (prm.sigma - prm.delta), prm.sigma}) {
      breaks.push_back(std::pow(t, -1.0 / alpha));
    }
  }
  const double total = integrate_radial(f, std::sqrt(40.0 / data.b), breaks, spec);
  return std::sqrt(sphere_plancherel_factor(n) * total);
}

double radial_norm(const RadialProfile& data, double t, int j, double a,
                   const model::ModelParams& prm, const QuadratureSpec& spec) {
  return radial_norm(data, t, j, a, prm.n, model::to_physical(prm), spec);
}

}  // namespace sigmalab::propagator
