#include "sigmalab/propagator/kernels.hpp"

#include <cmath>
#include <map>

namespace sigmalab::propagator {

namespace {

constexpr double kDegenerateRel = 1e-12;

struct Symbols {
  double a;  // rho^{2 delta}
  double b;  // rho^{2 sigma}
  double disc;
};

Symbols symbols(double rho, const PhysicalParams& prm) {
  if (rho == 0.0) return {0.0, 0.0, 0.0};
  const double lr = std::log(rho);
  const double a = std::exp(2.0 * prm.delta * lr);
  const double b = std::exp(2.0 * prm.sigma * lr);
  // a^2 - 4b = a^2 (1 - 4 rho^{2 sigma - 4 delta}); expm1 keeps digits near
  // the degenerate radius.
  const double disc = -a * a * std::expm1(std::log(4.0) + (2.0 * prm.sigma - 4.0 * prm.delta) * lr);
  return {a, b, disc};
}

// sinh(z)/z for real z and sin(y)/y for z = iy, both through this one.
double sinhc(double z) {
  const double z2 = z * z;
  if (std::abs(z) < 1e-3) return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0));
  return std::sinh(z) / z;
}

double sinc(double y) {
  const double y2 = y * y;
  if (std::abs(y) < 1e-3) return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
  return std::sin(y) / y;
}

}  // namespace

RootPair char_roots(double rho, const PhysicalParams& prm) {
  RootPair r;
  const auto s = symbols(rho, prm);
  r.discriminant = s.disc;
  r.degenerate = std::abs(s.disc) <= kDegenerateRel * std::max(s.a * s.a, 4.0 * s.b);
  if (s.disc >= 0.0) {
    const double sq = std::sqrt(s.disc);
    const double l2 = -0.5 * (s.a + sq);
    // Product form avoids cancellation in (-a + sq)/2.
    const double l1 = s.a + sq > 0.0 ? -2.0 * s.b / (s.a + sq) : 0.0;
    r.lambda1 = l1;
    r.lambda2 = l2;
  } else {
    const double im = 0.5 * std::sqrt(-s.disc);
    r.lambda1 = cplx(-0.5 * s.a, im);
    r.lambda2 = cplx(-0.5 * s.a, -im);
  }
  return r;
}

RootPair char_roots(double rho, const model::ModelParams& prm) {
  return char_roots(rho, model::to_physical(prm));
}

double degenerate_radius(const PhysicalParams& prm) {
  const double e = 2.0 * prm.sigma - 4.0 * prm.delta;
  if (e == 0.0) return 0.0;
  return std::pow(4.0, -1.0 / e);
}

RealKernels real_kernels(double t, double rho, const PhysicalParams& prm) {
  const auto s = symbols(rho, prm);
  const double mean = -0.5 * s.a;  // (lambda1 + lambda2)/2
  if (s.disc >= 0.0) {
    const double h = 0.5 * std::sqrt(s.disc);  // (lambda1 - lambda2)/2
    const double z = h * t;
    if (z > 1.0) {
      // Well separated real roots: both exponentials directly, no overflow
      // from cosh(z) and no cancellation since e^{lambda2 t} < e^{-2} e^{lambda1 t}.
      const double l1 = -2.0 * s.b / (s.a + 2.0 * h);
      const double l2 = -0.5 * s.a - h;
      const double e1 = std::exp(l1 * t);
      const double e2 = std::exp(l2 * t);
      const double inv = 1.0 / (2.0 * h);
      const double k1 = (e1 - e2) * inv;
      return {(l1 * e2 - l2 * e1) * inv, k1, -s.b * k1, (l1 * e1 - l2 * e2) * inv};
    }
    const double em = std::exp(mean * t);
    const double sc = t * sinhc(z);
    const double ch = std::cosh(z);
    const double k1 = em * sc;
    return {em * (ch - mean * sc), k1, -s.b * k1, em * (ch + mean * sc)};
  }
  const double w = 0.5 * std::sqrt(-s.disc);
  const double y = w * t;
  const double em = std::exp(mean * t);
  const double sc = t * sinc(y);
  const double c = std::cos(y);
  const double k1 = em * sc;
  return {em * (c - mean * sc), k1, -s.b * k1, em * (c + mean * sc)};
}

KernelValues kernels(double t, double rho, const PhysicalParams& prm) {
  const auto k = real_kernels(t, rho, prm);
  return {k.k0, k.k1, k.dk0, k.dk1};
}

KernelValues kernels(double t, double rho, const model::ModelParams& prm) {
  return kernels(t, rho, model::to_physical(prm));
}

KernelTable kernel_table(const spectral::SpectralGrid& grid, double t, const PhysicalParams& prm) {
  KernelTable tab;
  tab.t = t;
  const auto& xi = grid.xi_mag();
  const std::size_t n = xi.size();
  tab.k0.resize(n);
  tab.k1.resize(n);
  tab.dk0.resize(n);
  tab.dk1.resize(n);
  // Many modes share a magnitude; evaluate each distinct |xi| once.
  std::map<double, RealKernels> seen;
  for (std::size_t k = 0; k < n; ++k) {
    auto it = seen.find(xi[k]);
    if (it == seen.end()) it = seen.emplace(xi[k], real_kernels(t, xi[k], prm)).first;
    tab.k0[k] = it->second.k0;
    tab.k1[k] = it->second.k1;
    tab.dk0[k] = it->second.dk0;
    tab.dk1[k] = it->second.dk1;
  }
  return tab;
}

}  // namespace sigmalab::propagator
