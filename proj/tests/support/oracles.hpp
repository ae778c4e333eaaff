#pragma once

// Reference implementations used by the tests. Nothing here calls into the
// library: each oracle is a separate, deliberately plain computation.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

// Exact fraction over int64 with eager reduction.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
inline Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
inline Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
inline Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
inline bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
inline bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
inline Frac fmin(Frac a, Frac b) { return a < b ? a : b; }
inline Frac fmax(Frac a, Frac b) { return a < b ? b : a; }

// 1 + m(k+ + sigma)/(n - m k-)
inline Frac critical_exponent(Frac sigma, Frac delta, int n, Frac m) {
  const Frac km = fmin(sigma, Frac(2) * delta);
  const Frac kp = fmax(sigma, Frac(2) * delta);
  return Frac(1) + m * (kp + sigma) / (Frac(n) - m * km);
}

// Lifespan exponent for integer orders: -(2 sigma - k-)/(k- + 2 sigma (q+1)/(p q) - n)
// with p <= q.
inline Frac lifespan_exponent(Frac sigma, Frac delta, int n, Frac p, Frac q) {
  const Frac km = fmin(sigma, Frac(2) * delta);
  const Frac lo = fmin(p, q);
  const Frac hi = fmax(p, q);
  const Frac denom = km + Frac(2) * sigma * (hi + Frac(1)) / (lo * hi) - Frac(n);
  return Frac(0) - (Frac(2) * sigma - km) / denom;
}

// Classical RK4 for y'' + a y' + b y = 0, returning (y, y') at time t.
inline std::array<double, 2> damped_oscillator(double a, double b, double y0, double v0, double t,
                                               int steps) {
  auto rhs = [&](double y, double v) { return std::array<double, 2>{v, -a * v - b * y}; };
  double y = y0;
  double v = v0;
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = rhs(y, v);
    const auto k2 = rhs(y + 0.5 * h * k1[0], v + 0.5 * h * k1[1]);
    const auto k3 = rhs(y + 0.5 * h * k2[0], v + 0.5 * h * k2[1]);
    const auto k4 = rhs(y + h * k3[0], v + h * k3[1]);
    y += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    v += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
  }
  return {y, v};
}

// Kernels when 2 delta = sigma: roots rho^sigma (-1/2 +- i sqrt(3)/2).
struct HalfKernels {
  double k0, k1, dk0, dk1;
};

inline HalfKernels half_kernels(double sigma, double rho, double t) {
  if (rho == 0.0) return {1.0, t, 0.0, 1.0};  // w'' = 0
  const double s = std::pow(rho, sigma);
  const double w = 0.5 * std::sqrt(3.0) * s;
  const double e = std::exp(-0.5 * s * t);
  const double c = std::cos(w * t);
  const double sn = std::sin(w * t);
  HalfKernels k;
  k.k1 = e * sn / w;
  k.k0 = e * (c + 0.5 * s * sn / w);
  // d/dt of the two expressions above
  k.dk1 = e * (c - 0.5 * s * sn / w);
  k.dk0 = -s * s * k.k1;
  return k;
}

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Surface area of the unit sphere in R^n.
inline double sphere_area(int n) { return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n); }

// RK4 for the spatially constant system u'' = |v|^p, v'' = |u|^q.
inline std::array<double, 4> zero_mode_system(double p, double q, std::array<double, 4> y, double t,
                                              int steps) {
  auto rhs = [&](const std::array<double, 4>& s) {
    return std::array<double, 4>{s[1], std::pow(std::abs(s[2]), p), s[3],
                                 std::pow(std::abs(s[0]), q)};
  };
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    std::array<double, 4> tmp{};
    const auto k1 = rhs(y);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    const auto k2 = rhs(tmp);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    const auto k3 = rhs(tmp);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + h * k3[j];
    const auto k4 = rhs(tmp);
    for (int j = 0; j < 4; ++j) y[j] += h / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
  }
  return y;
}

}  // namespace oracle
