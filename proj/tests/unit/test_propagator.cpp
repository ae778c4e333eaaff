#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/propagator/evolve.hpp"
#include "sigmalab/propagator/kernels.hpp"
#include "sigmalab/propagator/radial.hpp"

using namespace sigmalab;
using namespace sigmalab::propagator;
using model::PhysicalParams;

namespace {

PhysicalParams prm(double sigma, double delta, int n = 1) { return {sigma, delta, n, 2.0, 2.0}; }

double rel(double got, double want, double scale) {
  return std::abs(got - want) / std::max(scale, 1e-300);
}

}  // namespace

TEST(Roots, VietaIdentities) {
  for (auto p : {prm(1, 0.25), prm(1, 0.5), prm(1, 0.75), prm(2, 1), prm(1.5, 0.125)}) {
    for (double rho : {1e-3, 0.1, 0.7, 1.0, 3.0, 40.0}) {
      const auto r = char_roots(rho, p);
      const double a = std::pow(rho, 2 * p.delta);
      const double b = std::pow(rho, 2 * p.sigma);
      EXPECT_LT(std::abs(r.lambda1 + r.lambda2 + a), 1e-12 * std::max(a, 1.0));
      EXPECT_LT(std::abs(r.lambda1 * r.lambda2 - b), 1e-12 * std::max(b, 1e-300) + 1e-300);
      EXPECT_GE(r.lambda1.real(), r.lambda2.real());
    }
  }
}

TEST(Roots, DegenerateRadius) {
  const auto p = prm(1, 0.25);
  const double rd = degenerate_radius(p);
  EXPECT_NEAR(rd, std::pow(4.0, -1.0 / (2 * 1 - 4 * 0.25)), 1e-15);
  const auto r = char_roots(rd, p);
  EXPECT_NEAR(r.discriminant, 0.0, 1e-14);
  EXPECT_EQ(degenerate_radius(prm(1, 0.5)), 0.0);
}

TEST(Kernels, MatchRungeKuttaOracleInEveryRegime) {
  for (auto p : {prm(1, 0.25), prm(1, 0.5), prm(1, 0.75), prm(2, 1)}) {
    std::vector<double> radii = {0.05, 0.4, 1.0, 2.5};
    if (const double rd = degenerate_radius(p); rd > 0) radii.push_back(rd);
    for (double rho : radii) {
      for (double t : {0.1, 1.0, 5.0}) {
        const double a = std::pow(rho, 2 * p.delta);
        const double b = std::pow(rho, 2 * p.sigma);
        const auto w0 = oracle::damped_oscillator(a, b, 1.0, 0.0, t, 20000);
        const auto w1 = oracle::damped_oscillator(a, b, 0.0, 1.0, t, 20000);
        const auto k = real_kernels(t, rho, p);
        EXPECT_NEAR(k.k0, w0[0], 1e-9) << rho << ' ' << t;
        EXPECT_NEAR(k.dk0, w0[1], 1e-9) << rho << ' ' << t;
        EXPECT_NEAR(k.k1, w1[0], 1e-9) << rho << ' ' << t;
        EXPECT_NEAR(k.dk1, w1[1], 1e-9) << rho << ' ' << t;
      }
    }
  }
}

TEST(Kernels, HalfRegimeClosedForms) {
  for (double sigma : {1.0, 1.5, 2.0}) {
    const auto p = prm(sigma, sigma / 2);
    for (double rho : {0.01, 0.3, 1.0, 2.0}) {
      for (double t : {0.0, 0.5, 3.0, 20.0}) {
        const auto want = oracle::half_kernels(sigma, rho, t);
        const auto got = real_kernels(t, rho, p);
        const double scale = std::max({std::abs(want.k0), std::abs(want.k1), std::abs(want.dk1), 1e-300});
        EXPECT_LT(rel(got.k0, want.k0, scale), 1e-12);
        EXPECT_LT(rel(got.k1, want.k1, scale), 1e-12);
        EXPECT_LT(rel(got.dk1, want.dk1, scale), 1e-12);
      }
    }
  }
}

TEST(Kernels, RealAndComplexPathsAgree) {
  for (auto p : {prm(1, 0.25), prm(1, 0.75)}) {
    for (double rho : {0.1, 0.9, 2.0}) {
      const auto c = kernels(1.3, rho, p);
      const auto r = real_kernels(1.3, rho, p);
      EXPECT_NEAR(c.k0.real(), r.k0, 1e-12);
      EXPECT_NEAR(c.k1.real(), r.k1, 1e-12);
      EXPECT_NEAR(c.dt_k0.real(), r.dk0, 1e-12);
      EXPECT_NEAR(c.dt_k1.real(), r.dk1, 1e-12);
      EXPECT_NEAR(c.k0.imag(), 0.0, 1e-12);
    }
  }
}

TEST(Kernels, InitialValuesAndZeroMode) {
  const auto p = prm(1, 0.25);
  const auto k = real_kernels(0.0, 0.8, p);
  EXPECT_DOUBLE_EQ(k.k0, 1.0);
  EXPECT_DOUBLE_EQ(k.k1, 0.0);
  EXPECT_DOUBLE_EQ(k.dk1, 1.0);
  // rho = 0: w'' = 0, so K0 = 1 and K1 = t
  const auto z = real_kernels(2.5, 0.0, p);
  EXPECT_DOUBLE_EQ(z.k0, 1.0);
  EXPECT_DOUBLE_EQ(z.k1, 2.5);
  EXPECT_DOUBLE_EQ(z.dk0, 0.0);
  EXPECT_DOUBLE_EQ(z.dk1, 1.0);
}

TEST(Kernels, TableCoversEveryMode) {
  const auto g = spectral::make_grid(2, 8, 2.0);
  const auto p = prm(1, 0.25, 2);
  const auto tab = kernel_table(*g, 0.3, p);
  ASSERT_EQ(tab.k0.size(), g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const auto k = real_kernels(0.3, g->xi_mag()[i], p);
    EXPECT_EQ(tab.k0[i], k.k0);
    EXPECT_EQ(tab.dk1[i], k.dk1);
  }
}

TEST(Evolve, SingleModeMatchesOracle) {
  const double L = M_PI;
  const auto g = spectral::make_grid(1, 32, L);
  const auto p = prm(1, 0.25);
  const int mode = 2;
  const auto w0 = spectral::SpectralField::from_function(g, [&](const double* x) { return std::cos(mode * x[0]); });
  const auto w1 = spectral::SpectralField(g);
  const double t = 1.7;
  const auto [w, wt] = evolve_linear(w0, w1, t, p);
  const auto ode = oracle::damped_oscillator(std::pow(mode, 0.5), std::pow(mode, 2.0), 1.0, 0.0, t, 20000);
  const auto vals = w.to_real();
  const auto dvals = wt.to_real();
  for (int i = 0; i < 32; ++i) {
    const double c = std::cos(mode * g->coordinate(i));
    ASSERT_NEAR(vals[i], ode[0] * c, 1e-10);
    ASSERT_NEAR(dvals[i], ode[1] * c, 1e-10);
  }
}

TEST(Evolve, SemigroupProperty) {
  const auto g = spectral::make_grid(2, 16, 4.0);
  const auto p = prm(1.5, 0.5, 2);
  const auto w0 = spectral::SpectralField::from_function(
      g, [](const double* x) { return std::exp(-x[0] * x[0] - 2 * x[1] * x[1]); });
  const auto w1 = spectral::SpectralField::from_function(
      g, [](const double* x) { return x[0] * std::exp(-x[0] * x[0] - x[1] * x[1]); });
  const auto [a, at] = evolve_linear(w0, w1, 1.0, p);
  const auto [b, bt] = evolve_linear(a, at, 0.6, p);
  const auto [c, ct] = evolve_linear(w0, w1, 1.6, p);
  for (std::size_t i = 0; i < g->size(); ++i) {
    ASSERT_LT(std::abs(b.coeffs()[i] - c.coeffs()[i]), 1e-13);
    ASSERT_LT(std::abs(bt.coeffs()[i] - ct.coeffs()[i]), 1e-13);
  }
}

TEST(Evolve, RejectsMismatchedGrids) {
  const auto a = spectral::SpectralField(spectral::make_grid(1, 8, 1.0));
  const auto b = spectral::SpectralField(spectral::make_grid(1, 16, 1.0));
  EXPECT_THROW(evolve_linear(a, b, 1.0, prm(1, 0.5)), GridMismatch);
}

TEST(Radial, PlancherelFactor) {
  EXPECT_NEAR(sphere_plancherel_factor(1), 1.0 / M_PI, 1e-15);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(sphere_plancherel_factor(n), oracle::sphere_area(n) / std::pow(2 * M_PI, n), 1e-15);
  }
}

TEST(Radial, InitialNormOfGaussianData) {
  // w1^ = e^{-rho^2}: ||w1||^2 = (2 pi)^{-n} (pi/2)^{n/2}; at t = 0, ||d_t w|| = ||w1||.
  for (int n = 1; n <= 4; ++n) {
    RadialProfile data;
    const double expect = std::sqrt(std::pow(2 * M_PI, -n) * std::pow(M_PI / 2, 0.5 * n));
    EXPECT_NEAR(radial_norm(data, 0.0, 1, 0.0, n, prm(1, 0.25, n)), expect, 1e-8 * expect);
    EXPECT_NEAR(radial_norm(data, 0.0, 0, 0.0, n, prm(1, 0.25, n)), 0.0, 1e-12);
  }
}

TEST(Radial, MatchesSimpsonWithClosedFormKernels) {
  const int n = 3;
  const auto p = prm(1, 0.5, n);
  RadialProfile data;
  for (double t : {1.0, 10.0, 100.0}) {
    for (int j : {0, 1}) {
      for (double a : {0.0, 1.0}) {
        auto integrand = [&](double rho) {
          const auto k = oracle::half_kernels(1.0, rho, t);
          const double m = (j ? k.dk1 : k.k1) * std::exp(-rho * rho);
          return std::pow(rho, n - 1 + 2 * a) * m * m;
        };
        const double want =
            std::sqrt(oracle::sphere_area(n) / std::pow(2 * M_PI, n) * oracle::simpson(integrand, 0.0, 8.0, 200000));
        const double got = radial_norm(data, t, j, a, n, p);
        EXPECT_NEAR(got, want, 1e-7 * want) << "t=" << t << " j=" << j << " a=" << a;
      }
    }
  }
}

TEST(Radial, LogPiecesIntegratePowerLaws) {
  QuadratureSpec spec;
  const double v = integrate_log_pieces([](double r) { return r * r; }, 1e-3, 2.0, {1.0}, spec);
  EXPECT_NEAR(v, (8.0 - 1e-9) / 3.0, 1e-10);
  const double w = integrate_radial([](double r) { return std::pow(r, -0.5); }, 1.0, {}, spec);
  EXPECT_NEAR(w, 2.0, 1e-8);
  EXPECT_THROW(integrate_radial([](double r) { return std::pow(r, -1.5); }, 1.0, {}, spec),
               QuadratureFailure);
}
