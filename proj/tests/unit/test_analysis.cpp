#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "sigmalab/analysis/fit.hpp"
#include "sigmalab/analysis/lemmas.hpp"
#include "sigmalab/analysis/lifespan.hpp"
#include "sigmalab/analysis/linear.hpp"
#include "sigmalab/analysis/parallel.hpp"
#include "sigmalab/analysis/report.hpp"
#include "sigmalab/errors.hpp"

using namespace sigmalab;
using namespace sigmalab::analysis;
using model::Number;

TEST(Fit, RecoversExactPowerLawInOnePlusT) {
  const auto ts = geometric_samples(10.0, 1e4, 12);
  std::vector<double> ys;
  for (double t : ts) ys.push_back(3.0 * std::pow(1.0 + t, -0.75));
  const auto f = fit_decay(ts, ys, {10.0, 1e4});
  EXPECT_NEAR(f.slope, -0.75, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-10);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.n_points, 12);
}

TEST(Fit, WindowFiltersAndGuards) {
  const auto ts = geometric_samples(1.0, 1e4, 20);
  std::vector<double> ys(ts.size(), 1.0);
  EXPECT_THROW(fit_decay(ts, ys, {1e3, 1e4}), InsufficientData);
  ys[10] = 0.0;
  EXPECT_THROW(fit_decay(ts, ys, {1.0, 1e4}), NonPositiveNorm);
}

TEST(Fit, LogLogAndGeometricSamples) {
  const auto xs = geometric_samples(0.01, 0.1, 5);
  ASSERT_EQ(xs.size(), 5u);
  EXPECT_NEAR(xs.front(), 0.01, 1e-17);
  EXPECT_NEAR(xs.back(), 0.1, 1e-16);
  EXPECT_NEAR(xs[1] / xs[0], xs[4] / xs[3], 1e-12);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(7.0 * std::pow(x, -0.5));
  EXPECT_NEAR(fit_loglog(xs, ys).slope, -0.5, 1e-12);
}

TEST(Parallel, VisitsEveryIndexAndRethrows) {
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw DomainError("boom");
                            }),
               DomainError);
}

TEST(Report, JsonAndCsvShapes) {
  CaseResult a{"alpha", -0.5, -0.49, 0.05, true, "", {{1.0, 2.0}, {3.0, 4.0}}};
  CaseResult b{"beta", 1.0, 2.0, 0.1, false, "too big", {}};
  std::ostringstream js;
  write_report_json(js, {a, b});
  const auto parsed = nlohmann::json::parse(js.str());
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0]["case_id"], "alpha");
  EXPECT_EQ(parsed[1]["pass"], false);
  EXPECT_EQ(parsed[1]["note"], "too big");
  std::ostringstream cs;
  write_series_csv(cs, a);
  EXPECT_EQ(cs.str(), "t,value\r\n1,2\r\n3,4\r\n");
  EXPECT_FALSE(all_pass({a, b}));
  EXPECT_TRUE(all_pass({a}));
}

TEST(SmallFrequency, ValueMatchesErrorFunction) {
  // |S^0| int_0^1 e^{-t rho^2} = sqrt(pi/t) erf(sqrt t)
  for (double t : {0.5, 10.0, 1e4}) {
    const double expect = std::sqrt(M_PI / t) * std::erf(std::sqrt(t));
    EXPECT_NEAR(small_freq_value(0.0, 2.0, 1.0, 1, t), expect, 1e-9 * expect);
  }
  // n = 3, beta = 0, alpha = 1: 4 pi int_0^1 rho^2 e^{-c t rho}
  const double ct = 50.0;
  const double expect = 4 * M_PI * (2.0 - std::exp(-ct) * (ct * ct + 2 * ct + 2)) / (ct * ct * ct);
  EXPECT_NEAR(small_freq_value(0.0, 1.0, 2.0, 3, 25.0), expect, 1e-9 * expect);
  EXPECT_THROW(small_freq_value(-2.0, 1.0, 1.0, 1, 1.0), InvalidParams);
}

TEST(SmallFrequency, SlopeIsMinusNPlusBetaOverAlpha) {
  const auto r = small_freq_integral(1.0, 2.0, 1.0, 3, geometric_samples(1e2, 1e5, 16));
  EXPECT_DOUBLE_EQ(r.predicted, -2.0);
  EXPECT_NEAR(r.fit.slope, -2.0, 0.02);
}

TEST(KernelScaling, SupNormMatchesGammaIntegral) {
  // (2 pi)^{-n} |S^{n-1}| Gamma((n+a)/alpha) / (alpha (c1 t)^{(n+a)/alpha})
  KernelScalingCase c;
  c.n = 3;
  c.alpha = 1.0;
  c.r = INFINITY;
  c.c2 = 0.0;
  c.t_samples = {10.0, 100.0};
  const auto r = kernel_lr_scaling(c);
  for (const auto& [t, v] : r.series) {
    const double k = (c.n + c.a) / c.alpha;
    const double expect = oracle::sphere_area(3) / std::pow(2 * M_PI, 3) * std::tgamma(k) /
                          (c.alpha * std::pow(c.c1 * t, k));
    EXPECT_NEAR(v, expect, 1e-9 * expect);
  }
  EXPECT_NEAR(r.fit.slope, -3.0, 1e-9);
}

TEST(KernelScaling, L2NormOfHeatKernelIsExact) {
  // c2 = 0, r = 2, n = 1, alpha = 2: ||F^{-1} e^{-t xi^2}||_2 = (8 pi t)^{-1/4}
  KernelScalingCase c;
  c.c2 = 0.0;
  c.t_samples = {1.0, 10.0, 100.0};
  const auto r = kernel_lr_scaling(c);
  for (const auto& [t, v] : r.series) EXPECT_NEAR(v, std::pow(8 * M_PI * t, -0.25), 1e-9);
  EXPECT_NEAR(r.predicted, -0.25, 1e-15);
}

TEST(KernelScaling, RejectsUnsupportedCases) {
  KernelScalingCase c;
  c.r = 3.0;
  c.n = 2;
  c.t_samples = {1.0, 2.0};
  EXPECT_THROW(kernel_lr_scaling(c), DomainError);
  c.t_samples = {1.0};
  EXPECT_THROW(kernel_lr_scaling(c), InsufficientData);
}

TEST(Interpolation, EndpointsGiveRatioOne) {
  for (double s : {0.0, 2.0}) {
    const auto r = gn_check(2, 2, 2, s, 2.0, 2, 50, 1);
    EXPECT_NEAR(r.worst_ratio, 1.0, 1e-12);
    EXPECT_NEAR(r.best_ratio, 1.0, 1e-12);
  }
}

TEST(Interpolation, InteriorRatioBoundedByOne) {
  const auto r = gn_check(2, 2, 2, 0.7, 1.5, 1, 200, 42);
  EXPECT_NEAR(r.theta, 0.7 / 1.5, 1e-15);
  EXPECT_LE(r.worst_ratio, 1.0 + 1e-12);
  EXPECT_GT(r.best_ratio, 0.0);
  EXPECT_EQ(r.samples, 200);
}

TEST(Interpolation, ScopeAndThetaChecks) {
  EXPECT_THROW(gn_check(1.5, 2, 2, 0.5, 1.0, 2, 10, 0), ThetaOutOfRange);
  EXPECT_THROW(gn_check(3, 2, 4, 0.5, 1.0, 2, 10, 0), DomainError);
}

TEST(Interpolation, SeedMakesRunsReproducible) {
  const auto a = gn_check(2, 2, 2, 1.0, 2.0, 2, 30, 9);
  const auto b = gn_check(2, 2, 2, 1.0, 2.0, 2, 30, 9);
  EXPECT_EQ(a.worst_ratio, b.worst_ratio);
  EXPECT_EQ(a.best_ratio, b.best_ratio);
}

TEST(LinearDecay, DataProfiles) {
  model::ModelParams p;
  p.sigma = Number(1);
  p.delta = Number(1, 2);
  p.n = 3;
  const auto g = data_profile(p, Datum::W1);
  EXPECT_EQ(g.c0, 0.0);
  EXPECT_EQ(g.kappa1, 0.0);
  p.m = Number(2);
  const auto l2 = data_profile(p, Datum::Both);
  EXPECT_GT(l2.c0, 0.0);
  EXPECT_NEAR(l2.kappa1, -1.5 + 0.01 * 0.5, 1e-15);
  p.m = Number(3, 2);
  EXPECT_THROW(data_profile(p, Datum::W0), InvalidParams);
}

TEST(LinearDecay, HalfRegimeExampleSlope) {
  LinearCase c;
  c.id = "example";
  c.params.sigma = Number(1);
  c.params.delta = Number(1, 2);
  c.params.n = 3;
  const auto v = verify_linear_decay(c);
  EXPECT_DOUBLE_EQ(v.predicted, -0.5);
  EXPECT_NEAR(v.fit.slope, -0.5, 0.05);
  EXPECT_TRUE(v.pass);
  const auto cr = to_case_result(c, v);
  EXPECT_EQ(cr.case_id, "example");
  EXPECT_EQ(cr.series.size(), 16u);
}

TEST(LinearDecay, DefaultMatrixSpansTheRequiredAxes) {
  const auto cases = default_linear_matrix();
  ASSERT_GE(cases.size(), 12u);
  std::set<int> regimes, js, dims, ms, kinds;
  bool a_zero = false, a_kplus = false;
  for (const auto& c : cases) {
    const auto k = model::derive_constants(c.params);
    regimes.insert(static_cast<int>(k.regime));
    js.insert(c.j);
    dims.insert(c.params.n);
    ms.insert(static_cast<int>(c.params.m.to_double()));
    a_zero |= c.a == Number(0);
    a_kplus |= c.a == k.k_plus;
  }
  EXPECT_EQ(regimes.size(), 3u);
  EXPECT_EQ(js, (std::set<int>{0, 1}));
  EXPECT_EQ(dims, (std::set<int>{1, 2, 3, 4}));
  EXPECT_EQ(ms, (std::set<int>{1, 2}));
  EXPECT_TRUE(a_zero && a_kplus);
}

TEST(Lifespan, RequiresTheBlowupCondition) {
  model::ModelParams p;
  p.sigma = Number(2);
  p.delta = Number(1);
  p.n = 4;
  p.p = Number(5);
  p.q = Number(5);
  EXPECT_THROW(lifespan_sweep(p, eps_decade(0.01, 0.1), LifespanSetup{}), DomainError);
  EXPECT_THROW(lifespan_sweep(p, {0.1, 0.2}, LifespanSetup{}), InsufficientData);
}

TEST(Lifespan, BumpStateIsAPositiveVelocity) {
  LifespanSetup s;
  s.points = 64;
  s.half_length = 8.0;
  const auto st = bump_state(s, 1, 0.1);
  EXPECT_EQ(spectral::sobolev_norm(st.u, 0, false), 0.0);
  const auto vel = st.ut.to_real();
  for (double v : vel) EXPECT_GE(v, -1e-15);
  EXPECT_NEAR(*std::max_element(vel.begin(), vel.end()), 0.1, 1e-12);
}

TEST(Lifespan, SmallerDataLiveLonger) {
  model::ModelParams p;
  p.sigma = Number(2);
  p.delta = Number(1);
  p.n = 1;
  LifespanSetup s;
  s.points = 256;
  s.half_length = 32.0;
  const auto curve = lifespan_sweep(p, eps_decade(0.1, 1.0), s);
  EXPECT_TRUE(curve.monotone);
  EXPECT_LT(curve.fitted_slope, 0.0);
  EXPECT_EQ(curve.predicted_slope, -0.5);
  const auto cr = to_case_result("curve", curve, 0.25);
  EXPECT_EQ(cr.series.size(), 5u);
}
