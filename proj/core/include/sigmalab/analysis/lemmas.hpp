#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigmalab/analysis/fit.hpp"
#include "sigmalab/analysis/report.hpp"

namespace sigmalab::analysis {

enum class Oscillation { Cos, Sin };

struct KernelScalingCase {
  std::string id;
  double a = 0.0;
  double alpha = 2.0;
  double r = 2.0;  // use INFINITY for the sup norm
  double c1 = 1.0;
  double c2 = 1.0;
  int n = 1;
  Oscillation osc = Oscillation::Cos;
  std::vector<double> t_samples;
};

struct ScalingResult {
  SlopeFit fit;
  double predicted = 0.0;  // -a/alpha - (n/alpha)(1 - 1/r)
  std::vector<std::pair<double, double>> series;
};

/// L^r norms of F^{-1}(|xi|^a e^{-c1 |xi|^alpha t} cos|sin(c2 |xi|^alpha t)).
/// r = 2 and (r = inf, c2 = 0) use exact radial integrals in any n; other r
/// need n = 1 and use a 2^14-point grid on [-400, 400).
ScalingResult kernel_lr_scaling(const KernelScalingCase& c);

/// |S^{n-1}| int_0^1 rho^{n-1+beta} e^{-c rho^alpha t} drho at one t.
double small_freq_value(double beta, double alpha, double c, int n, double t);

struct SmallFreqResult {
  SlopeFit fit;
  double predicted = 0.0;  // -(n + beta)/alpha
  std::vector<std::pair<double, double>> series;
};

SmallFreqResult small_freq_integral(double beta, double alpha, double c, int n,
                                    const std::vector<double>& t_samples);

struct GnResult {
  double theta = 0.0;
  double worst_ratio = 0.0;
  double best_ratio = 0.0;
  int samples = 0;
};

/// Worst ratio ||u||_{H^s} / (||u||_{L^2}^{1-theta} ||u||_{H^sigma}^theta)
/// (homogeneous norms) over random band-limited fields. Only the L^2 scale
/// p = p0 = p1 = 2 is computable; other exponents throw DomainError.
/// Throws ThetaOutOfRange when theta leaves [s/sigma, 1].
GnResult gn_check(double p_out, double p0, double p1, double s, double sigma_reg, int n,
                  int samples, std::uint64_t seed);

/// The lemma suite used by verify-lemmas: four small-frequency integrals and
/// four kernel scaling checks.
std::vector<CaseResult> run_lemma_suite(unsigned workers = 1);

}  // namespace sigmalab::analysis
