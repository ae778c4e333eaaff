#pragma once

#include <functional>
#include <vector>

#include "sigmalab/propagator/kernels.hpp"

namespace sigmalab::propagator {

/// Radial data spectra  w_i^(rho) = c_i rho^{kappa_i} e^{-b rho^2}.
/// kappa = 0 models integrable (L^1) data; kappa = -n/2 + eta models data
/// that are only square integrable.
struct RadialProfile {
  double c0 = 0.0;
  double kappa0 = 0.0;
  double c1 = 1.0;
  double kappa1 = 0.0;
  double b = 1.0;
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  unsigned max_depth = 18;
  double rho_floor = 1e-40;  // below this a power-law tail estimate is used
};

/// (2 pi)^{-n} |S^{n-1}|, the constant in front of the radial Plancherel
/// integral; |S^0| = 2.
double sphere_plancherel_factor(int n);

/// integral of f over [lo, hi] (0 < lo < hi), split at `breaks`, each piece
/// integrated in log(rho) with adaptive Gauss-Kronrod. Throws
/// QuadratureFailure when the estimated error exceeds rel_tol * |result|.
double integrate_log_pieces(const std::function<double(double)>& f, double lo, double hi,
                            std::vector<double> breaks, const QuadratureSpec& spec);

/// integral of f over (0, hi]: log-spaced adaptive pieces down to
/// spec.rho_floor (or 1e-3 hi if smaller), plus a closed-form power-law tail
/// below that. Throws QuadratureFailure if f is not integrable at 0.
double integrate_radial(const std::function<double(double)>& f, double hi,
                        std::vector<double> breaks, const QuadratureSpec& spec);

/// ||d_t^j |D|^a w(t)||_{L^2(R^n)} for radially symmetric data, by quadrature
/// of (2 pi)^{-n} |S^{n-1}| int rho^{n-1+2a} |d_t^j w^(t,rho)|^2 drho.
double radial_norm(const RadialProfile& data, double t, int j, double a, int n,
                   const PhysicalParams& prm, const QuadratureSpec& spec = {});
double radial_norm(const RadialProfile& data, double t, int j, double a,
                   const model::ModelParams& prm, const QuadratureSpec& spec = {});

}  // namespace sigmalab::propagator
