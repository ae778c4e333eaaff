#pragma once

#include <complex>
#include <vector>

#include "sigmalab/model/params.hpp"
#include "sigmalab/spectral/grid.hpp"

namespace sigmalab::propagator {

using cplx = std::complex<double>;
using model::PhysicalParams;

/// Roots of lambda^2 + rho^{2 delta} lambda + rho^{2 sigma} = 0.
/// lambda1 is the root with the larger real part (the slow one when real).
struct RootPair {
  cplx lambda1;
  cplx lambda2;
  double discriminant = 0.0;  // rho^{4 delta} - 4 rho^{2 sigma}
  bool degenerate = false;
};

RootPair char_roots(double rho, const PhysicalParams& prm);
RootPair char_roots(double rho, const model::ModelParams& prm);

/// Radius where the discriminant vanishes, 4^{-1/(2 sigma - 4 delta)};
/// none (returns 0) when 2 delta = sigma.
double degenerate_radius(const PhysicalParams& prm);

/// K0 propagates w0, K1 propagates w1:  w^(t) = K0 w0^ + K1 w1^.
struct KernelValues {
  cplx k0;
  cplx k1;
  cplx dt_k0;
  cplx dt_k1;
};

KernelValues kernels(double t, double rho, const PhysicalParams& prm);
KernelValues kernels(double t, double rho, const model::ModelParams& prm);

/// Real-valued kernels (they are real for real t); the fast path used by
/// grid code.
struct RealKernels {
  double k0;
  double k1;
  double dk0;
  double dk1;
};

RealKernels real_kernels(double t, double rho, const PhysicalParams& prm);

/// Kernel values for every mode of a grid at one time step.
struct KernelTable {
  double t = 0.0;
  std::vector<double> k0, k1, dk0, dk1;
};

KernelTable kernel_table(const spectral::SpectralGrid& grid, double t, const PhysicalParams& prm);

}  // namespace sigmalab::propagator
