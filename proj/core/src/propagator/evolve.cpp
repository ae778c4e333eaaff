#include "sigmalab/propagator/evolve.hpp"

#include "sigmalab/errors.hpp"

namespace sigmalab::propagator {

std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1,
                                                      const KernelTable& tab) {
  spectral::require_same_grid(w0, w1, "evolve_linear");
  if (tab.k0.size() != w0.coeffs().size()) throw GridMismatch("kernel table does not match grid");
  SpectralField w(w0.grid_ptr());
  SpectralField wt(w0.grid_ptr());
  const auto& a = w0.coeffs();
  const auto& b = w1.coeffs();
  auto& x = w.coeffs();
  auto& y = wt.coeffs();
  for (std::size_t k = 0; k < a.size(); ++k) {
    x[k] = tab.k0[k] * a[k] + tab.k1[k] * b[k];
    y[k] = tab.dk0[k] * a[k] + tab.dk1[k] * b[k];
  }
  return {std::move(w), std::move(wt)};
}

std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1, double t,
                                                      const PhysicalParams& prm) {
  if (t < 0.0) throw InvalidParams("t", "must be >= 0");
  spectral::require_same_grid(w0, w1, "evolve_linear");
  return evolve_linear(w0, w1, kernel_table(w0.grid(), t, prm));
}

std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1, double t,
                                                      const model::ModelParams& prm) {
  return evolve_linear(w0, w1, t, model::to_physical(prm));
}

}  // namespace sigmalab::propagator
