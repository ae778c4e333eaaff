#pragma once

#include <utility>

#include "sigmalab/propagator/kernels.hpp"
#include "sigmalab/spectral/field.hpp"

namespace sigmalab::propagator {

using spectral::SpectralField;

/// Exact solution of the linear problem at time t from (w0, w1), mode by
/// mode. Returns (w(t), w_t(t)). Throws GridMismatch.
std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1, double t,
                                                      const PhysicalParams& prm);
std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1, double t,
                                                      const model::ModelParams& prm);

/// Same, with a precomputed kernel table for the grid.
std::pair<SpectralField, SpectralField> evolve_linear(const SpectralField& w0,
                                                      const SpectralField& w1,
                                                      const KernelTable& table);

}  // namespace sigmalab::propagator
