#pragma once

#include <complex>
#include <vector>

#include "sigmalab/spectral/grid.hpp"

namespace sigmalab::spectral {

/// Real-space samples -> Fourier-series coefficients (scaled by 1/N^n and
/// phase-shifted so that coefficients refer to the origin, not to -L).
void forward(const SpectralGrid& grid, const std::complex<double>* in, std::complex<double>* out);
/// Inverse of forward().
void inverse(const SpectralGrid& grid, const std::complex<double>* in, std::complex<double>* out);

}  // namespace sigmalab::spectral
