#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sigmalab/spectral/grid.hpp"

namespace sigmalab::spectral {

using cplx = std::complex<double>;

/// One scalar unknown stored by its Fourier-series coefficients
/// c_k = (1/V) * integral f(x) e^{-i xi_k . x} dx (rectangle rule), so that
/// f(x) = sum_k c_k e^{i xi_k . x} and ||f||_{L^2}^2 = V * sum |c_k|^2.
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid);
  SpectralField(GridPtr grid, std::vector<cplx> coeffs);

  static SpectralField from_real(GridPtr grid, const std::vector<double>& values);
  static SpectralField from_complex(GridPtr grid, const std::vector<cplx>& values);
  /// Samples f at the grid nodes; x points to n coordinates.
  static SpectralField from_function(GridPtr grid, const std::function<double(const double*)>& f);

  const SpectralGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::vector<cplx>& coeffs() noexcept { return c_; }
  const std::vector<cplx>& coeffs() const noexcept { return c_; }

  std::vector<cplx> to_complex() const;
  /// Real part of the real-space view.
  std::vector<double> to_real() const;
  /// max |Im| of the real-space view.
  double max_imag() const;
  /// max over k of |c_k - conj(c_{-k})| / max |c|.
  double hermitian_defect() const;

  bool same_grid(const SpectralField& o) const noexcept {
    return grid_ == o.grid_ || *grid_ == *o.grid_;
  }
  bool all_finite() const noexcept;
  /// sum |c_k|^2 (times V gives the squared L^2 norm).
  double coeff_energy() const noexcept;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator*=(double s);

 private:
  GridPtr grid_;
  std::vector<cplx> c_;
};

/// Throws GridMismatch unless a and b live on equal grids.
void require_same_grid(const SpectralField& a, const SpectralField& b, const char* what);

/// ||<D>^a f||_{L^2} (homogeneous = false) or ||D|^a f||_{L^2} via Plancherel.
double sobolev_norm(const SpectralField& field, double a, bool homogeneous);
/// Rectangle-rule L^r norm of the real-space view; r = infinity gives max |f|.
double lr_norm(const SpectralField& field, double r);

}  // namespace sigmalab::spectral
