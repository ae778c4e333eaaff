#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace sigmalab::spectral {

/// Uniform periodic grid on [-L, L)^n with N points per axis. Frequencies
/// are k*pi/L for signed k in FFT order (0, 1, ..., N/2-1, -N/2, ..., -1).
class SpectralGrid {
 public:
  static constexpr int kMaxPoints3d = 128;

  /// Throws InvalidParams for n outside {1,2,3}, odd or non-positive N,
  /// L <= 0, or N > max_points_3d when n = 3.
  SpectralGrid(int n, int points_per_axis, double half_length,
               int max_points_3d = kMaxPoints3d);

  int dim() const noexcept { return n_; }
  int points_per_axis() const noexcept { return N_; }
  double half_length() const noexcept { return L_; }
  std::size_t size() const noexcept { return size_; }
  double volume() const noexcept;        // (2L)^n
  double cell_volume() const noexcept;   // (2L/N)^n
  double spacing() const noexcept { return 2.0 * L_ / N_; }

  /// Signed integer wavenumber of FFT index i along one axis.
  int signed_index(int i) const noexcept { return i < N_ / 2 ? i : i - N_; }
  double wavenumber(int i) const noexcept;
  double coordinate(int i) const noexcept { return -L_ + i * spacing(); }

  /// Per-axis indices of a flat (row-major, last axis fastest) position.
  std::array<int, 3> unflatten(std::size_t flat) const noexcept;

  /// |xi| per mode, zero mode exactly 0.
  const std::vector<double>& xi_mag() const noexcept { return xi_mag_; }
  double max_xi() const noexcept { return max_xi_; }

  bool operator==(const SpectralGrid& o) const noexcept {
    return n_ == o.n_ && N_ == o.N_ && L_ == o.L_;
  }

 private:
  int n_;
  int N_;
  double L_;
  std::size_t size_;
  std::vector<double> xi_mag_;
  double max_xi_ = 0.0;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

GridPtr make_grid(int n, int points_per_axis, double half_length,
                  int max_points_3d = SpectralGrid::kMaxPoints3d);

/// |xi|^order per mode. The zero mode maps to 0 for order > 0 and to 1 for
/// order = 0, so Riesz potentials annihilate the mean.
std::vector<double> frac_symbol(const SpectralGrid& grid, double order);

/// 1 on modes with |k_i| <= N/3 along every axis, 0 elsewhere (2/3 rule).
std::vector<unsigned char> dealias_mask(const SpectralGrid& grid);

}  // namespace sigmalab::spectral
