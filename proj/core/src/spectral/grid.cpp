#include "sigmalab/spectral/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigmalab/errors.hpp"

namespace sigmalab::spectral {

SpectralGrid::SpectralGrid(int n, int points_per_axis, double half_length, int max_points_3d)
    : n_(n), N_(points_per_axis), L_(half_length) {
  if (n < 1 || n > 3) throw InvalidParams("grid.n", "must be 1, 2 or 3 (got " + std::to_string(n) + ")");
  if (N_ < 2 || N_ % 2 != 0) {
    throw InvalidParams("grid.points", "must be an even integer >= 2 (got " + std::to_string(N_) + ")");
  }
  if (!(L_ > 0.0) || !std::isfinite(L_)) throw InvalidParams("grid.half_length", "must be positive");
  if (n == 3 && N_ > max_points_3d) {
    throw InvalidParams("grid.points", "3-D grids are capped at " + std::to_string(max_points_3d) +
                                           " points per axis");
  }
  size_ = 1;
  for (int d = 0; d < n_; ++d) size_ *= static_cast<std::size_t>(N_);

  std::vector<double> k2(static_cast<std::size_t>(N_));
  for (int i = 0; i < N_; ++i) {
    const double w = wavenumber(i);
    k2[static_cast<std::size_t>(i)] = w * w;
  }
  xi_mag_.resize(size_);
  for (std::size_t f = 0; f < size_; ++f) {
    const auto idx = unflatten(f);
    double s = 0.0;
    for (int d = 0; d < n_; ++d) s += k2[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
    xi_mag_[f] = std::sqrt(s);
  }
  xi_mag_[0] = 0.0;
  max_xi_ = *std::max_element(xi_mag_.begin(), xi_mag_.end());
}

double SpectralGrid::volume() const noexcept { return std::pow(2.0 * L_, n_); }
double SpectralGrid::cell_volume() const noexcept { return std::pow(spacing(), n_); }

double SpectralGrid::wavenumber(int i) const noexcept {
  return signed_index(i) * std::numbers::pi / L_;
}

std::array<int, 3> SpectralGrid::unflatten(std::size_t flat) const noexcept {
  std::array<int, 3> idx{0, 0, 0};
  const auto N = static_cast<std::size_t>(N_);
  for (int d = n_ - 1; d >= 0; --d) {
    idx[static_cast<std::size_t>(d)] = static_cast<int>(flat % N);
    flat /= N;
  }
  return idx;
}

GridPtr make_grid(int n, int points_per_axis, double half_length, int max_points_3d) {
  return std::make_shared<const SpectralGrid>(n, points_per_axis, half_length, max_points_3d);
}

std::vector<double> frac_symbol(const SpectralGrid& grid, double order) {
  if (order < 0.0) throw InvalidParams("order", "must be >= 0");
  const auto& xi = grid.xi_mag();
  std::vector<double> out(xi.size());
  if (order == 0.0) {
    std::fill(out.begin(), out.end(), 1.0);
    return out;
  }
  for (std::size_t k = 0; k < xi.size(); ++k) out[k] = xi[k] == 0.0 ? 0.0 : std::pow(xi[k], order);
  return out;
}

std::vector<unsigned char> dealias_mask(const SpectralGrid& grid) {
  std::vector<unsigned char> mask(grid.size());
  const int cut = grid.points_per_axis() / 3;
  for (std::size_t f = 0; f < grid.size(); ++f) {
    const auto idx = grid.unflatten(f);
    bool keep = true;
    for (int d = 0; d < grid.dim(); ++d) {
      keep = keep && std::abs(grid.signed_index(idx[static_cast<std::size_t>(d)])) <= cut;
    }
    mask[f] = keep ? 1 : 0;
  }
  return mask;
}

}  // namespace sigmalab::spectral
