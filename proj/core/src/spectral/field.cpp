#include "sigmalab/spectral/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigmalab/errors.hpp"
#include "sigmalab/spectral/fft.hpp"

namespace sigmalab::spectral {

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)), c_(grid_->size()) {}

SpectralField::SpectralField(GridPtr grid, std::vector<cplx> coeffs)
    : grid_(std::move(grid)), c_(std::move(coeffs)) {
  if (c_.size() != grid_->size()) throw GridMismatch("coefficient count does not match grid");
}

SpectralField SpectralField::from_real(GridPtr grid, const std::vector<double>& values) {
  if (values.size() != grid->size()) throw GridMismatch("sample count does not match grid");
  std::vector<cplx> tmp(values.begin(), values.end());
  SpectralField f(grid);
  forward(*grid, tmp.data(), f.c_.data());
  return f;
}

SpectralField SpectralField::from_complex(GridPtr grid, const std::vector<cplx>& values) {
  if (values.size() != grid->size()) throw GridMismatch("sample count does not match grid");
  SpectralField f(grid);
  forward(*grid, values.data(), f.c_.data());
  return f;
}

SpectralField SpectralField::from_function(GridPtr grid,
                                           const std::function<double(const double*)>& fn) {
  std::vector<double> vals(grid->size());
  double x[3] = {0.0, 0.0, 0.0};
  for (std::size_t f = 0; f < grid->size(); ++f) {
    const auto idx = grid->unflatten(f);
    for (int d = 0; d < grid->dim(); ++d) {
      x[d] = grid->coordinate(idx[static_cast<std::size_t>(d)]);
    }
    vals[f] = fn(x);
  }
  return from_real(std::move(grid), vals);
}

std::vector<cplx> SpectralField::to_complex() const {
  std::vector<cplx> out(c_.size());
  inverse(*grid_, c_.data(), out.data());
  return out;
}

std::vector<double> SpectralField::to_real() const {
  const auto z = to_complex();
  std::vector<double> out(z.size());
  std::transform(z.begin(), z.end(), out.begin(), [](const cplx& v) { return v.real(); });
  return out;
}

double SpectralField::max_imag() const {
  double m = 0.0;
  for (const auto& v : to_complex()) m = std::max(m, std::abs(v.imag()));
  return m;
}

double SpectralField::hermitian_defect() const {
  const auto& g = *grid_;
  const int N = g.points_per_axis();
  double scale = 0.0;
  for (const auto& v : c_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t f = 0; f < g.size(); ++f) {
    const auto idx = g.unflatten(f);
    std::size_t mirror = 0;
    for (int d = 0; d < g.dim(); ++d) {
      const int i = idx[static_cast<std::size_t>(d)];
      mirror = mirror * static_cast<std::size_t>(N) + static_cast<std::size_t>((N - i) % N);
    }
    worst = std::max(worst, std::abs(c_[f] - std::conj(c_[mirror])));
  }
  return worst / scale;
}

bool SpectralField::all_finite() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

double SpectralField::coeff_energy() const noexcept {
  double s = 0.0;
  for (const auto& v : c_) s += std::norm(v);
  return s;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*this, o, "field addition");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* what) {
  if (!a.same_grid(b)) throw GridMismatch(std::string(what) + ": fields live on different grids");
}

double sobolev_norm(const SpectralField& field, double a, bool homogeneous) {
  if (a < 0.0) throw InvalidParams("a", "must be >= 0");
  const auto& xi = field.grid().xi_mag();
  const auto& c = field.coeffs();
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    double w = 1.0;
    if (homogeneous) {
      if (a > 0.0) w = xi[k] == 0.0 ? 0.0 : std::pow(xi[k], 2.0 * a);
    } else if (a > 0.0) {
      w = std::pow(1.0 + xi[k] * xi[k], a);
    }
    s += w * std::norm(c[k]);
  }
  return std::sqrt(field.grid().volume() * s);
}

double lr_norm(const SpectralField& field, double r) {
  if (!(r >= 1.0)) throw InvalidParams("r", "must be in [1, inf]");
  const auto z = field.to_complex();
  if (std::isinf(r)) {
    double m = 0.0;
    for (const auto& v : z) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : z) s += std::pow(std::abs(v), r);
  return std::pow(field.grid().cell_volume() * s, 1.0 / r);
}

}  // namespace sigmalab::spectral
