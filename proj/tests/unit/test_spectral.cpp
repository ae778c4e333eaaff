#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/spectral/fft.hpp"
#include "sigmalab/spectral/field.hpp"
#include "sigmalab/spectral/grid.hpp"
#include "sigmalab/spectral/snapshot.hpp"

using namespace sigmalab;
using namespace sigmalab::spectral;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

double rectangle_l2(const GridPtr& g, const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc * g->cell_volume());
}

}  // namespace

TEST(Grid, GeometryAndFrequencies) {
  const SpectralGrid g(1, 8, M_PI);
  EXPECT_EQ(g.size(), 8u);
  EXPECT_DOUBLE_EQ(g.volume(), 2 * M_PI);
  EXPECT_DOUBLE_EQ(g.spacing(), M_PI / 4);
  EXPECT_EQ(g.signed_index(3), 3);
  EXPECT_EQ(g.signed_index(4), -4);
  EXPECT_EQ(g.signed_index(7), -1);
  EXPECT_DOUBLE_EQ(g.wavenumber(7), -1.0);
  EXPECT_DOUBLE_EQ(g.coordinate(0), -M_PI);
  EXPECT_EQ(g.xi_mag()[0], 0.0);
  EXPECT_DOUBLE_EQ(g.max_xi(), 4.0);
}

TEST(Grid, TwoDimensionalLayoutIsRowMajor) {
  const SpectralGrid g(2, 4, 2.0);
  EXPECT_EQ(g.size(), 16u);
  const auto idx = g.unflatten(6);
  EXPECT_EQ(idx[0], 1);
  EXPECT_EQ(idx[1], 2);
  const double k = M_PI / 2.0;
  EXPECT_NEAR(g.xi_mag()[6], std::hypot(k * 1, k * -2), 1e-14);
}

TEST(Grid, RejectsInvalidShapes) {
  EXPECT_THROW(SpectralGrid(0, 8, 1.0), InvalidParams);
  EXPECT_THROW(SpectralGrid(4, 8, 1.0), InvalidParams);
  EXPECT_THROW(SpectralGrid(1, 7, 1.0), InvalidParams);
  EXPECT_THROW(SpectralGrid(1, 8, 0.0), InvalidParams);
  EXPECT_THROW(SpectralGrid(3, 256, 1.0), InvalidParams);
  EXPECT_NO_THROW(SpectralGrid(3, 256, 1.0, 256));
}

TEST(Grid, FractionalSymbolAndDealiasMask) {
  const SpectralGrid g(1, 12, M_PI);
  const auto s = frac_symbol(g, 1.5);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_NEAR(s[2], std::pow(2.0, 1.5), 1e-14);
  EXPECT_EQ(frac_symbol(g, 0.0)[0], 1.0);
  const auto mask = dealias_mask(g);
  int kept = 0;
  for (int i = 0; i < 12; ++i) {
    const bool expect = std::abs(g.signed_index(i)) <= 4;
    EXPECT_EQ(mask[i] != 0, expect) << i;
    kept += mask[i];
  }
  EXPECT_EQ(kept, 9);
}

TEST(Fft, RoundTripRecoversSamples) {
  for (int n : {1, 2, 3}) {
    const auto g = make_grid(n, n == 3 ? 8 : 16, 3.0);
    const auto v = random_values(g->size(), 11 + n);
    const auto f = SpectralField::from_real(g, v);
    const auto back = f.to_real();
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_NEAR(back[i], v[i], 1e-12);
    EXPECT_LT(f.max_imag(), 1e-12);
    EXPECT_LT(f.hermitian_defect(), 1e-12);
  }
}

TEST(Fft, ParsevalWithVolumeScaling) {
  const auto g = make_grid(2, 32, 5.0);
  const auto v = random_values(g->size(), 3);
  const auto f = SpectralField::from_real(g, v);
  const double coeff = std::sqrt(g->volume() * f.coeff_energy());
  EXPECT_NEAR(coeff, rectangle_l2(g, v), 1e-10 * coeff);
  EXPECT_NEAR(sobolev_norm(f, 0.0, true), coeff, 1e-12 * coeff);
}

TEST(Fft, GaussianCoefficientsMatchContinuousTransform) {
  // c_k = (1/2L) int e^{-x^2} e^{-i xi x} dx = sqrt(pi) e^{-xi^2/4} / (2L)
  const double L = 20.0;
  const auto g = make_grid(1, 256, L);
  const auto f = SpectralField::from_function(g, [](const double* x) { return std::exp(-x[0] * x[0]); });
  for (int i = 0; i < 256; ++i) {
    const double xi = g->wavenumber(i);
    const double expect = std::sqrt(M_PI) * std::exp(-xi * xi / 4.0) / (2 * L);
    ASSERT_NEAR(f.coeffs()[i].real(), expect, 1e-14) << i;
    ASSERT_NEAR(f.coeffs()[i].imag(), 0.0, 1e-14) << i;
  }
}

TEST(Fft, ForwardInverseAreAdjointScaled) {
  const SpectralGrid g(1, 16, 1.0);
  std::vector<cplx> x(16), y(16), z(16);
  for (int i = 0; i < 16; ++i) x[i] = cplx(std::sin(i), std::cos(3 * i));
  forward(g, x.data(), y.data());
  inverse(g, y.data(), z.data());
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(z[i] - x[i]), 0.0, 1e-13);
}

TEST(Field, SobolevNormOfSingleMode) {
  const double L = M_PI;
  const auto g = make_grid(1, 64, L);
  const int k = 3;
  const auto f = SpectralField::from_function(g, [&](const double* x) { return std::cos(k * x[0]); });
  const double l2 = std::sqrt(g->volume() / 2.0);
  EXPECT_NEAR(sobolev_norm(f, 0.0, true), l2, 1e-12);
  EXPECT_NEAR(sobolev_norm(f, 1.5, true), std::pow(k, 1.5) * l2, 1e-10);
  EXPECT_NEAR(sobolev_norm(f, 1.0, false), std::sqrt(1.0 + k * k) * l2, 1e-10);
  EXPECT_THROW(sobolev_norm(f, -1.0, true), InvalidParams);
}

TEST(Field, LrNorms) {
  const auto g = make_grid(1, 128, M_PI);
  const auto f = SpectralField::from_function(g, [](const double* x) { return 2.0 * std::sin(x[0]); });
  EXPECT_NEAR(lr_norm(f, INFINITY), 2.0, 1e-3);
  // ||2 sin||_1 = 8; |sin| has kinks, so the rectangle rule is only O(h^2) here
  EXPECT_NEAR(lr_norm(f, 1.0), 8.0, 4e-3);
  EXPECT_NEAR(lr_norm(f, 2.0), std::sqrt(4.0 * M_PI), 1e-10);
  EXPECT_THROW(lr_norm(f, 0.5), InvalidParams);
}

TEST(Field, ArithmeticAndGridChecks) {
  const auto g = make_grid(1, 16, 1.0);
  auto a = SpectralField::from_real(g, random_values(16, 1));
  const auto b = SpectralField::from_real(g, random_values(16, 2));
  auto sum = a;
  sum += b;
  for (int i = 0; i < 16; ++i) EXPECT_EQ(sum.coeffs()[i], a.coeffs()[i] + b.coeffs()[i]);
  a *= 2.0;
  EXPECT_TRUE(a.all_finite());
  const auto other = SpectralField(make_grid(1, 32, 1.0));
  EXPECT_THROW(sum += other, GridMismatch);
  EXPECT_TRUE(a.same_grid(SpectralField(make_grid(1, 16, 1.0))));
  EXPECT_THROW(SpectralField(g, std::vector<cplx>(3)), GridMismatch);
  a.coeffs()[2] = cplx(NAN, 0.0);
  EXPECT_FALSE(a.all_finite());
}

TEST(Snapshot, BinaryRoundTripIsExact) {
  const auto g = make_grid(2, 8, 1.5);
  const auto f = SpectralField::from_real(g, random_values(64, 5));
  std::stringstream ss;
  write_snapshot(ss, f);
  EXPECT_EQ(ss.str().size(), 4u + 4u + 8u + 64u * 8u);
  const auto back = read_snapshot(ss);
  EXPECT_TRUE(back.same_grid(f));
  const auto a = f.to_real();
  const auto b = back.to_real();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-13);
}

TEST(Snapshot, TruncatedInputThrows) {
  std::stringstream ss("abc");
  EXPECT_THROW(read_snapshot(ss), Error);
}

TEST(Snapshot, SliceCsvHasHeaderAndOneRowPerPoint) {
  const auto g = make_grid(1, 8, 1.0);
  const auto f = SpectralField::from_real(g, random_values(8, 9));
  std::ostringstream os;
  write_slice_csv(os, f);
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("x,value", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 9);
}
