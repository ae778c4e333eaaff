#include "sigmalab/semilinear/system.hpp"

#include <cmath>

#include "sigmalab/errors.hpp"
#include "sigmalab/spectral/fft.hpp"

namespace sigmalab::semilinear {

namespace {

using spectral::cplx;

// |Re f|^power evaluated pointwise, back to coefficients, 2/3-rule truncated.
SpectralField power_of(const SpectralField& f, double power,
                       const std::vector<unsigned char>& mask) {
  const auto& g = f.grid();
  std::vector<cplx> x(g.size());
  spectral::inverse(g, f.coeffs().data(), x.data());
  for (auto& v : x) {
    const double m = std::max(std::abs(v.real()), 1e-300);
    v = std::exp(power * std::log(m));
  }
  SpectralField out(f.grid_ptr());
  spectral::forward(g, x.data(), out.coeffs().data());
  auto& c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!mask[k]) c[k] = 0.0;
  }
  return out;
}

// Masks are the same for every field on a grid; keep the last one around.
const std::vector<unsigned char>& mask_for(const spectral::SpectralGrid& g) {
  thread_local spectral::SpectralGrid last(1, 2, 1.0);
  thread_local std::vector<unsigned char> mask = spectral::dealias_mask(last);
  if (!(last == g)) {
    last = g;
    mask = spectral::dealias_mask(g);
  }
  return mask;
}

}  // namespace

std::string_view to_string(CouplingKind k) {
  switch (k) {
    case CouplingKind::UU:
      return "UU";
    case CouplingKind::TT:
      return "TT";
    case CouplingKind::UT:
      return "UT";
  }
  return "?";
}

std::optional<CouplingKind> parse_coupling(std::string_view s) {
  if (s == "UU" || s == "uu") return CouplingKind::UU;
  if (s == "TT" || s == "tt") return CouplingKind::TT;
  if (s == "UT" || s == "ut") return CouplingKind::UT;
  return std::nullopt;
}

SystemState::SystemState(SpectralField u0, SpectralField u1, SpectralField v0, SpectralField v1)
    : u(std::move(u0)), ut(std::move(u1)), v(std::move(v0)), vt(std::move(v1)) {
  spectral::require_same_grid(u, ut, "state");
  spectral::require_same_grid(u, v, "state");
  spectral::require_same_grid(u, vt, "state");
}

double SystemState::max_l2() const {
  const double vol = u.grid().volume();
  const double e = std::max({u.coeff_energy(), ut.coeff_energy(), v.coeff_energy(),
                             vt.coeff_energy()});
  return std::sqrt(vol * e);
}

bool SystemState::all_finite() const {
  return u.all_finite() && ut.all_finite() && v.all_finite() && vt.all_finite();
}

std::pair<SpectralField, SpectralField> nonlinearity(const SystemState& s, CouplingKind kind,
                                                     const PhysicalParams& prm) {
  const auto& mask = mask_for(s.u.grid());
  switch (kind) {
    case CouplingKind::UU:
      return {power_of(s.v, prm.p, mask), power_of(s.u, prm.q, mask)};
    case CouplingKind::TT:
      return {power_of(s.vt, prm.p, mask), power_of(s.ut, prm.q, mask)};
    case CouplingKind::UT:
      return {power_of(s.v, prm.p, mask), power_of(s.ut, prm.q, mask)};
  }
  throw Error("unknown coupling kind");
}

namespace {

struct Linear {
  std::vector<cplx> w, wt;
};

Linear linear_part(const SpectralField& w0, const SpectralField& w1,
                   const propagator::KernelTable& tab) {
  const auto& a = w0.coeffs();
  const auto& b = w1.coeffs();
  Linear out{std::vector<cplx>(a.size()), std::vector<cplx>(a.size())};
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.w[k] = tab.k0[k] * a[k] + tab.k1[k] * b[k];
    out.wt[k] = tab.dk0[k] * a[k] + tab.dk1[k] * b[k];
  }
  return out;
}

}  // namespace

SystemState step(const SystemState& s, const propagator::KernelTable& tab, CouplingKind kind,
                 const PhysicalParams& prm, bool linear_only) {
  const double dt = tab.t;
  const auto lu = linear_part(s.u, s.ut, tab);
  const auto lv = linear_part(s.v, s.vt, tab);
  SystemState next = s;
  next.t = s.t + dt;
  next.step_count = s.step_count + 1;

  if (linear_only) {
    next.u.coeffs() = lu.w;
    next.ut.coeffs() = lu.wt;
    next.v.coeffs() = lv.w;
    next.vt.coeffs() = lv.wt;
  } else {
    const auto [f, g] = nonlinearity(s, kind, prm);
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t n = fc.size();

    // Predictor: rectangle rule with the left value.
    SystemState pred = next;
    for (std::size_t k = 0; k < n; ++k) {
      pred.u.coeffs()[k] = lu.w[k] + dt * tab.k1[k] * fc[k];
      pred.ut.coeffs()[k] = lu.wt[k] + dt * tab.dk1[k] * fc[k];
      pred.v.coeffs()[k] = lv.w[k] + dt * tab.k1[k] * gc[k];
      pred.vt.coeffs()[k] = lv.wt[k] + dt * tab.dk1[k] * gc[k];
    }
    const auto [fp, gp] = nonlinearity(pred, kind, prm);
    const auto& fpc = fp.coeffs();
    const auto& gpc = gp.coeffs();

    // Corrector: trapezoid on tau -> K(dt - tau) F(tau); K1(0) = 0, dK1(0) = 1.
    const double h = 0.5 * dt;
    for (std::size_t k = 0; k < n; ++k) {
      next.u.coeffs()[k] = lu.w[k] + h * tab.k1[k] * fc[k];
      next.ut.coeffs()[k] = lu.wt[k] + h * (tab.dk1[k] * fc[k] + fpc[k]);
      next.v.coeffs()[k] = lv.w[k] + h * tab.k1[k] * gc[k];
      next.vt.coeffs()[k] = lv.wt[k] + h * (tab.dk1[k] * gc[k] + gpc[k]);
    }
  }
  if (!next.all_finite()) throw NonFiniteState(next.t, "non-finite coefficient after step");
  return next;
}

SystemState step(const SystemState& s, double dt, CouplingKind kind, const PhysicalParams& prm,
                 bool linear_only) {
  if (!(dt > 0.0)) throw InvalidParams("dt", "must be positive");
  return step(s, propagator::kernel_table(s.u.grid(), dt, prm), kind, prm, linear_only);
}

}  // namespace sigmalab::semilinear
