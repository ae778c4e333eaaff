#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigmalab/model/params.hpp"
#include "sigmalab/propagator/kernels.hpp"
#include "sigmalab/spectral/field.hpp"

namespace sigmalab::semilinear {

using model::PhysicalParams;
using spectral::GridPtr;
using spectral::SpectralField;

/// Which components feed the two nonlinearities.
///   UU: u_tt + ... = |v|^p,   v_tt + ... = |u|^q
///   TT: u_tt + ... = |v_t|^p, v_tt + ... = |u_t|^q
///   UT: u_tt + ... = |v|^p,   v_tt + ... = |u_t|^q
enum class CouplingKind { UU, TT, UT };

std::string_view to_string(CouplingKind k);
std::optional<CouplingKind> parse_coupling(std::string_view s);

struct SystemState {
  double t = 0.0;
  SpectralField u, ut, v, vt;
  long step_count = 0;

  explicit SystemState(const GridPtr& grid) : u(grid), ut(grid), v(grid), vt(grid) {}
  SystemState(SpectralField u0, SpectralField u1, SpectralField v0, SpectralField v1);

  /// Largest L^2 norm among the four components.
  double max_l2() const;
  bool all_finite() const;
};

/// (f for the u equation, g for the v equation): pointwise powers of the
/// real parts of the designated components, transformed back and truncated
/// by the 2/3 rule.
std::pair<SpectralField, SpectralField> nonlinearity(const SystemState& s, CouplingKind kind,
                                                     const PhysicalParams& prm);

/// One exponential trapezoid step with kernels precomputed for its dt.
/// Throws NonFiniteState when the result contains NaN or Inf.
SystemState step(const SystemState& s, const propagator::KernelTable& tab, CouplingKind kind,
                 const PhysicalParams& prm, bool linear_only = false);

/// Convenience overload that builds the kernel table.
SystemState step(const SystemState& s, double dt, CouplingKind kind, const PhysicalParams& prm,
                 bool linear_only = false);

}  // namespace sigmalab::semilinear
