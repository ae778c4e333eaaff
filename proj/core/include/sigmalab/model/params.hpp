#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sigmalab/model/number.hpp"

namespace sigmalab::model {

/// Parameters of u_tt + (-Δ)^σ u + (-Δ)^δ u_t = f together with the
/// nonlinearity exponents and data-regularity indices.
///
/// m ranges over [1, 2]. m < 2 is additional L^m integrability of the data;
/// m = 2 means no extra integrability (pure L^2 data) and is only accepted by
/// the linear decay predictions, never by the existence regions.
struct ModelParams {
  Number sigma{1};
  Number delta{1, 2};
  int n = 1;
  Number p{2};
  Number q{2};
  Number m{1};
  std::optional<Number> s1;
  std::optional<Number> s2;

  /// Throws InvalidParams naming the offending field.
  void validate() const;

  /// Validates and returns *this, for builder-style construction.
  const ModelParams& checked() const {
    validate();
    return *this;
  }
};

enum class Regime { BelowHalf, Half, AboveHalf };

std::string_view to_string(Regime r);

struct DerivedConstants {
  Number k_minus;  // min{σ, 2δ}
  Number k_plus;   // max{σ, 2δ}
  Number m0;       // 2m/(2-m); +infinity when m = 2
  Regime regime;
};

DerivedConstants derive_constants(const ModelParams& params);

/// Floating-point view used at the simulation boundary.
struct PhysicalParams {
  double sigma;
  double delta;
  int n;
  double p;
  double q;
};

PhysicalParams to_physical(const ModelParams& params);

}  // namespace sigmalab::model
