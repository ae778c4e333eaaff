#include "sigmalab/model/params.hpp"

#include "sigmalab/errors.hpp"

namespace sigmalab::model {

namespace {

void require(bool ok, const char* field, const std::string& what) {
  if (!ok) throw InvalidParams(field, what);
}

}  // namespace

void ModelParams::validate() const {
  require(sigma.is_finite() && sigma >= Number(1), "sigma",
          "must satisfy sigma >= 1 (got " + sigma.str() + ")");
  require(delta > Number(0) && delta < sigma, "delta",
          "must satisfy 0 < delta < sigma (got delta=" + delta.str() + ", sigma=" + sigma.str() +
              ")");
  require(n >= 1, "n", "must be a positive integer (got " + std::to_string(n) + ")");
  require(p.is_finite() && p > Number(1), "p", "must satisfy p > 1 (got " + p.str() + ")");
  require(q.is_finite() && q > Number(1), "q", "must satisfy q > 1 (got " + q.str() + ")");
  require(m >= Number(1) && m <= Number(2), "m",
          "must satisfy 1 <= m <= 2 (got " + m.str() + ")");
  if (s1) require(*s1 >= Number(0) && s1->is_finite(), "s1", "must be >= 0 (got " + s1->str() + ")");
  if (s2) require(*s2 >= Number(0) && s2->is_finite(), "s2", "must be >= 0 (got " + s2->str() + ")");
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::BelowHalf:
      return "BelowHalf";
    case Regime::Half:
      return "Half";
    case Regime::AboveHalf:
      return "AboveHalf";
  }
  return "?";
}

DerivedConstants derive_constants(const ModelParams& params) {
  const Number two_delta = Number(2) * params.delta;
  DerivedConstants c;
  c.k_minus = min(params.sigma, two_delta);
  c.k_plus = max(params.sigma, two_delta);
  c.m0 = params.m == Number(2) ? Number::infinity()
                               : Number(2) * params.m / (Number(2) - params.m);
  const Number half_sigma = params.sigma / Number(2);
  if (params.delta < half_sigma) {
    c.regime = Regime::BelowHalf;
  } else if (params.delta == half_sigma) {
    c.regime = Regime::Half;
  } else {
    c.regime = Regime::AboveHalf;
  }
  return c;
}

PhysicalParams to_physical(const ModelParams& params) {
  return {params.sigma.to_double(), params.delta.to_double(), params.n, params.p.to_double(),
          params.q.to_double()};
}

}  // namespace sigmalab::model
