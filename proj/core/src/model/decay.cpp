#include "sigmalab/model/decay.hpp"

#include "sigmalab/errors.hpp"

namespace sigmalab::model {

std::string_view to_string(Corollary c) { return c == Corollary::General ? "general" : "sharp"; }

DecayPrediction decay_prediction(const ModelParams& params, int j, const Number& a,
                                 Corollary corollary) {
  params.validate();
  if (j != 0 && j != 1) throw InvalidParams("j", "must be 0 or 1 (got " + std::to_string(j) + ")");
  if (a < Number(0)) throw InvalidParams("a", "must be >= 0 (got " + a.str() + ")");

  const auto c = derive_constants(params);
  const Number n(params.n);
  const Number jj(j);
  const Number two_gap = Number(2) * (c.k_plus - params.delta);
  const bool l2_only = params.m == Number(2);
  // (1/m - 1/2) vanishes for m = 2, which is exactly the L^2-L^2 line.
  const Number integrability = n / two_gap * (Number(1) / params.m - Number(1, 2));

  DecayPrediction out;
  out.j = j;
  out.a = a;
  out.corollary = corollary;
  out.loss = Number(0);
  out.reg_data0 = a + jj * (Number(2) * params.sigma - c.k_plus);
  out.reg_data1 = positive_part(a + (jj - Number(1)) * c.k_plus);

  if (corollary == Corollary::General) {
    out.exponent_data0 = -integrability - (a + jj * c.k_minus) / two_gap;
    out.exponent_data1 = out.exponent_data0 + Number(1);
    return out;
  }

  if (l2_only) {
    if (c.regime != Regime::Half) {
      throw DomainError("sharp L^2-L^2 estimate needs delta = sigma/2 when m = 2 (m0 is infinite, "
                        "so n > m0*k- cannot hold)");
    }
  } else if (n <= c.m0 * c.k_minus) {
    throw DomainError("sharp estimate needs n > m0*k- (n=" + n.str() +
                      ", m0*k-=" + (c.m0 * c.k_minus).str() + ")");
  }
  out.exponent_data0 =
      -integrability - (a + jj * (Number(2) * params.sigma - c.k_minus)) / two_gap;
  out.exponent_data1 = out.exponent_data0 + c.k_minus / two_gap;
  return out;
}

}  // namespace sigmalab::model
