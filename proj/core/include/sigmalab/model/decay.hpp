#pragma once

#include <string_view>

#include "sigmalab/model/number.hpp"
#include "sigmalab/model/params.hpp"

namespace sigmalab::model {

/// Which family of linear estimates a prediction comes from.
///   General: valid in every dimension; the w1 exponent is the w0 one plus 1.
///   Sharp:   needs n > m0*k-; the w1 exponent is the w0 one plus k-/(2(k+ - delta)).
enum class Corollary { General, Sharp };

std::string_view to_string(Corollary c);

/// Predicted time exponents for ||d_t^j |D|^a w(t)||_{L^2}: the bound reads
/// (1+t)^{exponent_data0} ||w0|| + (1+t)^{exponent_data1} ||w1||.
struct DecayPrediction {
  int j = 0;
  Number a;
  Number exponent_data0;
  Number exponent_data1;
  Number loss;  // [eps(.)]^+ when a loss-of-decay applies; 0 for linear estimates
  Corollary corollary = Corollary::Sharp;
  Number reg_data0;  // Sobolev order required of w0
  Number reg_data1;  // Sobolev order required of w1
};

/// Linear decay exponents. With m = 2 the pure L^2 branch is returned.
///
/// Sharp with n <= m0*k- throws DomainError. For m = 2 (m0 = infinity) the
/// sharp branch is only available when delta = sigma/2, where the estimate
/// holds in every dimension.
DecayPrediction decay_prediction(const ModelParams& params, int j, const Number& a,
                                 Corollary corollary);

}  // namespace sigmalab::model
