#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/model/number.hpp"
#include "sigmalab/model/params.hpp"

namespace sigmalab::model {

/// Global-existence theorems for the weakly coupled systems, plus the
/// blow-up statement for integer orders.
enum class Theorem { T1A, T1B, T2A, T2B, T3, T4, T5, T6, Blowup };

std::string_view to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
/// Every theorem, in declaration order.
const std::vector<Theorem>& all_theorems();

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal };

std::string_view to_string(Relation r);

/// One inequality of a theorem's hypotheses, both sides evaluated.
struct Constraint {
  std::string id;
  Number lhs;
  Relation relation;
  Number rhs;
  bool satisfied;

  std::string describe() const;  // "id: lhs <= rhs"
};

struct RegionVerdict {
  Theorem theorem;
  bool admissible = true;
  std::vector<Constraint> violated;
  std::vector<Constraint> evaluated;  // every constraint, violated or not

  const Constraint* first_violated() const {
    return violated.empty() ? nullptr : &violated.front();
  }
};

/// 1 + m(k⁺+σ)/(n − m k⁻). Throws DomainError when n ≤ m k⁻.
Number critical_exponent(const ModelParams& params);

/// Evaluates every hypothesis of `theorem` literally (no short-circuit).
/// Throws MissingRegularity when the theorem needs s1/s2 and they are unset,
/// ScopeError for Theorem::Blowup with non-integer orders.
RegionVerdict check_region(const ModelParams& params, Theorem theorem);

/// [ε(exponent)]⁺ with ε(x) = 1 − n(x−1)/(2m(k⁺−δ)) + x k⁻/(2(k⁺−δ)) + eps_slack.
Number loss_of_decay(const ModelParams& params, const Number& exponent,
                     const Number& eps_slack = Number(1, 1000));

/// n ≤ k⁻ + 2σ(1+max{p,q})/(pq−1), valid only for integer 0 < δ < σ.
/// admissible = blow-up asserted for data with positive mean.
RegionVerdict blowup_condition(const ModelParams& params);

/// −(2σ−k⁻)/(k⁻ + 2σ(q+1)/(pq) − n) with q := max{p,q}, p := min{p,q}.
/// Throws ScopeError for non-integer orders, DomainError when the
/// denominator is not positive.
Number lifespan_exponent(const ModelParams& params);

}  // namespace sigmalab::model
