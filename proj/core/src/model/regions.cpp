#include "sigmalab/model/regions.hpp"

#include <array>

#include "sigmalab/errors.hpp"

namespace sigmalab::model {

namespace {

constexpr std::array kTheoremNames = {"T1A", "T1B", "T2A", "T2B", "T3",
                                      "T4",  "T5",  "T6",  "Blowup"};

bool holds(const Number& lhs, Relation rel, const Number& rhs) {
  switch (rel) {
    case Relation::Less:
      return lhs < rhs;
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::Greater:
      return lhs > rhs;
    case Relation::GreaterEqual:
      return lhs >= rhs;
    case Relation::Equal:
      return lhs == rhs;
  }
  return false;
}

class Checker {
 public:
  explicit Checker(Theorem t) { verdict_.theorem = t; }

  bool check(std::string id, const Number& lhs, Relation rel, const Number& rhs) {
    Constraint c{std::move(id), lhs, rel, rhs, holds(lhs, rel, rhs)};
    if (!c.satisfied) {
      verdict_.admissible = false;
      verdict_.violated.push_back(c);
    }
    verdict_.evaluated.push_back(std::move(c));
    return verdict_.evaluated.back().satisfied;
  }

  RegionVerdict finish() && { return std::move(verdict_); }

 private:
  RegionVerdict verdict_;
};

struct Ctx {
  const ModelParams& prm;
  DerivedConstants c;
  Number n;
  Number pmin;
  Number pmax;
};

Ctx make_ctx(const ModelParams& params) {
  params.validate();
  return {params, derive_constants(params), Number(params.n), min(params.p, params.q),
          max(params.p, params.q)};
}

// Hypotheses shared by every existence theorem: m < 2 and n > m₀k⁻.
void common_hypotheses(Checker& ck, const Ctx& x) {
  ck.check("m_below_two", x.prm.m, Relation::Less, Number(2));
  ck.check("dimension_gain", x.n, Relation::Greater, x.c.m0 * x.c.k_minus);
}

// The critical exponent is only defined for n > m k⁻; when it is not, report
// that instead of the comparisons that depend on it.
std::optional<Number> critical_or_report(Checker& ck, const Ctx& x) {
  const Number mk = x.prm.m * x.c.k_minus;
  if (!ck.check("critical_exponent_defined", x.n, Relation::Greater, mk)) return std::nullopt;
  return critical_exponent(x.prm);
}

// First condition of the loss-of-decay block plus the sandwich
// min{p,q} ≤ crit < max{p,q}.
void loss_of_decay_exponents(Checker& ck, const Ctx& x) {
  const Number& m = x.prm.m;
  const Number balance =
      m * (x.c.k_minus + (x.c.k_plus + x.prm.sigma) * (Number(1) + x.pmax) /
                             (x.prm.p * x.prm.q - Number(1)));
  ck.check("exponent_balance", balance, Relation::Less, x.n);
  if (const auto crit = critical_or_report(ck, x)) {
    ck.check("min_exponent_at_most_critical", x.pmin, Relation::LessEqual, *crit);
    ck.check("critical_below_max_exponent", *crit, Relation::Less, x.pmax);
  }
}

void above_critical(Checker& ck, const Ctx& x) {
  if (const auto crit = critical_or_report(ck, x)) {
    ck.check("min_exponent_above_critical", x.pmin, Relation::Greater, *crit);
  }
}

// Gagliardo–Nirenberg admissibility for energy solutions (s1 = s2 = k⁺).
void gn_energy(Checker& ck, const Ctx& x) {
  const Number two_over_m = Number(2) / x.prm.m;
  const Number two_kp = Number(2) * x.c.k_plus;
  const Number upper_dim = Number(4) * x.c.k_plus / (Number(2) - x.prm.m);
  ck.check("gn_p_lower", x.prm.p, Relation::GreaterEqual, two_over_m);
  ck.check("gn_q_lower", x.prm.q, Relation::GreaterEqual, two_over_m);
  if (x.n <= two_kp) return;
  if (!ck.check("gn_dimension_range", x.n, Relation::LessEqual, upper_dim)) return;
  const Number cap = x.n / (x.n - two_kp);
  ck.check("gn_p_upper", x.prm.p, Relation::LessEqual, cap);
  ck.check("gn_q_upper", x.prm.q, Relation::LessEqual, cap);
}

// Gagliardo–Nirenberg admissibility for Sobolev solutions with s1 ≤ s2 < k⁺.
void gn_sobolev(Checker& ck, const Ctx& x, const Number& s1, const Number& s2) {
  const Number two_over_m = Number(2) / x.prm.m;
  const Number upper_dim = Number(4) * s1 / (Number(2) - x.prm.m);
  ck.check("gn_p_lower", x.prm.p, Relation::GreaterEqual, two_over_m);
  ck.check("gn_q_lower", x.prm.q, Relation::GreaterEqual, two_over_m);
  const Number two_s1 = Number(2) * s1;
  const Number two_s2 = Number(2) * s2;
  if (x.n <= two_s1) return;
  if (x.n <= two_s2) {
    if (!ck.check("gn_dimension_range", x.n, Relation::LessEqual, min(two_s2, upper_dim))) {
      return;
    }
    ck.check("gn_q_upper", x.prm.q, Relation::LessEqual, x.n / (x.n - two_s1));
    return;
  }
  if (!ck.check("gn_dimension_range", x.n, Relation::LessEqual, upper_dim)) return;
  ck.check("gn_p_upper", x.prm.p, Relation::LessEqual, x.n / (x.n - two_s2));
  ck.check("gn_q_upper", x.prm.q, Relation::LessEqual, x.n / (x.n - two_s1));
}

// Regularity-dependent exponent floors p ≥ 1 + m s1/(n − m k⁻), q ≥ 1 + m s2/(n − m k⁻).
void regularity_floors(Checker& ck, const Ctx& x, const Number& s1, const Number& s2,
                       bool p_only = false) {
  const Number mk = x.prm.m * x.c.k_minus;
  if (x.n <= mk) return;  // reported through critical_exponent_defined
  ck.check("p_regularity_floor", x.prm.p, Relation::GreaterEqual,
           Number(1) + x.prm.m * s1 / (x.n - mk));
  if (!p_only) {
    ck.check("q_regularity_floor", x.prm.q, Relation::GreaterEqual,
             Number(1) + x.prm.m * s2 / (x.n - mk));
  }
}

// 1 + m(s + k⁻ − 2σ)/(n + 2m(k⁺ − 2δ)), the floor for time-derivative nonlinearities.
Number derivative_floor(const Ctx& x, const Number& s) {
  return Number(1) + x.prm.m * (s + x.c.k_minus - Number(2) * x.prm.sigma) /
                         (x.n + Number(2) * x.prm.m * (x.c.k_plus - Number(2) * x.prm.delta));
}

std::pair<Number, Number> need_s(const ModelParams& prm, Theorem t) {
  if (!prm.s1 || !prm.s2) {
    throw MissingRegularity(std::string(to_string(t)) + " requires both s1 and s2");
  }
  return {*prm.s1, *prm.s2};
}

}  // namespace

std::string_view to_string(Theorem t) { return kTheoremNames[static_cast<std::size_t>(t)]; }

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (name == kTheoremNames[i]) return static_cast<Theorem>(i);
  }
  return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = {Theorem::T1A, Theorem::T1B, Theorem::T2A,
                                           Theorem::T2B, Theorem::T3,  Theorem::T4,
                                           Theorem::T5,  Theorem::T6,  Theorem::Blowup};
  return all;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less:
      return "<";
    case Relation::LessEqual:
      return "<=";
    case Relation::Greater:
      return ">";
    case Relation::GreaterEqual:
      return ">=";
    case Relation::Equal:
      return "==";
  }
  return "?";
}

std::string Constraint::describe() const {
  return id + ": " + lhs.str() + " " + std::string(to_string(relation)) + " " + rhs.str();
}

Number critical_exponent(const ModelParams& params) {
  params.validate();
  const auto c = derive_constants(params);
  const Number n(params.n);
  const Number mk = params.m * c.k_minus;
  if (n <= mk) {
    throw DomainError("critical exponent needs n > m*k- (n=" + n.str() + ", m*k-=" + mk.str() +
                      ")");
  }
  return Number(1) + params.m * (c.k_plus + params.sigma) / (n - mk);
}

RegionVerdict check_region(const ModelParams& params, Theorem theorem) {
  if (theorem == Theorem::Blowup) return blowup_condition(params);
  const Ctx x = make_ctx(params);
  Checker ck(theorem);
  const Number& kp = x.c.k_plus;
  const Number one(1);

  switch (theorem) {
    case Theorem::T1A:
    case Theorem::T1B:
      common_hypotheses(ck, x);
      gn_energy(ck, x);
      if (theorem == Theorem::T1A) {
        loss_of_decay_exponents(ck, x);
      } else {
        above_critical(ck, x);
      }
      break;

    case Theorem::T2A:
    case Theorem::T2B: {
      const auto [s1, s2] = need_s(params, theorem);
      ck.check("s1_positive", s1, Relation::Greater, Number(0));
      ck.check("s1_at_most_s2", s1, Relation::LessEqual, s2);
      ck.check("s2_below_k_plus", s2, Relation::Less, kp);
      common_hypotheses(ck, x);
      gn_sobolev(ck, x, s1, s2);
      if (theorem == Theorem::T2A) {
        loss_of_decay_exponents(ck, x);
      } else {
        above_critical(ck, x);
      }
      break;
    }

    case Theorem::T3: {
      const auto [s1, s2] = need_s(params, theorem);
      ck.check("k_plus_below_s1", s1, Relation::Greater, kp);
      ck.check("s1_at_most_s2", s1, Relation::LessEqual, s2);
      ck.check("s2_at_most_half_n_plus_k_plus", s2, Relation::LessEqual,
               x.n / Number(2) + kp);
      ck.check("regularity_gap", s2 - s1, Relation::Less, kp);
      common_hypotheses(ck, x);
      ck.check("p_chain_rule_floor", x.prm.p, Relation::Greater, one + ceil(s1 - kp));
      ck.check("q_chain_rule_floor", x.prm.q, Relation::Greater, one + ceil(s2 - kp));
      const Number two_s1 = Number(2) * s1;
      const Number two_s2 = Number(2) * s2;
      if (x.n > two_s1) {
        ck.check("gn_q_upper", x.prm.q, Relation::LessEqual,
                 one + Number(2) * kp / (x.n - two_s1));
      }
      if (x.n > two_s2) {
        ck.check("gn_p_upper", x.prm.p, Relation::LessEqual,
                 one + Number(2) * kp / (x.n - two_s2));
      }
      above_critical(ck, x);
      regularity_floors(ck, x, s1, s2);
      break;
    }

    case Theorem::T4: {
      const auto [s1, s2] = need_s(params, theorem);
      ck.check("s1_above_half_n_plus_k_plus", s1, Relation::Greater, x.n / Number(2) + kp);
      ck.check("s1_at_most_s2", s1, Relation::LessEqual, s2);
      ck.check("regularity_gap", s2 - s1, Relation::LessEqual, kp);
      common_hypotheses(ck, x);
      ck.check("p_smoothness_floor", x.prm.p, Relation::Greater, one + max(s1 - kp, one));
      ck.check("q_smoothness_floor", x.prm.q, Relation::Greater, one + max(s2 - kp, one));
      above_critical(ck, x);
      regularity_floors(ck, x, s1, s2);
      break;
    }

    case Theorem::T5: {
      if (!params.s1) throw MissingRegularity("T5 requires s (given as s1)");
      const Number s = *params.s1;
      if (params.s2) ck.check("single_regularity", *params.s2, Relation::Equal, s);
      ck.check("s_above_half_n_plus_k_plus", s, Relation::Greater, x.n / Number(2) + kp);
      common_hypotheses(ck, x);
      const Number floor1 =
          one + max(max(Number(2) * x.prm.m * x.prm.delta / x.n, s - kp), one);
      ck.check("min_exponent_smoothness_floor", x.pmin, Relation::Greater, floor1);
      ck.check("min_exponent_derivative_floor", x.pmin, Relation::GreaterEqual,
               derivative_floor(x, s));
      break;
    }

    case Theorem::T6: {
      const auto [s1, s2] = need_s(params, theorem);
      ck.check("s2_above_half_n_plus_k_plus", s2, Relation::Greater, x.n / Number(2) + kp);
      ck.check("s2_at_most_s1", s2, Relation::LessEqual, s1);
      ck.check("regularity_gap", s1 - s2, Relation::LessEqual, kp);
      common_hypotheses(ck, x);
      const Number mk = x.prm.m * x.c.k_minus;
      if (ck.check("critical_exponent_defined", x.n, Relation::Greater, mk)) {
        const Number crit_gap = x.prm.m * (kp + x.prm.sigma) / (x.n - mk);
        ck.check("p_floor", x.prm.p, Relation::Greater, one + max(max(crit_gap, s1 - kp), one));
      }
      ck.check("q_floor", x.prm.q, Relation::Greater,
               one + max(max(Number(2) * x.prm.m * x.prm.delta / x.n, s2 - kp), one));
      regularity_floors(ck, x, s1, s2, /*p_only=*/true);
      ck.check("q_derivative_floor", x.prm.q, Relation::GreaterEqual, derivative_floor(x, s2));
      break;
    }

    case Theorem::Blowup:
      break;
  }
  return std::move(ck).finish();
}

Number loss_of_decay(const ModelParams& params, const Number& exponent, const Number& eps_slack) {
  params.validate();
  const auto c = derive_constants(params);
  const Number n(params.n);
  const Number gap = c.k_plus - params.delta;
  const Number eps = Number(1) - n * (exponent - Number(1)) / (Number(2) * params.m * gap) +
                     exponent * c.k_minus / (Number(2) * gap) + eps_slack;
  return positive_part(eps);
}

namespace {

void require_integer_orders(const ModelParams& params) {
  if (!params.sigma.is_integer() || !params.delta.is_integer()) {
    throw ScopeError("blow-up result needs integer sigma and delta (got sigma=" +
                     params.sigma.str() + ", delta=" + params.delta.str() + ")");
  }
}

}  // namespace

RegionVerdict blowup_condition(const ModelParams& params) {
  params.validate();
  require_integer_orders(params);
  const auto c = derive_constants(params);
  Checker ck(Theorem::Blowup);
  const Number pmax = max(params.p, params.q);
  const Number rhs = c.k_minus + Number(2) * params.sigma * (Number(1) + pmax) /
                                     (params.p * params.q - Number(1));
  ck.check("blowup_dimension", Number(params.n), Relation::LessEqual, rhs);
  return std::move(ck).finish();
}

Number lifespan_exponent(const ModelParams& params) {
  params.validate();
  require_integer_orders(params);
  const auto c = derive_constants(params);
  const Number lo = min(params.p, params.q);
  const Number hi = max(params.p, params.q);
  const Number denom =
      c.k_minus + Number(2) * params.sigma * (hi + Number(1)) / (lo * hi) - Number(params.n);
  if (denom <= Number(0)) {
    throw DomainError("no power-law lifespan: k- + 2 sigma (q+1)/(pq) - n = " + denom.str() +
                      " is not positive");
  }
  return -(Number(2) * params.sigma - c.k_minus) / denom;
}

}  // namespace sigmalab::model
