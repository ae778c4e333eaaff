#include "sigmalab/model/phase_diagram.hpp"

#include <ostream>

#include "sigmalab/errors.hpp"

namespace sigmalab::model {

namespace {

std::vector<Number> expand(const ExponentRange& r, const char* field) {
  if (!(r.step > Number(0))) throw InvalidParams(field, "step must be positive");
  if (r.hi < r.lo) throw InvalidParams(field, "hi must be >= lo");
  std::vector<Number> out;
  // Exact stepping when the inputs are rational; the last point is included
  // when it lands on hi.
  for (Number x = r.lo; x <= r.hi; x += r.step) out.push_back(x);
  return out;
}

}  // namespace

std::vector<PhaseRow> phase_diagram(const ModelParams& base, const ExponentRange& p_range,
                                    const ExponentRange& q_range,
                                    const std::vector<Theorem>& theorems) {
  const auto ps = expand(p_range, "p_range");
  const auto qs = expand(q_range, "q_range");
  std::vector<PhaseRow> rows;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      ModelParams prm = base;
      prm.p = p;
      prm.q = q;
      for (Theorem th : theorems) {
        try {
          rows.push_back({p, q, check_region(prm, th)});
        } catch (const MissingRegularity&) {
        } catch (const ScopeError&) {
        }
      }
    }
  }
  return rows;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_phase_csv(std::ostream& os, const std::vector<PhaseRow>& rows) {
  os << "p,q,theorem,admissible,first_violated\r\n";
  for (const auto& r : rows) {
    const Constraint* v = r.verdict.first_violated();
    os << csv_field(r.p.decimal_str()) << ',' << csv_field(r.q.decimal_str()) << ','
       << to_string(r.verdict.theorem) << ',' << (r.verdict.admissible ? "true" : "false") << ','
       << csv_field(v ? v->describe() : "") << "\r\n";
  }
}

}  // namespace sigmalab::model
