#include "sigmalab/analysis/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>

namespace sigmalab::analysis {

void write_report_json(std::ostream& os, const std::vector<CaseResult>& cases) {
  auto arr = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j;
    j["case_id"] = c.case_id;
    j["predicted"] = c.predicted;
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

void write_series_csv(std::ostream& os, const CaseResult& c) {
  os << "t,value\r\n";
  const auto old = os.precision(17);
  for (const auto& [t, v] : c.series) os << t << ',' << v << "\r\n";
  os.precision(old);
}

bool all_pass(const std::vector<CaseResult>& cases) {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

}  // namespace sigmalab::analysis
