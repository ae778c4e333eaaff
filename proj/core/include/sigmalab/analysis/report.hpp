#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sigmalab::analysis {

/// One line of a verification report.
struct CaseResult {
  std::string case_id;
  double predicted = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // e.g. "upper bound" or the failure reason
  std::vector<std::pair<double, double>> series;  // raw (t, value) data
};

/// JSON array of {case_id, predicted, measured, tolerance, pass, note}.
void write_report_json(std::ostream& os, const std::vector<CaseResult>& cases);
/// CSV with header t,value for one case's raw series.
void write_series_csv(std::ostream& os, const CaseResult& c);

bool all_pass(const std::vector<CaseResult>& cases);

}  // namespace sigmalab::analysis
