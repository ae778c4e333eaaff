#pragma once

#include <iosfwd>
#include <vector>

#include "sigmalab/model/regions.hpp"

namespace sigmalab::model {

struct ExponentRange {
  Number lo;
  Number hi;
  Number step;
};

struct PhaseRow {
  Number p;
  Number q;
  RegionVerdict verdict;
};

/// Verdicts for every (p, q) on the grid and every requested theorem.
/// Theorems whose hypotheses cannot be evaluated for these params (missing
/// s1/s2, blow-up with fractional orders) are skipped.
std::vector<PhaseRow> phase_diagram(const ModelParams& base, const ExponentRange& p_range,
                                    const ExponentRange& q_range,
                                    const std::vector<Theorem>& theorems);

/// CSV with header p,q,theorem,admissible,first_violated (RFC 4180 quoting).
void write_phase_csv(std::ostream& os, const std::vector<PhaseRow>& rows);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& raw);

}  // namespace sigmalab::model
