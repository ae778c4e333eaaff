#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigmalab/semilinear/system.hpp"

namespace sigmalab::semilinear {

/// ||d_t^j |D|^a w|| with a = 0 meaning the plain L^2 norm.
struct NormSpec {
  int j = 0;
  double a = 0.0;
};

/// "u:j0:a0.5" style identifier.
std::string norm_id(char component, const NormSpec& spec);

struct NormSample {
  double t;
  std::string norm_id;
  double value;
};

enum class BlowupTrigger { None, NormThreshold, NonFinite };
std::string_view to_string(BlowupTrigger t);

struct BlowupReport {
  bool blew_up = false;
  std::optional<double> t_detect;
  BlowupTrigger trigger = BlowupTrigger::None;
  double peak_norm = 0.0;
};

struct IntegrateOptions {
  double horizon = 1.0;
  double dt = 1e-2;
  double dt_min = 1e-6;
  std::vector<NormSpec> schedule = {{0, 0.0}};
  /// Absolute threshold on the largest component L^2 norm; when unset it is
  /// threshold_factor times the initial value.
  std::optional<double> blowup_threshold;
  double threshold_factor = 1e6;
  double first_sample = 0.1;
  int samples_per_decade = 20;
  bool linear_only = false;
  bool adaptive = true;
};

struct RunRecord {
  std::vector<NormSample> samples;
  double t_final = 0.0;
  long steps = 0;
  long rejected_steps = 0;
  double dt_final = 0.0;

  /// CSV with header t,norm_id,value.
  void write_csv(std::ostream& os) const;
  /// Values of one norm id in time order.
  std::vector<std::pair<double, double>> series(const std::string& id) const;
};

/// Sample times: 0, then 10^{k/samples_per_decade} within [first_sample,
/// horizon], then the horizon itself.
std::vector<double> sample_times(const IntegrateOptions& opt);

struct IntegrateResult {
  RunRecord record;
  BlowupReport blowup;
  SystemState final_state;
};

/// Advances to the horizon or until blow-up is detected. Steps land exactly on
/// the sample times. When the largest norm more than doubles within one step
/// the step is rejected and dt halved, down to dt_min.
IntegrateResult integrate(const SystemState& initial, CouplingKind kind, const PhysicalParams& prm,
                          const IntegrateOptions& opt);

}  // namespace sigmalab::semilinear
