#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigmalab/errors.hpp"
#include "sigmalab/model/decay.hpp"
#include "sigmalab/model/phase_diagram.hpp"
#include "sigmalab/model/regions.hpp"
#include "sigmalab/semilinear/integrate.hpp"

namespace sigmalab::cli {

enum class Command { Rates, Regions, Simulate, SweepLifespan, VerifyLinear, VerifyLemmas, Report };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view s);

/// Rejected configuration; `path` is the dotted field path ("params.delta").
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Named initial profiles: zero, gaussian (amplitude * exp(-|x|^2/width^2)),
/// bump (compactly supported, radius = width) and single-mode
/// (amplitude * cos(xi . x) with integer wave indices `mode`).
struct DataSpec {
  std::string profile = "zero";
  double amplitude = 0.0;
  double width = 1.0;
  std::vector<int> mode;
};

struct GridSpec {
  int points = 256;
  double half_length = 32.0;
  int max_points_3d = 128;
};

struct TimeSpec {
  double horizon = 10.0;
  double dt = 1e-2;
  double dt_min = 1e-6;
  bool adaptive = true;
  double threshold_factor = 1e6;
  std::optional<double> blowup_threshold;
  double first_sample = 0.1;
  int samples_per_decade = 20;
};

struct RatePair {
  int j = 0;
  std::string a = "0";  // a rational or one of "k+", "k-"
};

struct RatesSpec {
  std::vector<RatePair> pairs = {{0, "0"}, {1, "0"}, {0, "k+"}};
  std::vector<model::Corollary> corollaries = {model::Corollary::General, model::Corollary::Sharp};
};

struct RegionsSpec {
  model::ExponentRange p{model::Number(11, 10), model::Number(6), model::Number(1, 10)};
  model::ExponentRange q{model::Number(11, 10), model::Number(6), model::Number(1, 10)};
  std::vector<model::Theorem> theorems = model::all_theorems();
};

struct SimulateSpec {
  semilinear::CouplingKind coupling = semilinear::CouplingKind::UU;
  bool linear_only = false;
  std::vector<semilinear::NormSpec> schedule = {{0, 0.0}};
  DataSpec u0, u1, v0, v1;
  /// Expected outcome; when set, a mismatch fails the run.
  std::optional<bool> expect_blowup;
  /// Tolerance of the suppressed-nonlinearity comparison against the exact
  /// linear propagator.
  double linear_tolerance = 1e-9;
  bool snapshots = true;
};

struct LifespanSpec {
  double eps_lo = 0.01;
  double eps_hi = 0.1;
  int eps_count = 5;
  int points = 1024;
  double half_length = 64.0;
  double width = 1.0;
  double dt = 0.05;
  double horizon = 1e5;
  double threshold_factor = 1e6;
  double rel_tolerance = 0.25;
  semilinear::CouplingKind coupling = semilinear::CouplingKind::UU;
};

struct LinearCaseSpec {
  std::string id;
  model::ModelParams params;
  int j = 0;
  std::string a = "0";
  model::Corollary corollary = model::Corollary::Sharp;
  std::string datum = "w1";
};

struct LinearSpec {
  /// Empty means the built-in regression matrix.
  std::vector<LinearCaseSpec> cases;
  double tolerance = 0.05;
  double t_lo = 1e2;
  double t_hi = 1e4;
  int points = 16;
};

struct GnCaseSpec {
  double s = 1.0;
  double sigma_reg = 2.0;
  int n = 2;
};

struct LemmasSpec {
  int gn_samples = 1000;
  std::vector<GnCaseSpec> gn_cases = {{1.0, 2.0, 2}, {0.0, 2.0, 2}, {2.0, 2.0, 2},
                                      {0.5, 1.5, 3}, {0.3, 1.0, 1}};
  double gn_tolerance = 1e-9;
};

struct ReportSpec {
  /// Run directories to aggregate; empty means every run under --out.
  std::vector<std::string> runs;
};

struct ExperimentConfig {
  Command command = Command::Rates;
  model::ModelParams params;
  GridSpec grid;
  TimeSpec time;
  RatesSpec rates;
  RegionsSpec regions;
  SimulateSpec simulate;
  LifespanSpec lifespan;
  LinearSpec linear;
  LemmasSpec lemmas;
  ReportSpec report;
  std::uint64_t seed = 0;
};

/// Parses a YAML document. Unknown keys and invalid values raise ConfigError
/// naming the field path. `requested` supplies the command when the document
/// has none and must agree with it otherwise.
ExperimentConfig parse_config(const std::string& yaml_text,
                              std::optional<Command> requested = std::nullopt);
ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<Command> requested = std::nullopt);

/// Fully resolved configuration (every default materialized) as JSON.
nlohmann::json resolved_json(const ExperimentConfig& cfg);

/// Hex SHA-256 of the canonical resolved JSON.
std::string run_id(const ExperimentConfig& cfg);

/// Resolves "k+", "k-" or a rational literal against the params.
model::Number resolve_order(const std::string& text, const model::ModelParams& params);

}  // namespace sigmalab::cli
