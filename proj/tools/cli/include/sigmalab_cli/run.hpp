#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "sigmalab_cli/config.hpp"

namespace sigmalab::cli {

struct Failure {
  std::string case_id;
  std::string reason;
};

struct RunOutcome {
  std::filesystem::path dir;
  std::string run_id;
  std::vector<Failure> failures;
  int exit_code() const { return failures.empty() ? 0 : 1; }
};

struct RunContext {
  std::filesystem::path out = "runs";
  unsigned workers = 1;
  std::ostream* log = nullptr;  // human-readable table output; may be null
};

/// Run directory for a config: <out>/<command>-<first 12 hex digits of run id>.
std::filesystem::path run_directory(const ExperimentConfig& cfg, const std::filesystem::path& out);

/// Creates the run directory, writes manifest.json, runs the command and
/// writes its outputs plus failures.json. Numerical checks that fail are
/// returned as failures, never thrown.
RunOutcome execute(const ExperimentConfig& cfg, const RunContext& ctx);

}  // namespace sigmalab::cli
