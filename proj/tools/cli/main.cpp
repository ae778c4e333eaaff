#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <thread>

#include "sigmalab_cli/config.hpp"
#include "sigmalab_cli/run.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out = "runs";
  unsigned workers = 0;
  std::optional<std::uint64_t> seed;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace sigmalab::cli;
  CLI::App app{"Simulation and verification lab for structurally damped sigma-evolution systems"};
  app.require_subcommand(1);
  Flags flags;

  const std::pair<Command, const char*> commands[] = {
      {Command::Rates, "predicted decay exponents, loss terms and data regularity"},
      {Command::Regions, "(p, q) phase diagram of every existence theorem and blow-up"},
      {Command::Simulate, "integrate the coupled system and record norms"},
      {Command::SweepLifespan, "blow-up time versus data amplitude, with slope fit"},
      {Command::VerifyLinear, "measured vs predicted linear decay slopes"},
      {Command::VerifyLemmas, "frequency-integral, kernel and interpolation checks"},
      {Command::Report, "aggregate report.json files of earlier runs"},
  };
  for (const auto& [cmd, help] : commands) {
    auto* sub = app.add_subcommand(std::string(to_string(cmd)), help);
    sub->add_option("--config", flags.config, "YAML configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "parent directory of run directories")
        ->capture_default_str();
    sub->add_option("--workers", flags.workers, "worker threads (0 = hardware concurrency)");
    sub->add_option("--seed", flags.seed, "seed for sampled checks (overrides the config)");
  }
  CLI11_PARSE(app, argc, argv);

  const auto* chosen = app.get_subcommands().front();
  const Command cmd = *parse_command(chosen->get_name());
  try {
    ExperimentConfig cfg =
        flags.config.empty() ? parse_config("{}", cmd) : load_config(flags.config, cmd);
    if (flags.seed) cfg.seed = *flags.seed;
    RunContext ctx;
    ctx.out = flags.out;
    ctx.workers = flags.workers ? flags.workers : std::max(1u, std::thread::hardware_concurrency());
    ctx.log = &std::cout;
    const RunOutcome outcome = execute(cfg, ctx);
    std::cout << "run " << outcome.run_id.substr(0, 12) << " -> " << outcome.dir.string() << '\n';
    for (const auto& f : outcome.failures) {
      std::cerr << "failure: " << f.case_id << ": " << f.reason << '\n';
    }
    return outcome.exit_code();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const sigmalab::InvalidParams& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
