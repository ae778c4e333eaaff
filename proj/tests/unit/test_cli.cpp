#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigmalab_cli/config.hpp"
#include "sigmalab_cli/run.hpp"

using namespace sigmalab;
using namespace sigmalab::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sigmalab_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string config_error_path(const std::string& yaml) {
  try {
    parse_config(yaml);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<accepted>";
}

}  // namespace

TEST(Config, DefaultsAreMaterialized) {
  const auto cfg = parse_config("command: rates\n");
  EXPECT_EQ(cfg.command, Command::Rates);
  const auto j = resolved_json(cfg);
  for (const char* key : {"params", "grid", "time", "rates", "regions", "simulate", "lifespan",
                          "linear", "lemmas", "report", "seed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["params"]["sigma"], "1");
  EXPECT_EQ(j["params"]["delta"], "1/2");
  EXPECT_EQ(j["simulate"]["coupling"], "UU");
}

TEST(Config, ParsesExactParameters) {
  const auto cfg = parse_config(
      "command: rates\nparams: {sigma: 3/2, delta: 0.125, n: 3, m: 5/4, p: 2, q: 4}\n");
  EXPECT_EQ(cfg.params.sigma, model::Number(3, 2));
  EXPECT_EQ(cfg.params.delta, model::Number(1, 8));
  EXPECT_EQ(cfg.params.m, model::Number(5, 4));
  EXPECT_EQ(cfg.params.n, 3);
}

TEST(Config, ErrorsNameTheFieldPath) {
  EXPECT_EQ(config_error_path("params: {sigma: 1}"), "command");
  EXPECT_EQ(config_error_path("command: fly"), "command");
  EXPECT_EQ(config_error_path("command: rates\nparams: {sigma: 1, delta: 3}"), "params.delta");
  EXPECT_EQ(config_error_path("command: rates\nparams: {sigma: x}"), "params.sigma");
  EXPECT_EQ(config_error_path("command: rates\nparams: {zeta: 1}"), "params.zeta");
  EXPECT_EQ(config_error_path("command: rates\ntime: {dt: -1}"), "time.dt");
  EXPECT_EQ(config_error_path("command: simulate\nsimulate: {u0: {profile: square}}"),
            "simulate.u0.profile");
  EXPECT_EQ(config_error_path("command: simulate\nsimulate: {coupling: AB}"), "simulate.coupling");
  EXPECT_EQ(config_error_path("command: rates\nrates: {pairs: [{j: 2}]}"), "rates.pairs[0].j");
  EXPECT_EQ(config_error_path("command: regions\nregions: {theorems: [T9]}"), "regions.theorems[0]");
  EXPECT_EQ(config_error_path("command: sweep-lifespan\nlifespan: {eps_count: 3}"),
            "lifespan.eps_count");
  EXPECT_EQ(config_error_path("command: [rates"), "<document>");
}

TEST(Config, ScheduleOrdersAcceptFractions) {
  const auto cfg = parse_config("command: simulate\nsimulate: {schedule: [{j: 0, a: 1/2}, {j: 1, a: 0.25}]}\n");
  ASSERT_EQ(cfg.simulate.schedule.size(), 2u);
  EXPECT_DOUBLE_EQ(cfg.simulate.schedule[0].a, 0.5);
  EXPECT_DOUBLE_EQ(cfg.simulate.schedule[1].a, 0.25);
  EXPECT_EQ(config_error_path("command: simulate\nsimulate: {schedule: [{j: 0, a: -1}]}\n"),
            "simulate.schedule[0].a");
}

TEST(Config, RequestedCommandMustAgree) {
  EXPECT_EQ(parse_config("{}", Command::Regions).command, Command::Regions);
  EXPECT_THROW(parse_config("command: rates", Command::Regions), ConfigError);
}

TEST(Config, RunIdIsAContentHash) {
  const auto a = parse_config("command: rates\nparams: {sigma: 3/2}");
  const auto b = parse_config("params: {sigma: 1.5}\ncommand: rates\n");
  EXPECT_EQ(run_id(a), run_id(b));
  EXPECT_EQ(run_id(a).size(), 64u);
  auto c = a;
  c.seed = 7;
  EXPECT_NE(run_id(a), run_id(c));
}

TEST(Config, OrderKeywordsResolve) {
  model::ModelParams p;
  p.sigma = model::Number(1);
  p.delta = model::Number(3, 4);
  EXPECT_EQ(resolve_order("k+", p), model::Number(3, 2));
  EXPECT_EQ(resolve_order("k-", p), model::Number(1));
  EXPECT_EQ(resolve_order("1/3", p), model::Number(1, 3));
}

TEST(Run, RatesTableContainsCriticalExponentAndIsDeterministic) {
  const auto out = scratch("rates");
  const auto cfg = parse_config("command: rates\nparams: {sigma: 3/2, delta: 1/8, n: 3, m: 5/4}");
  const auto first = execute(cfg, {out, 1, nullptr});
  EXPECT_EQ(first.exit_code(), 0);
  const auto manifest = slurp(first.dir / "manifest.json");
  const auto rates = slurp(first.dir / "rates.csv");
  EXPECT_NE(slurp(first.dir / "constants.csv").find("critical_exponent,103/43"), std::string::npos);
  const auto second = execute(cfg, {out, 1, nullptr});
  EXPECT_EQ(second.dir, first.dir);
  EXPECT_EQ(slurp(second.dir / "manifest.json"), manifest);
  EXPECT_EQ(slurp(second.dir / "rates.csv"), rates);
  EXPECT_EQ(slurp(first.dir / "failures.json"), "[]\n");
}

TEST(Run, HalfRegimeNotesSingleRegime) {
  const auto out = scratch("rates_half");
  const auto r = execute(parse_config("command: rates\nparams: {sigma: 1, delta: 1/2, n: 3}"),
                         {out, 1, nullptr});
  EXPECT_NE(slurp(r.dir / "constants.csv").find("single regime"), std::string::npos);
}

TEST(Run, UnavailableSharpEstimateIsReportedAsFailure) {
  const auto out = scratch("rates_sharp");
  const auto r = execute(
      parse_config("command: rates\nparams: {sigma: 1, delta: 1/4, n: 1}\nrates: {corollaries: [sharp]}"),
      {out, 1, nullptr});
  EXPECT_EQ(r.exit_code(), 1);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_NE(r.failures[0].reason.find("n"), std::string::npos);
  const auto failures = nlohmann::json::parse(slurp(r.dir / "failures.json"));
  EXPECT_EQ(failures.size(), r.failures.size());
}

TEST(Run, SinglePointRegionsGiveOneRowPerTheorem) {
  const auto out = scratch("regions");
  const auto r = execute(parse_config(R"(command: regions
params: {sigma: 3/2, delta: 1/8, n: 3, m: 5/4}
regions: {p: {lo: 2, hi: 2, step: 1}, q: {lo: 4, hi: 4, step: 1}, theorems: [T1A]}
)"),
                         {out, 1, nullptr});
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(slurp(r.dir / "regions.csv"), "p,q,theorem,admissible,first_violated\r\n2,4,T1A,true,\r\n");
}

TEST(Run, SimulateWithoutNonlinearityPassesConsistencyCheck) {
  const auto out = scratch("simulate");
  const auto r = execute(parse_config(R"(command: simulate
params: {sigma: 1, delta: 1/4, n: 1}
grid: {points: 64, half_length: 16}
time: {horizon: 3, dt: 0.1}
simulate:
  linear_only: true
  u0: {profile: gaussian, amplitude: 1}
  v1: {profile: single-mode, amplitude: 0.2, mode: [3]}
)"),
                         {out, 1, nullptr});
  EXPECT_EQ(r.exit_code(), 0);
  const auto report = nlohmann::json::parse(slurp(r.dir / "report.json"));
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0]["case_id"], "linear_consistency");
  EXPECT_TRUE(report[0]["pass"].get<bool>());
  EXPECT_TRUE(fs::exists(r.dir / "norms.csv"));
  EXPECT_TRUE(fs::exists(r.dir / "u_final.bin"));
}

TEST(Run, ExpectedOutcomeMismatchFails) {
  const auto out = scratch("simulate_expect");
  const auto r = execute(parse_config(R"(command: simulate
params: {sigma: 1, delta: 1/2, n: 1}
grid: {points: 32, half_length: 8}
time: {horizon: 1, dt: 0.1}
simulate: {expect_blowup: true, u0: {profile: bump, amplitude: 0.01}}
)"),
                         {out, 1, nullptr});
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.failures.at(0).case_id, "blowup_expectation");
}

TEST(Run, ReportAggregatesEarlierRuns) {
  const auto out = scratch("report");
  execute(parse_config(R"(command: simulate
params: {sigma: 1, delta: 1/2, n: 1}
grid: {points: 32, half_length: 8}
time: {horizon: 1, dt: 0.1}
simulate: {linear_only: true, u0: {profile: gaussian, amplitude: 1}}
)"),
          {out, 1, nullptr});
  const auto rep = execute(parse_config("command: report"), {out, 1, nullptr});
  EXPECT_EQ(rep.exit_code(), 0);
  const auto summary = slurp(rep.dir / "summary.csv");
  EXPECT_NE(summary.find("linear_consistency"), std::string::npos);
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 2);
}
