#include "sigmalab_cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "sigmalab/analysis/lemmas.hpp"
#include "sigmalab/analysis/lifespan.hpp"
#include "sigmalab/analysis/linear.hpp"
#include "sigmalab/analysis/parallel.hpp"
#include "sigmalab/analysis/report.hpp"
#include "sigmalab/propagator/evolve.hpp"
#include "sigmalab/semilinear/integrate.hpp"
#include "sigmalab/spectral/snapshot.hpp"

namespace sigmalab::cli {

namespace fs = std::filesystem;
using analysis::CaseResult;
using model::Number;
using nlohmann::json;
using spectral::SpectralField;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write '" + path.string() + "'");
  return os;
}

void write_json(const fs::path& path, const json& j) { open_out(path) << j.dump(2) << '\n'; }

void log_line(const RunContext& ctx, const std::string& line) {
  if (ctx.log) *ctx.log << line << '\n';
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

void add_case_failures(const std::vector<CaseResult>& cases, std::vector<Failure>& out) {
  for (const auto& c : cases) {
    if (c.pass) continue;
    std::string reason = "measured " + fmt(c.measured) + " vs predicted " + fmt(c.predicted) +
                         " (tolerance " + fmt(c.tolerance) + ")";
    if (!c.note.empty()) reason += "; " + c.note;
    out.push_back({c.case_id, reason});
  }
}

void write_cases(const fs::path& dir, const std::vector<CaseResult>& cases, const RunContext& ctx) {
  {
    auto os = open_out(dir / "report.json");
    analysis::write_report_json(os, cases);
  }
  fs::create_directories(dir / "series");
  for (const auto& c : cases) {
    if (c.series.empty()) continue;
    auto os = open_out(dir / "series" / (c.case_id + ".csv"));
    analysis::write_series_csv(os, c);
  }
  for (const auto& c : cases) {
    log_line(ctx, (c.pass ? "PASS  " : "FAIL  ") + c.case_id + "  predicted " + fmt(c.predicted) +
                      "  measured " + fmt(c.measured) + "  tol " + fmt(c.tolerance));
  }
}

// ---------------------------------------------------------------- rates

void cmd_rates(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
               std::vector<Failure>& failures) {
  const auto& p = cfg.params;
  const auto dc = model::derive_constants(p);
  std::vector<std::pair<std::string, std::string>> constants = {
      {"k_minus", dc.k_minus.str()},
      {"k_plus", dc.k_plus.str()},
      {"m0", dc.m0.str()},
      {"regime", std::string(model::to_string(dc.regime))},
  };
  if (dc.regime == model::Regime::Half) {
    constants.emplace_back("note", "k- = k+: single regime");
  }
  try {
    const Number crit = model::critical_exponent(p);
    constants.emplace_back("critical_exponent", crit.str());
  } catch (const DomainError& e) {
    constants.emplace_back("critical_exponent", std::string("undefined: ") + e.what());
  }
  for (const auto& [name, x] : {std::pair{"loss_p", p.p}, std::pair{"loss_q", p.q}}) {
    try {
      constants.emplace_back(name, model::loss_of_decay(p, x).str());
    } catch (const Error& e) {
      constants.emplace_back(name, std::string("undefined: ") + e.what());
    }
  }
  {
    auto os = open_out(dir / "constants.csv");
    os << "key,value\r\n";
    for (const auto& [k, v] : constants) {
      os << model::csv_field(k) << ',' << model::csv_field(v) << "\r\n";
      log_line(ctx, k + " = " + v);
    }
  }

  auto os = open_out(dir / "rates.csv");
  os << "corollary,j,a,exponent_w0,exponent_w1,reg_w0,reg_w1,status\r\n";
  log_line(ctx, "corollary  j  a        exp(w0)      exp(w1)      reg(w0)  reg(w1)");
  for (auto cor : cfg.rates.corollaries) {
    for (const auto& pair : cfg.rates.pairs) {
      const Number a = resolve_order(pair.a, p);
      const std::string cor_name(model::to_string(cor));
      const std::string id = cor_name + ":j" + std::to_string(pair.j) + ":a" + a.str();
      try {
        const auto d = model::decay_prediction(p, pair.j, a, cor);
        os << cor_name << ',' << pair.j << ',' << a.str() << ',' << d.exponent_data0.str() << ','
           << d.exponent_data1.str() << ',' << d.reg_data0.str() << ',' << d.reg_data1.str()
           << ",ok\r\n";
        std::ostringstream line;
        line << std::left << std::setw(11) << cor_name << std::setw(3) << pair.j << std::setw(9)
             << a.str() << std::setw(13) << d.exponent_data0.str() << std::setw(13)
             << d.exponent_data1.str() << std::setw(9) << d.reg_data0.str() << d.reg_data1.str();
        log_line(ctx, line.str());
      } catch (const Error& e) {
        os << cor_name << ',' << pair.j << ',' << a.str() << ",,,,," << model::csv_field(e.what())
           << "\r\n";
        log_line(ctx, cor_name + " j=" + std::to_string(pair.j) + " a=" + a.str() +
                          ": unavailable: " + e.what());
        failures.push_back({id, e.what()});
      }
    }
  }
}

// ---------------------------------------------------------------- regions

void cmd_regions(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx) {
  const auto rows =
      model::phase_diagram(cfg.params, cfg.regions.p, cfg.regions.q, cfg.regions.theorems);
  auto os = open_out(dir / "regions.csv");
  model::write_phase_csv(os, rows);
  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& r : rows) {
    auto& t = tally[std::string(model::to_string(r.verdict.theorem))];
    ++t.second;
    if (r.verdict.admissible) ++t.first;
  }
  for (const auto& [th, t] : tally) {
    log_line(ctx, th + ": " + std::to_string(t.first) + " of " + std::to_string(t.second) +
                      " grid points admissible");
  }
}

// ---------------------------------------------------------------- simulate

SpectralField make_data(const spectral::GridPtr& grid, const DataSpec& d, const std::string& path) {
  const int n = grid->dim();
  if (d.profile == "zero" || d.amplitude == 0.0) return SpectralField(grid);
  const double w2 = d.width * d.width;
  if (d.profile == "gaussian") {
    return SpectralField::from_function(grid, [&](const double* x) {
      double r2 = 0.0;
      for (int i = 0; i < n; ++i) r2 += x[i] * x[i];
      return d.amplitude * std::exp(-r2 / w2);
    });
  }
  if (d.profile == "bump") {
    return SpectralField::from_function(grid, [&](const double* x) {
      double r2 = 0.0;
      for (int i = 0; i < n; ++i) r2 += x[i] * x[i];
      const double s = r2 / w2;
      return s < 1.0 ? d.amplitude * std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
    });
  }
  // single-mode
  if (static_cast<int>(d.mode.size()) != n) {
    throw ConfigError(path + ".mode", "needs one integer per dimension");
  }
  const double k0 = std::numbers::pi / grid->half_length();
  for (int m : d.mode) {
    if (2 * std::abs(m) >= grid->points_per_axis()) {
      throw ConfigError(path + ".mode", "index beyond the Nyquist frequency");
    }
  }
  return SpectralField::from_function(grid, [&](const double* x) {
    double phase = 0.0;
    for (int i = 0; i < n; ++i) phase += k0 * d.mode[i] * x[i];
    return d.amplitude * std::cos(phase);
  });
}

double rel_difference(const SpectralField& got, const SpectralField& want) {
  SpectralField diff = got;
  SpectralField neg = want;
  neg *= -1.0;
  diff += neg;
  const double ref = spectral::sobolev_norm(want, 0.0, false);
  const double err = spectral::sobolev_norm(diff, 0.0, false);
  return ref > 0.0 ? err / ref : err;
}

void cmd_simulate(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
                  std::vector<Failure>& failures) {
  const auto& sim = cfg.simulate;
  const auto grid = spectral::make_grid(cfg.params.n, cfg.grid.points, cfg.grid.half_length,
                                        cfg.grid.max_points_3d);
  const semilinear::SystemState init(make_data(grid, sim.u0, "simulate.u0"),
                                     make_data(grid, sim.u1, "simulate.u1"),
                                     make_data(grid, sim.v0, "simulate.v0"),
                                     make_data(grid, sim.v1, "simulate.v1"));
  semilinear::IntegrateOptions opt;
  opt.horizon = cfg.time.horizon;
  opt.dt = cfg.time.dt;
  opt.dt_min = cfg.time.dt_min;
  opt.adaptive = cfg.time.adaptive;
  opt.threshold_factor = cfg.time.threshold_factor;
  opt.blowup_threshold = cfg.time.blowup_threshold;
  opt.first_sample = cfg.time.first_sample;
  opt.samples_per_decade = cfg.time.samples_per_decade;
  opt.schedule = sim.schedule;
  opt.linear_only = sim.linear_only;

  const auto phys = model::to_physical(cfg.params);
  const auto res = semilinear::integrate(init, sim.coupling, phys, opt);
  {
    auto os = open_out(dir / "norms.csv");
    res.record.write_csv(os);
  }
  json summary = {{"t_final", res.record.t_final},
                  {"steps", res.record.steps},
                  {"rejected_steps", res.record.rejected_steps},
                  {"dt_final", res.record.dt_final},
                  {"blew_up", res.blowup.blew_up},
                  {"trigger", std::string(semilinear::to_string(res.blowup.trigger))},
                  {"t_detect", res.blowup.t_detect ? json(*res.blowup.t_detect) : json(nullptr)},
                  {"peak_norm", res.blowup.peak_norm}};
  write_json(dir / "summary.json", summary);
  log_line(ctx, "t_final = " + fmt(res.record.t_final) + ", steps = " +
                    std::to_string(res.record.steps) +
                    (res.blowup.blew_up ? ", blow-up detected at t = " + fmt(*res.blowup.t_detect)
                                        : ", no blow-up"));

  if (sim.snapshots && res.final_state.all_finite()) {
    spectral::write_snapshot((dir / "u_final.bin").string(), res.final_state.u);
    spectral::write_snapshot((dir / "v_final.bin").string(), res.final_state.v);
    if (grid->dim() == 1) {
      auto us = open_out(dir / "u_final.csv");
      spectral::write_slice_csv(us, res.final_state.u);
      auto vs = open_out(dir / "v_final.csv");
      spectral::write_slice_csv(vs, res.final_state.v);
    }
  }

  std::vector<CaseResult> cases;
  if (sim.linear_only && !res.blowup.blew_up) {
    const double t = res.record.t_final;
    const auto [u, ut] = propagator::evolve_linear(init.u, init.ut, t, phys);
    const auto [v, vt] = propagator::evolve_linear(init.v, init.vt, t, phys);
    const double err = std::max({rel_difference(res.final_state.u, u),
                                 rel_difference(res.final_state.ut, ut),
                                 rel_difference(res.final_state.v, v),
                                 rel_difference(res.final_state.vt, vt)});
    CaseResult c;
    c.case_id = "linear_consistency";
    c.predicted = 0.0;
    c.measured = err;
    c.tolerance = sim.linear_tolerance;
    c.pass = err <= sim.linear_tolerance;
    c.note = "relative H^0 distance to the exact propagator";
    cases.push_back(c);
  }
  if (sim.expect_blowup) {
    CaseResult c;
    c.case_id = "blowup_expectation";
    c.predicted = *sim.expect_blowup ? 1.0 : 0.0;
    c.measured = res.blowup.blew_up ? 1.0 : 0.0;
    c.pass = res.blowup.blew_up == *sim.expect_blowup;
    c.note = *sim.expect_blowup ? "blow-up expected" : "global solution expected";
    cases.push_back(c);
  }
  write_cases(dir, cases, ctx);
  add_case_failures(cases, failures);
}

// ---------------------------------------------------------------- lifespan

void cmd_lifespan(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
                  std::vector<Failure>& failures) {
  const auto& ls = cfg.lifespan;
  analysis::LifespanSetup setup;
  setup.points = ls.points;
  setup.half_length = ls.half_length;
  setup.width = ls.width;
  setup.dt = ls.dt;
  setup.horizon = ls.horizon;
  setup.threshold_factor = ls.threshold_factor;
  setup.kind = ls.coupling;
  setup.rel_tolerance = ls.rel_tolerance;
  const auto eps = analysis::eps_decade(ls.eps_lo, ls.eps_hi, ls.eps_count);
  const std::string id = "lifespan_p" + cfg.params.p.str() + "_q" + cfg.params.q.str();
  std::vector<CaseResult> cases;
  try {
    const auto curve = analysis::lifespan_sweep(cfg.params, eps, setup, ctx.workers);
    auto os = open_out(dir / "lifespan.csv");
    os << "eps,t_detect\r\n" << std::setprecision(17);
    for (std::size_t i = 0; i < curve.eps_values.size(); ++i) {
      os << curve.eps_values[i] << ',' << curve.t_detect[i] << "\r\n";
    }
    cases.push_back(analysis::to_case_result(id, curve, ls.rel_tolerance));
  } catch (const Error& e) {
    failures.push_back({id, e.what()});
    log_line(ctx, "FAIL  " + id + ": " + e.what());
  }
  write_cases(dir, cases, ctx);
  add_case_failures(cases, failures);
}

// ---------------------------------------------------------------- verify-linear

analysis::Datum parse_datum(const std::string& s) {
  if (s == "w0") return analysis::Datum::W0;
  if (s == "w1") return analysis::Datum::W1;
  return analysis::Datum::Both;
}

void cmd_linear(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
                std::vector<Failure>& failures) {
  std::vector<analysis::LinearCase> cases;
  if (cfg.linear.cases.empty()) {
    cases = analysis::default_linear_matrix();
  } else {
    for (const auto& s : cfg.linear.cases) {
      analysis::LinearCase c;
      c.id = s.id;
      c.params = s.params;
      c.j = s.j;
      c.a = resolve_order(s.a, s.params);
      c.corollary = s.corollary;
      c.datum = parse_datum(s.datum);
      cases.push_back(c);
    }
  }
  for (auto& c : cases) {
    c.tolerance = cfg.linear.tolerance;
    c.window = {cfg.linear.t_lo, cfg.linear.t_hi};
    c.points = cfg.linear.points;
  }
  std::vector<CaseResult> results(cases.size());
  analysis::parallel_for(cases.size(), ctx.workers, [&](std::size_t i) {
    try {
      results[i] = analysis::to_case_result(cases[i], analysis::verify_linear_decay(cases[i]));
    } catch (const Error& e) {
      results[i].case_id = cases[i].id;
      results[i].pass = false;
      results[i].note = e.what();
    }
  });
  write_cases(dir, results, ctx);
  add_case_failures(results, failures);
}

// ---------------------------------------------------------------- verify-lemmas

void cmd_lemmas(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
                std::vector<Failure>& failures) {
  auto cases = analysis::run_lemma_suite(ctx.workers);
  const auto& lm = cfg.lemmas;
  std::vector<CaseResult> gn(lm.gn_cases.size());
  analysis::parallel_for(lm.gn_cases.size(), ctx.workers, [&](std::size_t i) {
    const auto& g = lm.gn_cases[i];
    CaseResult& c = gn[i];
    std::ostringstream id;
    id << "gn_n" << g.n << "_s" << g.s << "_sigma" << g.sigma_reg;
    c.case_id = id.str();
    c.predicted = 1.0;
    c.tolerance = lm.gn_tolerance;
    try {
      const auto r = analysis::gn_check(2.0, 2.0, 2.0, g.s, g.sigma_reg, g.n, lm.gn_samples,
                                        cfg.seed + i);
      c.measured = r.worst_ratio;
      const bool endpoint = g.s == 0.0 || g.s == g.sigma_reg;
      if (endpoint) {
        c.pass = std::abs(r.worst_ratio - 1.0) <= lm.gn_tolerance &&
                 std::abs(r.best_ratio - 1.0) <= lm.gn_tolerance;
        c.note = "endpoint: ratio identically 1 (min " + fmt(r.best_ratio, 17) + ")";
      } else {
        c.pass = r.worst_ratio <= 1.0 + lm.gn_tolerance;
        c.note = "theta " + fmt(r.theta) + ", min ratio " + fmt(r.best_ratio);
      }
    } catch (const Error& e) {
      c.pass = false;
      c.note = e.what();
    }
  });
  cases.insert(cases.end(), gn.begin(), gn.end());
  write_cases(dir, cases, ctx);
  add_case_failures(cases, failures);
}

// ---------------------------------------------------------------- report

void cmd_report(const ExperimentConfig& cfg, const fs::path& dir, const RunContext& ctx,
                std::vector<Failure>& failures) {
  std::vector<fs::path> runs;
  if (!cfg.report.runs.empty()) {
    for (const auto& r : cfg.report.runs) runs.emplace_back(r);
  } else if (fs::exists(ctx.out)) {
    for (const auto& e : fs::directory_iterator(ctx.out)) {
      if (e.is_directory() && e.path() != dir && fs::exists(e.path() / "report.json")) {
        runs.push_back(e.path());
      }
    }
    std::sort(runs.begin(), runs.end());
  }
  auto os = open_out(dir / "summary.csv");
  os << "run,command,case_id,predicted,measured,tolerance,pass,note\r\n" << std::setprecision(17);
  int total = 0;
  int passed = 0;
  for (const auto& run : runs) {
    const std::string name = run.filename().string();
    std::ifstream in(run / "report.json");
    if (!in) {
      failures.push_back({name, "missing report.json"});
      continue;
    }
    std::string command = "?";
    if (std::ifstream mf(run / "manifest.json"); mf) {
      try {
        command = json::parse(mf).at("config").at("command").get<std::string>();
      } catch (const json::exception&) {
      }
    }
    json arr;
    try {
      arr = json::parse(in);
    } catch (const json::exception& e) {
      failures.push_back({name, std::string("unreadable report.json: ") + e.what()});
      continue;
    }
    for (const auto& c : arr) {
      const auto num = [&](const char* k) {
        return c.contains(k) && c[k].is_number() ? fmt(c[k].get<double>(), 17) : std::string();
      };
      const bool pass = c.value("pass", false);
      const std::string case_id = c.value("case_id", std::string("?"));
      ++total;
      passed += pass ? 1 : 0;
      os << model::csv_field(name) << ',' << command << ',' << model::csv_field(case_id) << ','
         << num("predicted") << ',' << num("measured") << ',' << num("tolerance") << ','
         << (pass ? "true" : "false") << ',' << model::csv_field(c.value("note", std::string()))
         << "\r\n";
      if (!pass) failures.push_back({name + "/" + case_id, c.value("note", std::string("failed"))});
    }
  }
  log_line(ctx, std::to_string(passed) + " of " + std::to_string(total) + " checks pass across " +
                    std::to_string(runs.size()) + " runs");
}

}  // namespace

fs::path run_directory(const ExperimentConfig& cfg, const fs::path& out) {
  return out / (std::string(to_string(cfg.command)) + "-" + run_id(cfg).substr(0, 12));
}

RunOutcome execute(const ExperimentConfig& cfg, const RunContext& ctx) {
  RunOutcome outcome;
  outcome.run_id = run_id(cfg);
  outcome.dir = run_directory(cfg, ctx.out);
  fs::create_directories(outcome.dir);
  write_json(outcome.dir / "manifest.json",
             {{"tool", "sigmalab"}, {"run_id", outcome.run_id}, {"config", resolved_json(cfg)}});

  auto& failures = outcome.failures;
  switch (cfg.command) {
    case Command::Rates:
      cmd_rates(cfg, outcome.dir, ctx, failures);
      break;
    case Command::Regions:
      cmd_regions(cfg, outcome.dir, ctx);
      break;
    case Command::Simulate:
      cmd_simulate(cfg, outcome.dir, ctx, failures);
      break;
    case Command::SweepLifespan:
      cmd_lifespan(cfg, outcome.dir, ctx, failures);
      break;
    case Command::VerifyLinear:
      cmd_linear(cfg, outcome.dir, ctx, failures);
      break;
    case Command::VerifyLemmas:
      cmd_lemmas(cfg, outcome.dir, ctx, failures);
      break;
    case Command::Report:
      cmd_report(cfg, outcome.dir, ctx, failures);
      break;
  }

  json list = json::array();
  for (const auto& f : failures) list.push_back({{"case_id", f.case_id}, {"reason", f.reason}});
  write_json(outcome.dir / "failures.json", list);
  return outcome;
}

}  // namespace sigmalab::cli
