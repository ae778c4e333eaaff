#include "sigmalab_cli/config.hpp"

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace sigmalab::cli {

using model::Number;

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Rates, "rates"},
    {Command::Regions, "regions"},
    {Command::Simulate, "simulate"},
    {Command::SweepLifespan, "sweep-lifespan"},
    {Command::VerifyLinear, "verify-linear"},
    {Command::VerifyLemmas, "verify-lemmas"},
    {Command::Report, "report"},
};

// A YAML mapping plus its dotted path; every key must be consumed.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) throw ConfigError(path_, "expected a mapping");
  }
  ~Section() = default;

  std::string child_path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  YAML::Node take(const std::string& key) {
    seen_.insert(key);
    if (!node_ || node_.IsNull()) return YAML::Node();
    return node_[key];
  }

  Section section(const std::string& key) { return Section(take(key), child_path(key)); }

  template <class T>
  void get(const std::string& key, T& out) {
    const YAML::Node v = take(key);
    if (!v || v.IsNull()) return;
    try {
      out = v.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(child_path(key), "cannot read value '" + scalar(v) + "'");
    }
  }

  void get_number(const std::string& key, Number& out) {
    const YAML::Node v = take(key);
    if (!v || v.IsNull()) return;
    out = to_number(v, child_path(key));
  }

  void get_positive(const std::string& key, double& out) {
    get(key, out);
    if (!(out > 0.0) || !std::isfinite(out)) {
      throw ConfigError(child_path(key), "must be a positive finite number");
    }
  }

  void get_positive(const std::string& key, int& out) {
    get(key, out);
    if (out <= 0) throw ConfigError(child_path(key), "must be a positive integer");
  }

  /// Rejects keys that were never read.
  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.count(key)) throw ConfigError(child_path(key), "unknown key");
    }
  }

  static std::string scalar(const YAML::Node& v) { return v.IsScalar() ? v.Scalar() : "<node>"; }

  static Number to_number(const YAML::Node& v, const std::string& path) {
    if (!v.IsScalar()) throw ConfigError(path, "expected a number");
    try {
      return Number::parse(v.Scalar());
    } catch (const std::exception&) {
      throw ConfigError(path, "not a number: '" + v.Scalar() + "'");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

model::ModelParams read_params(Section s, const model::ModelParams& base) {
  model::ModelParams p = base;
  s.get_number("sigma", p.sigma);
  s.get_number("delta", p.delta);
  s.get("n", p.n);
  s.get_number("p", p.p);
  s.get_number("q", p.q);
  s.get_number("m", p.m);
  for (const char* key : {"s1", "s2"}) {
    const YAML::Node v = s.take(key);
    if (v && !v.IsNull()) {
      (std::string(key) == "s1" ? p.s1 : p.s2) = Section::to_number(v, s.child_path(key));
    }
  }
  s.finish();
  try {
    p.validate();
  } catch (const InvalidParams& e) {
    std::string msg = e.what();
    const std::string prefix = e.field() + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw ConfigError(s.child_path(e.field()), msg);
  }
  return p;
}

DataSpec read_data(Section s) {
  DataSpec d;
  s.get("profile", d.profile);
  s.get("amplitude", d.amplitude);
  s.get("width", d.width);
  s.get("mode", d.mode);
  s.finish();
  static const std::set<std::string> kProfiles = {"zero", "gaussian", "bump", "single-mode"};
  if (!kProfiles.count(d.profile)) {
    throw ConfigError(s.child_path("profile"),
                      "unknown profile '" + d.profile + "' (zero, gaussian, bump, single-mode)");
  }
  if (!(d.width > 0.0)) throw ConfigError(s.child_path("width"), "must be positive");
  if (!std::isfinite(d.amplitude)) throw ConfigError(s.child_path("amplitude"), "must be finite");
  return d;
}

semilinear::CouplingKind read_coupling(Section& s, semilinear::CouplingKind def) {
  std::string text(to_string(def));
  s.get("coupling", text);
  const auto k = semilinear::parse_coupling(text);
  if (!k) throw ConfigError(s.child_path("coupling"), "expected UU, TT or UT");
  return *k;
}

model::Corollary read_corollary(const std::string& text, const std::string& path) {
  if (text == "general") return model::Corollary::General;
  if (text == "sharp") return model::Corollary::Sharp;
  throw ConfigError(path, "expected 'general' or 'sharp'");
}

model::ExponentRange read_range(Section s, model::ExponentRange r) {
  s.get_number("lo", r.lo);
  s.get_number("hi", r.hi);
  s.get_number("step", r.step);
  s.finish();
  if (!(r.step > Number(0))) throw ConfigError(s.child_path("step"), "must be positive");
  if (r.hi < r.lo) throw ConfigError(s.child_path("hi"), "must be >= lo");
  return r;
}

std::string hex_sha256(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return os.str();
}

nlohmann::json params_json(const model::ModelParams& p) {
  nlohmann::json j = {{"sigma", p.sigma.str()}, {"delta", p.delta.str()}, {"n", p.n},
                      {"p", p.p.str()},         {"q", p.q.str()},         {"m", p.m.str()}};
  j["s1"] = p.s1 ? nlohmann::json(p.s1->str()) : nlohmann::json(nullptr);
  j["s2"] = p.s2 ? nlohmann::json(p.s2->str()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json data_json(const DataSpec& d) {
  return {{"profile", d.profile}, {"amplitude", d.amplitude}, {"width", d.width}, {"mode", d.mode}};
}

nlohmann::json range_json(const model::ExponentRange& r) {
  return {{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"step", r.step.str()}};
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view s) {
  for (const auto& [cmd, name] : kCommands) {
    if (name == s) return cmd;
  }
  return std::nullopt;
}

Number resolve_order(const std::string& text, const model::ModelParams& params) {
  const auto c = model::derive_constants(params);
  if (text == "k+") return c.k_plus;
  if (text == "k-") return c.k_minus;
  return Number::parse(text);
}

ExperimentConfig parse_config(const std::string& yaml_text, std::optional<Command> requested) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("<document>", std::string("YAML syntax error: ") + e.what());
  }
  Section top(root, "");
  ExperimentConfig cfg;

  std::string command;
  top.get("command", command);
  if (command.empty()) {
    if (!requested) throw ConfigError("command", "missing");
    cfg.command = *requested;
  } else {
    const auto cmd = parse_command(command);
    if (!cmd) throw ConfigError("command", "unknown command '" + command + "'");
    if (requested && *requested != *cmd) {
      throw ConfigError("command", "config is for '" + command + "' but '" +
                                       std::string(to_string(*requested)) + "' was requested");
    }
    cfg.command = *cmd;
  }

  cfg.params = read_params(top.section("params"), cfg.params);
  top.get("seed", cfg.seed);

  {
    Section g = top.section("grid");
    g.get_positive("points", cfg.grid.points);
    g.get_positive("half_length", cfg.grid.half_length);
    g.get_positive("max_points_3d", cfg.grid.max_points_3d);
    g.finish();
  }
  {
    Section t = top.section("time");
    t.get_positive("horizon", cfg.time.horizon);
    t.get_positive("dt", cfg.time.dt);
    t.get_positive("dt_min", cfg.time.dt_min);
    t.get("adaptive", cfg.time.adaptive);
    t.get_positive("threshold_factor", cfg.time.threshold_factor);
    const YAML::Node bt = t.take("blowup_threshold");
    if (bt && !bt.IsNull()) {
      cfg.time.blowup_threshold = Section::to_number(bt, t.child_path("blowup_threshold")).to_double();
    }
    t.get_positive("first_sample", cfg.time.first_sample);
    t.get_positive("samples_per_decade", cfg.time.samples_per_decade);
    t.finish();
    if (cfg.time.dt_min > cfg.time.dt) throw ConfigError("time.dt_min", "must be <= time.dt");
  }
  {
    Section r = top.section("rates");
    const YAML::Node pairs = r.take("pairs");
    if (pairs && !pairs.IsNull()) {
      if (!pairs.IsSequence()) throw ConfigError("rates.pairs", "expected a list");
      cfg.rates.pairs.clear();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        Section ps(pairs[i], "rates.pairs[" + std::to_string(i) + "]");
        RatePair rp;
        ps.get("j", rp.j);
        ps.get("a", rp.a);
        ps.finish();
        if (rp.j != 0 && rp.j != 1) throw ConfigError(ps.child_path("j"), "must be 0 or 1");
        try {
          if (resolve_order(rp.a, cfg.params) < Number(0)) throw std::invalid_argument("negative");
        } catch (const std::exception&) {
          throw ConfigError(ps.child_path("a"), "expected k+, k- or a non-negative rational");
        }
        cfg.rates.pairs.push_back(rp);
      }
    }
    std::vector<std::string> cors;
    r.get("corollaries", cors);
    if (!cors.empty()) {
      cfg.rates.corollaries.clear();
      for (std::size_t i = 0; i < cors.size(); ++i) {
        cfg.rates.corollaries.push_back(
            read_corollary(cors[i], "rates.corollaries[" + std::to_string(i) + "]"));
      }
    }
    r.finish();
  }
  {
    Section r = top.section("regions");
    cfg.regions.p = read_range(r.section("p"), cfg.regions.p);
    cfg.regions.q = read_range(r.section("q"), cfg.regions.q);
    std::vector<std::string> names;
    r.get("theorems", names);
    if (!names.empty()) {
      cfg.regions.theorems.clear();
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto th = model::parse_theorem(names[i]);
        if (!th) {
          throw ConfigError("regions.theorems[" + std::to_string(i) + "]",
                            "unknown theorem '" + names[i] + "'");
        }
        cfg.regions.theorems.push_back(*th);
      }
    }
    r.finish();
  }
  {
    Section s = top.section("simulate");
    auto& sim = cfg.simulate;
    sim.coupling = read_coupling(s, sim.coupling);
    s.get("linear_only", sim.linear_only);
    const YAML::Node sched = s.take("schedule");
    if (sched && !sched.IsNull()) {
      if (!sched.IsSequence()) throw ConfigError("simulate.schedule", "expected a list");
      sim.schedule.clear();
      for (std::size_t i = 0; i < sched.size(); ++i) {
        Section e(sched[i], "simulate.schedule[" + std::to_string(i) + "]");
        semilinear::NormSpec ns;
        e.get("j", ns.j);
        Number a(0);
        e.get_number("a", a);
        ns.a = a.to_double();
        e.finish();
        if (ns.j != 0 && ns.j != 1) throw ConfigError(e.child_path("j"), "must be 0 or 1");
        if (ns.a < 0.0) throw ConfigError(e.child_path("a"), "must be >= 0");
        sim.schedule.push_back(ns);
      }
    }
    sim.u0 = read_data(s.section("u0"));
    sim.u1 = read_data(s.section("u1"));
    sim.v0 = read_data(s.section("v0"));
    sim.v1 = read_data(s.section("v1"));
    const YAML::Node eb = s.take("expect_blowup");
    if (eb && !eb.IsNull()) {
      try {
        sim.expect_blowup = eb.as<bool>();
      } catch (const YAML::Exception&) {
        throw ConfigError("simulate.expect_blowup", "expected true or false");
      }
    }
    s.get_positive("linear_tolerance", sim.linear_tolerance);
    s.get("snapshots", sim.snapshots);
    s.finish();
  }
  {
    Section s = top.section("lifespan");
    auto& ls = cfg.lifespan;
    s.get_positive("eps_lo", ls.eps_lo);
    s.get_positive("eps_hi", ls.eps_hi);
    s.get_positive("eps_count", ls.eps_count);
    s.get_positive("points", ls.points);
    s.get_positive("half_length", ls.half_length);
    s.get_positive("width", ls.width);
    s.get_positive("dt", ls.dt);
    s.get_positive("horizon", ls.horizon);
    s.get_positive("threshold_factor", ls.threshold_factor);
    s.get_positive("rel_tolerance", ls.rel_tolerance);
    ls.coupling = read_coupling(s, ls.coupling);
    s.finish();
    if (ls.eps_count < 5) throw ConfigError("lifespan.eps_count", "must be >= 5");
    if (!(ls.eps_hi > ls.eps_lo)) throw ConfigError("lifespan.eps_hi", "must exceed eps_lo");
  }
  {
    Section s = top.section("linear");
    auto& lin = cfg.linear;
    s.get_positive("tolerance", lin.tolerance);
    s.get_positive("t_lo", lin.t_lo);
    s.get_positive("t_hi", lin.t_hi);
    s.get_positive("points", lin.points);
    const YAML::Node cases = s.take("cases");
    if (cases && !cases.IsNull()) {
      if (!cases.IsSequence()) throw ConfigError("linear.cases", "expected a list");
      for (std::size_t i = 0; i < cases.size(); ++i) {
        const std::string path = "linear.cases[" + std::to_string(i) + "]";
        Section c(cases[i], path);
        LinearCaseSpec lc;
        c.get("id", lc.id);
        if (lc.id.empty()) throw ConfigError(c.child_path("id"), "missing");
        lc.params = read_params(c.section("params"), cfg.params);
        c.get("j", lc.j);
        c.get("a", lc.a);
        std::string cor = "sharp";
        c.get("corollary", cor);
        lc.corollary = read_corollary(cor, c.child_path("corollary"));
        c.get("datum", lc.datum);
        c.finish();
        if (lc.j != 0 && lc.j != 1) throw ConfigError(c.child_path("j"), "must be 0 or 1");
        if (lc.datum != "w0" && lc.datum != "w1" && lc.datum != "both") {
          throw ConfigError(c.child_path("datum"), "expected w0, w1 or both");
        }
        try {
          resolve_order(lc.a, lc.params);
        } catch (const std::exception&) {
          throw ConfigError(c.child_path("a"), "expected k+, k- or a rational");
        }
        lin.cases.push_back(lc);
      }
    }
    s.finish();
    if (!(lin.t_hi > lin.t_lo)) throw ConfigError("linear.t_hi", "must exceed t_lo");
  }
  {
    Section s = top.section("lemmas");
    auto& lm = cfg.lemmas;
    s.get_positive("gn_samples", lm.gn_samples);
    s.get_positive("gn_tolerance", lm.gn_tolerance);
    const YAML::Node cases = s.take("gn_cases");
    if (cases && !cases.IsNull()) {
      if (!cases.IsSequence()) throw ConfigError("lemmas.gn_cases", "expected a list");
      lm.gn_cases.clear();
      for (std::size_t i = 0; i < cases.size(); ++i) {
        Section c(cases[i], "lemmas.gn_cases[" + std::to_string(i) + "]");
        GnCaseSpec g;
        c.get("s", g.s);
        c.get_positive("sigma_reg", g.sigma_reg);
        c.get_positive("n", g.n);
        c.finish();
        if (g.n > 3) throw ConfigError(c.child_path("n"), "must be 1, 2 or 3");
        if (g.s < 0.0 || g.s > g.sigma_reg) {
          throw ConfigError(c.child_path("s"), "must lie in [0, sigma_reg]");
        }
        lm.gn_cases.push_back(g);
      }
    }
    s.finish();
  }
  {
    Section s = top.section("report");
    s.get("runs", cfg.report.runs);
    s.finish();
  }
  top.finish();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<Command> requested) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), requested);
}

nlohmann::json resolved_json(const ExperimentConfig& cfg) {
  using nlohmann::json;
  json j;
  j["command"] = std::string(to_string(cfg.command));
  j["params"] = params_json(cfg.params);
  j["seed"] = cfg.seed;
  j["grid"] = {{"points", cfg.grid.points},
               {"half_length", cfg.grid.half_length},
               {"max_points_3d", cfg.grid.max_points_3d}};
  j["time"] = {{"horizon", cfg.time.horizon},
               {"dt", cfg.time.dt},
               {"dt_min", cfg.time.dt_min},
               {"adaptive", cfg.time.adaptive},
               {"threshold_factor", cfg.time.threshold_factor},
               {"blowup_threshold", cfg.time.blowup_threshold ? json(*cfg.time.blowup_threshold)
                                                              : json(nullptr)},
               {"first_sample", cfg.time.first_sample},
               {"samples_per_decade", cfg.time.samples_per_decade}};
  json pairs = json::array();
  for (const auto& p : cfg.rates.pairs) pairs.push_back({{"j", p.j}, {"a", p.a}});
  json cors = json::array();
  for (auto c : cfg.rates.corollaries) cors.push_back(std::string(model::to_string(c)));
  j["rates"] = {{"pairs", pairs}, {"corollaries", cors}};
  json ths = json::array();
  for (auto t : cfg.regions.theorems) ths.push_back(std::string(model::to_string(t)));
  j["regions"] = {{"p", range_json(cfg.regions.p)},
                  {"q", range_json(cfg.regions.q)},
                  {"theorems", ths}};
  const auto& sim = cfg.simulate;
  json sched = json::array();
  for (const auto& s : sim.schedule) sched.push_back({{"j", s.j}, {"a", s.a}});
  j["simulate"] = {{"coupling", std::string(semilinear::to_string(sim.coupling))},
                   {"linear_only", sim.linear_only},
                   {"schedule", sched},
                   {"u0", data_json(sim.u0)},
                   {"u1", data_json(sim.u1)},
                   {"v0", data_json(sim.v0)},
                   {"v1", data_json(sim.v1)},
                   {"expect_blowup", sim.expect_blowup ? json(*sim.expect_blowup) : json(nullptr)},
                   {"linear_tolerance", sim.linear_tolerance},
                   {"snapshots", sim.snapshots}};
  const auto& ls = cfg.lifespan;
  j["lifespan"] = {{"eps_lo", ls.eps_lo},
                   {"eps_hi", ls.eps_hi},
                   {"eps_count", ls.eps_count},
                   {"points", ls.points},
                   {"half_length", ls.half_length},
                   {"width", ls.width},
                   {"dt", ls.dt},
                   {"horizon", ls.horizon},
                   {"threshold_factor", ls.threshold_factor},
                   {"rel_tolerance", ls.rel_tolerance},
                   {"coupling", std::string(semilinear::to_string(ls.coupling))}};
  json lcases = json::array();
  for (const auto& c : cfg.linear.cases) {
    lcases.push_back({{"id", c.id},
                      {"params", params_json(c.params)},
                      {"j", c.j},
                      {"a", c.a},
                      {"corollary", std::string(model::to_string(c.corollary))},
                      {"datum", c.datum}});
  }
  j["linear"] = {{"tolerance", cfg.linear.tolerance},
                 {"t_lo", cfg.linear.t_lo},
                 {"t_hi", cfg.linear.t_hi},
                 {"points", cfg.linear.points},
                 {"cases", lcases}};
  json gn = json::array();
  for (const auto& g : cfg.lemmas.gn_cases) {
    gn.push_back({{"s", g.s}, {"sigma_reg", g.sigma_reg}, {"n", g.n}});
  }
  j["lemmas"] = {{"gn_samples", cfg.lemmas.gn_samples},
                 {"gn_tolerance", cfg.lemmas.gn_tolerance},
                 {"gn_cases", gn}};
  j["report"] = {{"runs", cfg.report.runs}};
  return j;
}

std::string run_id(const ExperimentConfig& cfg) { return hex_sha256(resolved_json(cfg).dump()); }

}  // namespace sigmalab::cli
