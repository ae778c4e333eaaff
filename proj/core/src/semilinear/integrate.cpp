#include "sigmalab/semilinear/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "sigmalab/errors.hpp"
#include "sigmalab/spectral/field.hpp"

namespace sigmalab::semilinear {

std::string norm_id(char component, const NormSpec& spec) {
  std::ostringstream os;
  os << component << ":j" << spec.j << ":a" << spec.a;
  return os.str();
}

std::string_view to_string(BlowupTrigger t) {
  switch (t) {
    case BlowupTrigger::None:
      return "none";
    case BlowupTrigger::NormThreshold:
      return "norm_threshold";
    case BlowupTrigger::NonFinite:
      return "non_finite";
  }
  return "?";
}

void RunRecord::write_csv(std::ostream& os) const {
  os << "t,norm_id,value\r\n";
  const auto old = os.precision(17);
  for (const auto& s : samples) os << s.t << ',' << s.norm_id << ',' << s.value << "\r\n";
  os.precision(old);
}

std::vector<std::pair<double, double>> RunRecord::series(const std::string& id) const {
  std::vector<std::pair<double, double>> out;
  for (const auto& s : samples) {
    if (s.norm_id == id) out.emplace_back(s.t, s.value);
  }
  return out;
}

std::vector<double> sample_times(const IntegrateOptions& opt) {
  std::vector<double> ts = {0.0};
  if (opt.samples_per_decade > 0 && opt.first_sample > 0.0) {
    const int k0 = static_cast<int>(std::ceil(std::log10(opt.first_sample) * opt.samples_per_decade - 1e-9));
    for (int k = k0;; ++k) {
      const double t = std::pow(10.0, static_cast<double>(k) / opt.samples_per_decade);
      if (t >= opt.horizon * (1 - 1e-12)) break;
      ts.push_back(t);
    }
  }
  ts.push_back(opt.horizon);
  return ts;
}

namespace {

class TableCache {
 public:
  TableCache(const spectral::SpectralGrid& g, const PhysicalParams& p) : grid_(g), prm_(p) {}

  const propagator::KernelTable& get(double dt) {
    if (auto it = tables_.find(dt); it != tables_.end()) return it->second;
    if (tables_.size() > 64) tables_.clear();
    return tables_.emplace(dt, propagator::kernel_table(grid_, dt, prm_)).first->second;
  }

 private:
  const spectral::SpectralGrid& grid_;
  PhysicalParams prm_;
  std::map<double, propagator::KernelTable> tables_;
};

void record(RunRecord& rec, const SystemState& s, const std::vector<NormSpec>& schedule) {
  for (const auto& ns : schedule) {
    const auto& u = ns.j == 0 ? s.u : s.ut;
    const auto& v = ns.j == 0 ? s.v : s.vt;
    rec.samples.push_back({s.t, norm_id('u', ns), spectral::sobolev_norm(u, ns.a, true)});
    rec.samples.push_back({s.t, norm_id('v', ns), spectral::sobolev_norm(v, ns.a, true)});
  }
}

}  // namespace

IntegrateResult integrate(const SystemState& initial, CouplingKind kind, const PhysicalParams& prm,
                          const IntegrateOptions& opt) {
  if (!(opt.horizon > 0.0)) throw InvalidParams("horizon", "must be positive");
  if (!(opt.dt > 0.0)) throw InvalidParams("dt", "must be positive");
  if (!(opt.dt_min > 0.0) || opt.dt_min > opt.dt) throw InvalidParams("dt_min", "must be in (0, dt]");
  for (const auto& ns : opt.schedule) {
    if (ns.j != 0 && ns.j != 1) throw InvalidParams("schedule.j", "must be 0 or 1");
    if (ns.a < 0.0) throw InvalidParams("schedule.a", "must be >= 0");
  }

  IntegrateResult res{RunRecord{}, BlowupReport{}, initial};
  SystemState& s = res.final_state;
  const double ref0 = s.max_l2();
  const double threshold =
      opt.blowup_threshold ? *opt.blowup_threshold : opt.threshold_factor * std::max(ref0, 1e-300);
  res.blowup.peak_norm = ref0;

  TableCache cache(s.u.grid(), prm);
  const auto times = sample_times(opt);
  std::size_t next_sample = 0;
  if (times.front() <= s.t) {
    record(res.record, s, opt.schedule);
    next_sample = 1;
  }
  double dt = opt.dt;
  double current = ref0;

  while (next_sample < times.size()) {
    const double target = times[next_sample];
    const double remaining = target - s.t;
    // Stretch by a hair so a tiny remainder is absorbed instead of stepped.
    const double h = remaining <= dt * (1 + 1e-9) ? remaining : dt;
    SystemState trial = s;
    try {
      trial = step(s, cache.get(h), kind, prm, opt.linear_only);
    } catch (const NonFiniteState& e) {
      res.blowup = {true, e.time(), BlowupTrigger::NonFinite, res.blowup.peak_norm};
      break;
    }
    const double norm = trial.max_l2();
    if (opt.adaptive && norm > 2.0 * current && dt * 0.5 >= opt.dt_min) {
      dt *= 0.5;
      ++res.record.rejected_steps;
      continue;
    }
    if (h == remaining) trial.t = target;  // avoid drift from repeated additions
    s = std::move(trial);
    current = norm;
    res.blowup.peak_norm = std::max(res.blowup.peak_norm, norm);
    if (!std::isfinite(norm)) {
      res.blowup = {true, s.t, BlowupTrigger::NonFinite, res.blowup.peak_norm};
      break;
    }
    if (norm > threshold) {
      res.blowup.blew_up = true;
      res.blowup.t_detect = s.t;
      res.blowup.trigger = BlowupTrigger::NormThreshold;
      record(res.record, s, opt.schedule);
      break;
    }
    if (s.t >= target) {
      record(res.record, s, opt.schedule);
      ++next_sample;
    }
  }
  res.record.t_final = s.t;
  res.record.steps = s.step_count - initial.step_count;
  res.record.dt_final = dt;
  return res;
}

}  // namespace sigmalab::semilinear
