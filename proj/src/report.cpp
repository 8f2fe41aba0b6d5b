#include "oig/report.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oig/oracle.hpp"
#include "oig/timer.hpp"

namespace oig {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Ga: return "ga";
    case Mode::Oracle: return "oracle";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "ga") return Mode::Ga;
  if (s == "oracle") return Mode::Oracle;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected exact, ga or oracle)");
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

namespace {

RunRecord base_record(const Instance& inst, const RunSpec& spec) {
  RunRecord r;
  r.instance = inst.name;
  r.scheme = to_string(inst.scheme);
  r.q = inst.interdiction_budget;
  r.seed = spec.seed;
  switch (spec.mode) {
    case Mode::Exact: r.setting = to_string(spec.setting); break;
    case Mode::Ga: r.setting = "GA"; break;
    case Mode::Oracle: r.setting = "oracle"; break;
  }
  return r;
}

void run_exact(const Instance& inst, const RunSpec& spec, RunOutcome& out) {
  LeaderOptions opt;
  opt.setting = spec.setting;
  opt.time_limit = spec.time_limit;
  opt.seed = spec.seed;
  const OigResult res = solve_oig(inst, opt);
  RunRecord& r = out.record;
  r.t = res.time;
  r.t_sep = res.sep_time;
  r.gap = res.gap;
  r.root_gap = res.root_gap;
  r.value = res.upper_bound;
  r.bound = res.lower_bound;
  r.nodes = res.nodes;
  r.int_cuts = res.int_cuts;
  r.frac_cuts = res.frac_cuts;
  r.status = to_string(res.status);
  out.z = res.z;
  out.tour = res.tour;
}

void run_ga(const Instance& inst, const RunSpec& spec, RunOutcome& out) {
  GaParams params = spec.ga;
  params.seed = spec.seed;
  params.time_limit = spec.time_limit;
  const GaResult res = evolve(inst, params);
  RunRecord& r = out.record;
  r.t = res.time;
  r.value = res.value;
  r.bound = 0.0;
  r.status = res.final_status == FollowerStatus::TimeOut ? "time_out" : "heuristic";
  out.z = res.z;
  out.tour = res.tour;
  out.estimate = res.estimate;
}

void run_oracle(const Instance& inst, RunOutcome& out) {
  Stopwatch watch;
  const oracle::OpOracle op(inst);
  const oracle::OigExactResult res = oracle::oig_exact(op, inst);
  RunRecord& r = out.record;
  r.value = res.value;
  r.bound = static_cast<double>(res.value);
  r.status = "optimal";
  out.z = res.z;
  out.tour = op.solve(res.z).tour;
  r.t = watch.seconds();
}

}  // namespace

RunOutcome run_one(const Instance& inst, const RunSpec& spec) {
  RunOutcome out;
  out.record = base_record(inst, spec);
  try {
    switch (spec.mode) {
      case Mode::Exact: run_exact(inst, spec, out); break;
      case Mode::Ga: run_ga(inst, spec, out); break;
      case Mode::Oracle: run_oracle(inst, out); break;
    }
  } catch (const std::exception& e) {
    out.record.status = "error";
    out.record.error = e.what();
  }
  return out;
}

void fill_deltas(std::vector<RunRecord>& records) {
  std::map<std::tuple<std::string, std::string, int>, std::int64_t> exact;
  for (const auto& r : records)
    if (r.setting != "GA" && r.status == "optimal") exact.emplace(std::tuple{r.instance, r.scheme, r.q}, r.value);
  for (auto& r : records) {
    if (r.setting != "GA" || r.status == "error") continue;
    auto it = exact.find({r.instance, r.scheme, r.q});
    if (it != exact.end()) r.delta = ga_delta(r.value, it->second);
  }
}

std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records) {
  std::vector<Aggregate> out;
  std::map<std::pair<int, std::string>, std::size_t> index;
  std::vector<int> delta_count;
  for (const auto& r : records) {
    if (r.status == "error") continue;
    auto [it, fresh] = index.emplace(std::pair{r.q, r.setting}, out.size());
    if (fresh) {
      out.push_back({});
      out.back().q = r.q;
      out.back().setting = r.setting;
      delta_count.push_back(0);
    }
    Aggregate& a = out[it->second];
    ++a.runs;
    if (r.status == "optimal") ++a.n_opt;
    a.t += r.t;
    a.t_sep += r.t_sep;
    a.gap += r.gap;
    a.root_gap += r.root_gap;
    a.nodes += static_cast<double>(r.nodes);
    a.int_cuts += static_cast<double>(r.int_cuts);
    a.frac_cuts += static_cast<double>(r.frac_cuts);
    if (r.delta) {
      a.delta = a.delta.value_or(0.0) + *r.delta;
      ++delta_count[it->second];
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    Aggregate& a = out[k];
    const double n = a.runs;
    a.t /= n;
    a.t_sep /= n;
    a.gap /= n;
    a.root_gap /= n;
    a.nodes /= n;
    a.int_cuts /= n;
    a.frac_cuts /= n;
    if (a.delta) *a.delta /= delta_count[k];
  }
  return out;
}

std::string csv_header() {
  return "instance,scheme,Q,setting,t,t_SEP,Gap,rGap,value,bound,nBBnode,intCuts,fracCuts,seed,status,delta";
}

std::string csv_row(const RunRecord& r, const CsvOptions& options) {
  std::ostringstream os;
  os << r.instance << ',' << r.scheme << ',' << r.q << ',' << r.setting << ',';
  os << (options.timings ? fixed2(r.t) : "-") << ',' << (options.timings ? fixed2(r.t_sep) : "-") << ',';
  os << fixed2(r.gap) << ',' << fixed2(r.root_gap) << ',' << r.value << ',' << fixed2(r.bound) << ',';
  os << r.nodes << ',' << r.int_cuts << ',' << r.frac_cuts << ',' << r.seed << ',' << r.status << ',';
  if (r.delta) os << fixed2(*r.delta);
  return os.str();
}

std::string csv_row(const Aggregate& a, const CsvOptions& options) {
  std::ostringstream os;
  os << "mean,*," << a.q << ',' << a.setting << ',';
  os << (options.timings ? fixed2(a.t) : "-") << ',' << (options.timings ? fixed2(a.t_sep) : "-") << ',';
  os << fixed2(a.gap) << ',' << fixed2(a.root_gap) << ",,,";
  os << fixed2(a.nodes) << ',' << fixed2(a.int_cuts) << ',' << fixed2(a.frac_cuts) << ",,";
  os << "nOpt=" << a.n_opt << '/' << a.runs << ',';
  if (a.delta) os << fixed2(*a.delta);
  return os.str();
}

std::string write_csv(const std::vector<RunRecord>& records, bool with_aggregates, const CsvOptions& options) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) out += csv_row(r, options) + "\n";
  if (with_aggregates)
    for (const auto& a : aggregate(records)) out += csv_row(a, options) + "\n";
  return out;
}

std::string write_solution(const Instance& inst, const RunOutcome& outcome) {
  const RunRecord& r = outcome.record;
  std::ostringstream os;
  os << "instance " << r.instance << "\n";
  os << "scheme " << r.scheme << "\n";
  os << "Q " << r.q << "\n";
  os << "setting " << r.setting << "\n";
  os << "status " << r.status << "\n";
  if (!r.error.empty()) os << "error " << r.error << "\n";
  os << "interdicted";
  for (int v : outcome.z.nodes()) os << ' ' << v + 1;
  os << "\n";
  os << "tour";
  for (int v : outcome.tour.nodes) os << ' ' << v + 1;
  os << "\n";
  os << "tour_length " << outcome.tour.length << "\n";
  // Zero-sum game: the leader's objective is the follower's optimal prize.
  const std::int64_t prize = outcome.tour.empty()
                                 ? 0
                                 : static_cast<std::int64_t>(std::llround(
                                       tour_weight(outcome.tour, collectible_prizes(inst, outcome.z))));
  os << "follower_value " << prize << "\n";
  os << "leader_value " << r.value << "\n";
  if (outcome.estimate) os << "estimate " << *outcome.estimate << "\n";
  return os.str();
}

}  // namespace oig
