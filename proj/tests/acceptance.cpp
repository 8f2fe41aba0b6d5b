// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lp_oracle.hpp"
#include "oig/follower.hpp"
#include "oig/ga.hpp"
#include "oig/leader.hpp"
#include "oig/oracle.hpp"
#include "oig/report.hpp"
#include "oig/timer.hpp"
#include "test_util.hpp"

using namespace oig;

namespace {

constexpr double kExactLimit = 600.0;

const NuTable& nu_table() {
  static const NuTable t = NuTable::load(support::data_path("nu.txt"));
  return t;
}

bool have(const std::string& name) {
  return std::filesystem::exists(support::data_path("tsplib/" + name + ".tsp"));
}

std::optional<Instance> load(const std::string& name, PrizeScheme scheme, int q) {
  if (!have(name)) return std::nullopt;
  return support::tsplib_instance(name, nu_table().find(name).value(), scheme, q);
}

const char* scheme_tag(PrizeScheme s) { return s == PrizeScheme::Unit ? "u" : "r"; }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

int failures = 0;

void verdict(int id, const std::string& title, const Outcome& o) {
  for (const auto& n : o.notes) std::cout << "  [" << id << "] " << n << "\n";
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << std::endl;
  if (!o.pass) ++failures;
}

void detail(int id, const std::string& line) { std::cout << "  [" << id << "] " << line << std::endl; }

RunRecord exact_run(const Instance& inst, Setting s) {
  RunSpec spec;
  spec.mode = Mode::Exact;
  spec.setting = s;
  spec.time_limit = kExactLimit;
  return run_one(inst, spec).record;
}

struct ReferenceValue {
  std::string name;
  PrizeScheme scheme;
  int q;
  std::int64_t value;
};

const std::vector<ReferenceValue> kSmallInstances = {
    {"gr17", PrizeScheme::Unit, 5, 6},     {"gr17", PrizeScheme::Unit, 8, 3},
    {"gr17", PrizeScheme::Random, 5, 194}, {"gr17", PrizeScheme::Random, 8, 118},
    {"gr21", PrizeScheme::Unit, 5, 7},     {"gr21", PrizeScheme::Unit, 8, 5},
    {"gr21", PrizeScheme::Random, 5, 303}, {"gr21", PrizeScheme::Random, 8, 191},
    {"gr24", PrizeScheme::Unit, 5, 8},     {"gr24", PrizeScheme::Unit, 8, 6},
    {"gr24", PrizeScheme::Random, 5, 430}, {"gr24", PrizeScheme::Random, 8, 304},
    {"bays29", PrizeScheme::Unit, 5, 13},  {"bays29", PrizeScheme::Unit, 8, 11},
    {"fri26", PrizeScheme::Unit, 5, 9},    {"fri26", PrizeScheme::Unit, 8, 7},
    {"fri26", PrizeScheme::Random, 5, 410}, {"fri26", PrizeScheme::Random, 8, 301},
};

std::string key(const std::string& name, PrizeScheme s, int q) {
  return name + "/" + scheme_tag(s) + "/Q=" + std::to_string(q);
}

// Exact IFHC records of criterion 2, reused by criteria 5, 7 and 9.
std::map<std::string, RunRecord> small_runs;

void criterion1() {
  Outcome o;
  const std::pair<int, std::int64_t> expected[] = {{0, 16}, {5, 12}, {8, 11}};
  for (auto [q, value] : expected) {
    const auto inst = load("bayg29", PrizeScheme::Unit, q);
    if (!inst) {
      o.fail("bayg29 Q=" + std::to_string(q) + ": instance file missing (data/tsplib/bayg29.tsp)");
      continue;
    }
    const RunRecord r = exact_run(*inst, Setting::IFHC);
    detail(1, "bayg29/u/Q=" + std::to_string(q) + " value " + std::to_string(r.value) + " status " + r.status +
                  " t " + fixed2(r.t) + "s");
    if (r.status != "optimal" || r.value != value || r.t > 300.0)
      o.fail("bayg29 Q=" + std::to_string(q) + " expected " + std::to_string(value));
  }
  verdict(1, "bayg29 unit-prize values 16/12/11", o);
}

void criterion2() {
  Outcome o;
  for (const auto& row : kSmallInstances) {
    const std::string k = key(row.name, row.scheme, row.q);
    const auto inst = load(row.name, row.scheme, row.q);
    if (!inst) {
      o.fail(k + ": instance file missing");
      continue;
    }
    const RunRecord r = exact_run(*inst, Setting::IFHC);
    small_runs[k] = r;
    detail(2, k + " value " + std::to_string(r.value) + " (expected " + std::to_string(row.value) + ") status " +
                  r.status + " t " + fixed2(r.t) + "s");
    if (r.status != "optimal" || r.value != row.value || r.t > kExactLimit) o.fail(k + " mismatch");
  }
  verdict(2, "small-instance exact values", o);
}

void criterion3() {
  Outcome o;
  int runs = 0;
  if (have("gr17")) {
    for (PrizeScheme s : {PrizeScheme::Unit, PrizeScheme::Random}) {
      const Instance base = *load("gr17", s, 0);
      const oracle::OpOracle op(base);
      for (int q = 0; q <= 8; ++q) {
        Instance inst = base;
        inst.interdiction_budget = q;
        const std::int64_t ref = oracle::oig_exact(op, inst).value;
        const OigResult r = solve_oig(inst);
        ++runs;
        if (r.status != OigStatus::Optimal || r.upper_bound != ref)
          o.fail(key("gr17", s, q) + ": solver " + std::to_string(r.upper_bound) + " vs oracle " +
                 std::to_string(ref));
      }
    }
  } else {
    o.fail("gr17: instance file missing");
  }
  for (unsigned k = 0; k < 20; ++k) {
    const int n = 8 + static_cast<int>(k % 7);
    const Instance inst = support::random_instance(9000 + k, n, k % 2 == 0, 1 + static_cast<int>(k % 4));
    const std::int64_t ref = oracle::oig_exact(inst).value;
    const OigResult r = solve_oig(inst);
    ++runs;
    if (r.status != OigStatus::Optimal || r.upper_bound != ref)
      o.fail(inst.name + ": solver " + std::to_string(r.upper_bound) + " vs oracle " + std::to_string(ref));
  }
  detail(3, std::to_string(runs) + " solver/oracle comparisons");
  verdict(3, "branch-and-cut agrees with brute-force interdiction", o);
}

void criterion4() {
  Outcome o;
  Stopwatch watch;
  int checked = 0;
  for (const std::string name : {"gr17", "gr21", "gr24", "fri26"}) {
    const auto inst = load(name, PrizeScheme::Random, 8);
    if (!inst) {
      o.fail(name + ": instance file missing");
      continue;
    }
    const oracle::OpOracle op(*inst);
    const FollowerContext ctx(*inst);
    std::mt19937 gen(4242);
    for (int k = 0; k < 50; ++k) {
      const Interdiction z = support::random_interdiction(gen, inst->n, 8);
      const FollowerResult fr = solve_follower(ctx, z);
      const std::int64_t ref = op.value(z);
      ++checked;
      if (fr.status != FollowerStatus::Optimal || fr.value != ref)
        o.fail(name + " case " + std::to_string(k) + ": follower " + std::to_string(fr.value) + " vs oracle " +
               std::to_string(ref));
    }
  }
  detail(4, std::to_string(checked) + " interdictions checked in " + fixed2(watch.seconds()) + "s");
  if (watch.seconds() > 600.0) o.fail("total time above 10 minutes");
  verdict(4, "follower branch-and-cut agrees with the DP oracle", o);
}

void criterion5() {
  Outcome o;
  int compared = 0, ifhc_faster = 0;
  for (const auto& row : kSmallInstances) {
    const std::string k = key(row.name, row.scheme, row.q);
    const auto inst = load(row.name, row.scheme, row.q);
    if (!inst) {
      o.fail(k + ": instance file missing");
      continue;
    }
    std::map<Setting, RunRecord> rs;
    for (Setting s : {Setting::I, Setting::IF, Setting::IFH, Setting::IFHC, Setting::IFHCP})
      rs[s] = s == Setting::IFHC && small_runs.count(k) ? small_runs[k] : exact_run(*inst, s);
    std::ostringstream line;
    line << k;
    std::set<std::int64_t> values;
    for (const auto& [s, r] : rs) {
      line << " " << to_string(s) << "=" << r.value << "/" << fixed2(r.t) << "s";
      if (r.status == "optimal") values.insert(r.value);
      else line << "(" << r.status << ")";
    }
    detail(5, line.str());
    if (values.size() > 1) o.fail(k + ": settings disagree");
    const RunRecord& i = rs[Setting::I];
    const RunRecord& c = rs[Setting::IFHC];
    if (i.status == "optimal" && c.status == "optimal") {
      ++compared;
      if (c.t <= i.t) ++ifhc_faster;
    }
  }
  detail(5, "IFHC no slower than I on " + std::to_string(ifhc_faster) + "/" + std::to_string(compared) + " runs");
  if (compared == 0 || 10 * ifhc_faster < 8 * compared) o.fail("IFHC faster than I on fewer than 80% of runs");
  verdict(5, "settings agree and IFHC is no slower than I", o);
}

FollowerPoint incidence(const Instance& inst, const Tour& t) {
  FollowerPoint p{std::vector<double>(num_edges(inst.n), 0.0), std::vector<double>(inst.n, 0.0)};
  const std::size_t m = t.nodes.size();
  for (std::size_t i = 0; i < m; ++i) {
    p.x[edge_id(inst.n, t.nodes[i], t.nodes[(i + 1) % m])] = 1.0;
    p.y[t.nodes[i]] = 1.0;
  }
  return p;
}

void criterion6() {
  Outcome o;
  std::int64_t icuts = 0, fcuts = 0, violations = 0;
  std::map<std::string, std::int64_t> by_kind;
  for (unsigned k = 0; k < 16; ++k) {
    const int n = 7 + static_cast<int>(k % 4);
    const Instance inst = support::random_instance(6000 + k, n, k % 2 == 1, 1 + static_cast<int>(k % 3));
    const auto tours = oracle::enumerate_feasible_tours(inst);
    std::vector<FollowerPoint> points;
    for (const Tour& t : tours) points.push_back(incidence(inst, t));
    // Every leader point |z| <= Q with t = Phi(z).
    const oracle::OpOracle op(inst);
    std::vector<std::pair<Interdiction, std::int64_t>> leader_points;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > inst.interdiction_budget) continue;
      Interdiction z(n);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) z.set(i);
      leader_points.emplace_back(z, op.value(z));
    }
    for (Setting s : {Setting::I, Setting::IF, Setting::IFH, Setting::IFHC, Setting::IFHCP}) {
      LeaderOptions opt;
      opt.setting = s;
      opt.observer = [&](const Tour& tour, bool) {
        ++icuts;
        // t + sum p_i yhat_i z_i >= sum p_i yhat_i
        for (const auto& [z, phi] : leader_points) {
          std::int64_t lhs = phi, rhs = 0;
          for (int v : tour.nodes) {
            rhs += inst.collectible(v);
            if (z[v]) lhs += inst.collectible(v);
          }
          if (lhs < rhs) ++violations;
        }
      };
      opt.follower_observer = [&](const FollowerCut& cut) {
        ++fcuts;
        ++by_kind[to_string(cut.kind)];
        for (const auto& p : points)
          if (cut.violation(p.x, p.y) > 1e-9) ++violations;
      };
      const OigResult r = solve_oig(inst, opt);
      if (r.status != OigStatus::Optimal) o.fail(inst.name + " did not finish");
    }
  }
  std::ostringstream line;
  line << icuts << " interdiction cuts, " << fcuts << " follower cuts (";
  for (const auto& [kind, c] : by_kind) line << kind << " " << c << " ";
  line << "), " << violations << " violations";
  detail(6, line.str());
  if (violations > 0) o.fail("violated cuts found");
  if (icuts == 0 || fcuts == 0) o.fail("no cuts emitted");
  verdict(6, "emitted cuts are valid for every enumerated point", o);
}

void criterion7() {
  Outcome o;
  double worst = 0.0;
  for (const std::string name : {"gr17", "gr21", "gr24", "fri26", "bayg29", "bays29"}) {
    for (PrizeScheme s : {PrizeScheme::Unit, PrizeScheme::Random}) {
      for (int q : {5, 8}) {
        const std::string k = key(name, s, q);
        const auto inst = load(name, s, q);
        if (!inst) {
          o.fail(k + ": instance file missing");
          continue;
        }
        std::int64_t exact;
        if (small_runs.count(k) && small_runs[k].status == "optimal") {
          exact = small_runs[k].value;
        } else {
          const RunRecord r = exact_run(*inst, Setting::IFHC);
          if (r.status != "optimal") {
            o.fail(k + ": no exact reference");
            continue;
          }
          exact = r.value;
        }
        int zero = 0;
        std::ostringstream line;
        line << k << " exact " << exact << " GA";
        for (std::uint64_t seed : {1, 2, 3}) {
          GaParams p;
          p.seed = seed;
          const GaResult g = evolve(*inst, p);
          const double delta = ga_delta(g.value, exact);
          worst = std::max(worst, delta);
          if (delta == 0.0) ++zero;
          line << " " << g.value << "/" << fixed2(g.time) << "s";
          if (delta > 15.0) o.fail(k + " seed " + std::to_string(seed) + ": delta " + fixed2(delta) + "%");
          if (g.time > 180.0) o.fail(k + " seed " + std::to_string(seed) + ": above 3 minutes");
          if (g.final_status != FollowerStatus::Optimal) o.fail(k + ": final follower solve not optimal");
        }
        detail(7, line.str());
        if ((name == "gr17" || name == "gr21") && s == PrizeScheme::Unit && zero < 2)
          o.fail(k + ": delta 0 in only " + std::to_string(zero) + "/3 seeds");
      }
    }
  }
  detail(7, "worst delta " + fixed2(worst) + "%");
  verdict(7, "genetic algorithm within 15% of the optimum", o);
}

void criterion8() {
  Outcome o;
  std::mt19937 gen(8080);
  int agree = 0, cycling = 0;
  for (int k = 0; k < 500; ++k) {
    const lp::LpModel m = support::random_small_lp(gen, k % 2 == 0);
    const lp::LpSolution s = lp::solve(m);
    const support::VertexResult ref = support::vertex_enumeration(m);
    if (s.status == lp::Status::IterationLimit) ++cycling;
    const bool ok = ref.feasible ? s.status == lp::Status::Optimal && std::abs(s.objective - ref.objective) <= 1e-6
                                 : s.status == lp::Status::Infeasible;
    if (ok) ++agree;
    else o.fail("model " + std::to_string(k) + ": " + lp::to_string(s.status));
  }
  detail(8, std::to_string(agree) + "/500 models agree, " + std::to_string(cycling) + " iteration-limit stops");
  if (cycling > 0) o.fail("anti-cycling failures");
  verdict(8, "LP engine agrees with vertex enumeration", o);
}

void criterion9() {
  Outcome o;
  std::vector<RunRecord> first, second;
  for (const auto& row : kSmallInstances) {
    const std::string k = key(row.name, row.scheme, row.q);
    const auto inst = load(row.name, row.scheme, row.q);
    if (!inst) {
      o.fail(k + ": instance file missing");
      continue;
    }
    first.push_back(small_runs.count(k) ? small_runs[k] : exact_run(*inst, Setting::IFHC));
    second.push_back(exact_run(*inst, Setting::IFHC));
  }
  const CsvOptions masked{false};
  const std::string a = write_csv(first, true, masked);
  const std::string b = write_csv(second, true, masked);
  detail(9, std::to_string(first.size()) + " runs repeated, CSV " + std::to_string(a.size()) + " bytes");
  if (first.empty()) o.fail("nothing to compare");
  if (a != b) o.fail("CSV differs between runs");
  verdict(9, "repeated runs give byte-identical CSV", o);
}

}  // namespace

int main() {
  std::cout << "data directory: " << OIG_DATA_DIR << std::endl;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
