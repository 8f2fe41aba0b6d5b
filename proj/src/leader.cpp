#include "oig/leader.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "oig/lp.hpp"
#include "oig/timer.hpp"

namespace oig {

const char* to_string(Setting s) {
  switch (s) {
    case Setting::I: return "I";
    case Setting::IF: return "IF";
    case Setting::IFH: return "IFH";
    case Setting::IFHC: return "IFHC";
    case Setting::IFHCP: return "IFHCP";
  }
  return "?";
}

Setting parse_setting(std::string_view s) {
  for (Setting v : {Setting::I, Setting::IF, Setting::IFH, Setting::IFHC, Setting::IFHCP})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown setting '" + std::string(s) + "' (expected I, IF, IFH, IFHC or IFHCP)");
}

SettingFeatures features(Setting s) {
  SettingFeatures f;
  f.fractional = s != Setting::I;
  f.solution_pool = s != Setting::I;
  f.heuristic = s == Setting::IFH || s == Setting::IFHC || s == Setting::IFHCP;
  f.cut_pool = s == Setting::IFHC || s == Setting::IFHCP;
  f.preprocess = s == Setting::IFHCP;
  return f;
}

const char* to_string(OigStatus s) { return s == OigStatus::Optimal ? "optimal" : "time_out"; }

double gap_percent(double upper, double lower) {
  if (upper <= 0.0) return 0.0;
  return std::max(0.0, 100.0 * (upper - lower) / upper);
}

namespace {

constexpr double kTol = 1e-6;

struct BoundChange {
  int var;
  double lo;
  double hi;
};

struct LeaderNode {
  std::vector<BoundChange> bounds;
  double parent_bound;
};

class LeaderSolver {
 public:
  LeaderSolver(const Instance& inst, const LeaderOptions& opt)
      : inst_(inst),
        opt_(opt),
        feat_(features(opt.setting)),
        ctx_(inst),
        n_(inst.n),
        deadline_(Deadline::after(opt.time_limit)) {}

  OigResult run();

 private:
  void add_cut(const Tour& tour, bool fractional);
  FollowerResult follower(const Interdiction& z, std::optional<std::int64_t> cutoff);
  /// nullopt when the node is finished, else its bound for branching.
  std::optional<double> process_node();
  int branching_variable() const;
  bool timed_out() const { return deadline_.expired(); }

  const Instance& inst_;
  const LeaderOptions& opt_;
  SettingFeatures feat_;
  FollowerContext ctx_;
  int n_;
  Deadline deadline_;
  std::unique_ptr<lp::Simplex> lp_;
  FollowerCutPool cut_pool_;
  SolutionPool sol_pool_;
  std::int64_t ub_ = 0;
  Interdiction best_z_;
  bool stopped_ = false;
  double node_lb_ = 0.0;  // last LP bound of the node in process
  OigResult res_;
};

void LeaderSolver::add_cut(const Tour& tour, bool fractional) {
  lp::Row row;
  double rhs = 0.0;
  for (int v : tour.nodes) {
    const double p = static_cast<double>(inst_.collectible(v));
    if (p == 0.0) continue;
    row.coefs.emplace_back(v, p);
    rhs += p;
  }
  std::sort(row.coefs.begin(), row.coefs.end());
  row.coefs.emplace_back(n_, 1.0);
  row.sense = lp::RowSense::GreaterEqual;
  row.rhs = rhs;
  lp_->add_row(row);
  if (fractional) ++res_.frac_cuts;
  else ++res_.int_cuts;
  if (opt_.observer) opt_.observer(tour, fractional);
}

FollowerResult LeaderSolver::follower(const Interdiction& z, std::optional<std::int64_t> cutoff) {
  FollowerOptions fo;
  fo.lower_cutoff = cutoff;
  fo.pool = feat_.cut_pool ? &cut_pool_ : nullptr;
  fo.preprocess = feat_.preprocess;
  fo.gsec_nondecreasing = opt_.gsec_nondecreasing;
  fo.deadline = deadline_;
  fo.observer = opt_.follower_observer;
  ++res_.follower_solves;
  FollowerResult r = solve_follower(ctx_, z, fo);
  if (r.status == FollowerStatus::Optimal && !r.tour.empty() && feat_.solution_pool) sol_pool_.add(r.tour, inst_.depot);
  return r;
}

int LeaderSolver::branching_variable() const {
  int best = -1;
  double best_frac = 1.0;
  for (int i = 0; i < n_; ++i) {
    const double v = lp_->value(i);
    if (std::abs(v - std::round(v)) <= kTol) continue;
    const double f = std::abs(v - 0.5);
    if (best < 0 || f < best_frac - 1e-12 ||
        (f <= best_frac + 1e-12 && inst_.prizes[i] > inst_.prizes[best])) {
      best = i;
      best_frac = f;
    }
  }
  return best;
}

std::optional<double> LeaderSolver::process_node() {
  int passes = 0;
  while (true) {
    if (timed_out()) {
      stopped_ = true;
      return std::nullopt;
    }
    const double cutoff = static_cast<double>(ub_) - 1.0 + kTol;
    const lp::Status st = lp_->solve(cutoff);
    if (st == lp::Status::Infeasible || st == lp::Status::CutoffExceeded) return std::nullopt;
    if (st != lp::Status::Optimal) throw std::runtime_error(std::string("leader LP: ") + lp::to_string(st));
    const double lb = lp_->objective_value();
    node_lb_ = std::max(node_lb_, lb);
    if (std::ceil(lb - kTol) >= static_cast<double>(ub_)) return std::nullopt;

    std::vector<double> zf(n_);
    bool integral = true;
    for (int i = 0; i < n_; ++i) {
      zf[i] = lp_->value(i);
      if (std::abs(zf[i] - std::round(zf[i])) > kTol) integral = false;
    }
    const double tbar = lp_->value(n_);

    if (integral) {
      Interdiction z(n_);
      for (int i = 0; i < n_; ++i) z.set(i, zf[i] > 0.5);
      const auto tint = static_cast<std::int64_t>(std::llround(tbar));
      if (feat_.heuristic) {
        ScopedTimer timer(res_.sep_time);
        const std::vector<double> w = collectible_prizes(inst_, z);
        const std::vector<std::uint8_t> mask = interdicted_mask(zf);
        if (auto h = find_heuristic_fol_soln(inst_, w, mask, static_cast<double>(tint), sol_pool_)) {
          ++res_.heuristic_cuts;
          add_cut(h->tour, false);
          continue;
        }
      }
      FollowerResult fr;
      {
        ScopedTimer timer(res_.sep_time);
        fr = follower(z, tint);
      }
      if (fr.status == FollowerStatus::TimeOut) {
        stopped_ = true;
        return std::nullopt;
      }
      if (fr.status == FollowerStatus::Optimal && fr.value > tint) {
        add_cut(fr.tour, false);
        continue;
      }
      // Phi(z) <= t and every cut underestimates Phi, so Phi(z) = t.
      if (tint < ub_) {
        ub_ = tint;
        best_z_ = z;
      }
      return std::nullopt;
    }

    if (feat_.fractional && passes < opt_.max_fractional_passes && !sol_pool_.empty()) {
      std::vector<Improved> found;
      {
        ScopedTimer timer(res_.sep_time);
        const std::vector<double> w = collectible_prizes(inst_, zf);
        const std::vector<std::uint8_t> mask = interdicted_mask(zf);
        found = heuristic_cut_tours(inst_, w, mask, tbar, sol_pool_, opt_.max_cuts_per_pass, !opt_.evaluate_only);
      }
      if (!found.empty()) {
        for (const auto& f : found) add_cut(f.tour, true);
        ++passes;
        continue;
      }
    }
    return lb;
  }
}

OigResult LeaderSolver::run() {
  Stopwatch watch;
  res_.seed = opt_.seed;
  const std::int64_t total = inst_.total_prize();

  lp::LpModel model;
  model.sense = lp::Sense::Minimize;
  for (int i = 0; i < n_; ++i) model.add_variable(0.0, 1.0, 0.0);
  model.add_variable(0.0, static_cast<double>(total), 1.0);
  lp::Row budget;
  for (int i = 0; i < n_; ++i) budget.coefs.emplace_back(i, 1.0);
  budget.sense = lp::RowSense::LessEqual;
  budget.rhs = inst_.interdiction_budget;
  model.add_row(std::move(budget));
  lp_ = std::make_unique<lp::Simplex>(model);

  // Bootstrap with z = 0: its follower optimum is both a valid cut and an upper bound.
  best_z_ = Interdiction(n_);
  FollowerResult root_fr;
  {
    ScopedTimer timer(res_.sep_time);
    root_fr = follower(best_z_, std::nullopt);
  }
  ub_ = root_fr.value;
  double lower = 0.0;
  if (root_fr.status == FollowerStatus::TimeOut) {
    stopped_ = true;
  } else if (!root_fr.tour.empty()) {
    add_cut(root_fr.tour, false);
  }

  std::vector<LeaderNode> open;
  std::optional<LeaderNode> next = LeaderNode{{}, 0.0};
  std::vector<int> touched;
  while (!stopped_ && (next || !open.empty())) {
    if (timed_out()) {
      stopped_ = true;
      break;
    }
    LeaderNode node;
    if (next) {
      node = std::move(*next);
      next.reset();
    } else {
      // Best-bound backtracking: latest node among those with the smallest bound.
      std::size_t pick = 0;
      for (std::size_t k = 1; k < open.size(); ++k)
        if (open[k].parent_bound <= open[pick].parent_bound) pick = k;
      node = std::move(open[pick]);
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (std::ceil(node.parent_bound - kTol) >= static_cast<double>(ub_)) continue;

    for (int v : touched) lp_->set_bounds(v, 0.0, 1.0);
    touched.clear();
    for (const auto& b : node.bounds) {
      lp_->set_bounds(b.var, b.lo, b.hi);
      touched.push_back(b.var);
    }
    const bool is_root = res_.nodes == 0;
    ++res_.nodes;
    if (lp_->num_rows() > 1 + std::max(400, 10 * n_)) lp_->remove_slack_rows(1);

    node_lb_ = node.parent_bound;
    const std::optional<double> bound = process_node();
    if (is_root) {
      const double root_lb = bound ? *bound : (stopped_ ? node_lb_ : static_cast<double>(ub_));
      res_.root_gap = gap_percent(static_cast<double>(ub_), std::min(root_lb, static_cast<double>(ub_)));
    }
    if (stopped_) {
      node.parent_bound = node_lb_;
      open.push_back(std::move(node));
      break;
    }
    if (!bound) continue;
    const int var = branching_variable();
    if (var < 0) throw std::logic_error("leader: fractional node without branching candidate");
    LeaderNode zero{node.bounds, *bound};
    zero.bounds.push_back({var, 0.0, 0.0});
    LeaderNode one{std::move(node.bounds), *bound};
    one.bounds.push_back({var, 1.0, 1.0});
    open.push_back(std::move(zero));
    next = std::move(one);
  }

  if (stopped_) {
    res_.status = OigStatus::TimeOut;
    lower = static_cast<double>(ub_);
    if (next) open.push_back(std::move(*next));
    for (const auto& node : open) lower = std::min(lower, node.parent_bound);
  } else {
    res_.status = OigStatus::Optimal;
    lower = static_cast<double>(ub_);
  }
  res_.z = best_z_;
  res_.time = watch.seconds();

  // Recover an optimal follower tour for the reported interdiction.
  if (best_z_ == Interdiction(n_) && root_fr.status == FollowerStatus::Optimal) {
    res_.tour = root_fr.tour;
  } else {
    FollowerOptions fo;
    fo.preprocess = feat_.preprocess;
    FollowerResult fr = solve_follower(ctx_, best_z_, fo);
    res_.tour = fr.tour;
    // A timed-out root solve leaves ub_ unproven; the exact value replaces it.
    if (stopped_ && root_fr.status == FollowerStatus::TimeOut) ub_ = std::max(ub_, fr.value);
    if (fr.value != ub_) throw std::logic_error("leader: incumbent value not confirmed by the follower");
  }
  res_.upper_bound = ub_;
  res_.lower_bound = lower;
  res_.gap = gap_percent(static_cast<double>(ub_), lower);
  if (res_.nodes == 0) res_.root_gap = res_.gap;
  return res_;
}

}  // namespace

OigResult solve_oig(const Instance& inst, const LeaderOptions& options) {
  inst.validate();
  LeaderSolver solver(inst, options);
  return solver.run();
}

}  // namespace oig
