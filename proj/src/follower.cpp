#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "oig/follower.hpp"

namespace oig {
namespace {

constexpr double kIntTol = 1e-6;

struct BoundChange {
  int var;
  double lo;
  double hi;
};

struct TreeNode {
  std::vector<BoundChange> bounds;
  double parent_bound;
};

bool is_integral(double v) { return std::abs(v - std::round(v)) <= kIntTol; }

double fractionality(double v) { return std::abs(v - std::floor(v) - 0.5); }

}  // namespace

const char* to_string(FollowerStatus status) {
  switch (status) {
    case FollowerStatus::Optimal: return "optimal";
    case FollowerStatus::CutoffPruned: return "cutoff_pruned";
    case FollowerStatus::TimeOut: return "time_out";
  }
  return "?";
}

namespace {

class FollowerSolver {
 public:
  FollowerSolver(const FollowerContext& ctx, const Interdiction& z, const FollowerOptions& opt)
      : ctx_(ctx), inst_(ctx.instance()), opt_(opt), n_(inst_.n), w_(collectible_prizes(inst_, z)) {
    build_model(z);
  }

  FollowerResult run();
  FollowerPoint root_point();

 private:
  void build_model(const Interdiction& z);
  lp::Row to_row(const FollowerCut& cut) const;
  FollowerPoint point() const;
  bool point_integral() const;
  int branching_variable() const;
  Tour extract_tour(const FollowerPoint& pt) const;
  std::int64_t threshold() const { return std::max(opt_.lower_cutoff.value_or(-1), incumbent_value_); }
  void offer(const Tour& tour);
  void add_cuts(std::vector<FollowerCut>& cuts, bool emit);
  /// Returns the node's LP bound, or nullopt if the node was pruned or solved.
  std::optional<double> process_node(bool root);

  const FollowerContext& ctx_;
  const Instance& inst_;
  const FollowerOptions& opt_;
  int n_;
  std::vector<double> w_;
  std::vector<int> col_of_edge_;
  std::vector<int> edge_of_col_;
  int y0_ = 0;       // first y column
  int b0_ = 0;       // first selector column
  int num_cols_ = 0;
  int base_rows_ = 0;
  std::vector<double> root_lo_, root_hi_;
  std::unique_ptr<lp::Simplex> lp_;
  std::int64_t incumbent_value_ = -1;
  Tour incumbent_;
  FollowerResult res_;
};

void FollowerSolver::build_model(const Interdiction& z) {
  lp::LpModel model;
  model.sense = lp::Sense::Maximize;
  col_of_edge_.assign(num_edges(n_), -1);
  for (int e : ctx_.usable_edges()) {
    col_of_edge_[e] = model.add_variable(0.0, 1.0, 0.0);
    edge_of_col_.push_back(e);
  }
  y0_ = model.num_variables();
  Preprocessing pp;
  if (opt_.preprocess) pp = follower_preprocessing(inst_, z);
  std::vector<char> fixed_zero(n_, 0);
  for (int v : pp.fixed_zero) fixed_zero[v] = 1;
  for (int i = 0; i < n_; ++i) {
    const bool dep = i == inst_.depot;
    const double lo = dep ? 1.0 : 0.0;
    const double hi = dep || (ctx_.node_reachable(i) && !fixed_zero[i]) ? 1.0 : 0.0;
    model.add_variable(lo, hi, w_[i]);
  }
  b0_ = model.num_variables();

  for (int j = 0; j < n_; ++j) {
    lp::Row row;
    for (int i = 0; i < n_; ++i) {
      if (i == j) continue;
      const int c = col_of_edge_[edge_id(n_, i, j)];
      if (c >= 0) row.coefs.emplace_back(c, 1.0);
    }
    std::sort(row.coefs.begin(), row.coefs.end());
    row.coefs.emplace_back(y0_ + j, -2.0);
    row.sense = lp::RowSense::Equal;
    row.rhs = 0.0;
    model.add_row(std::move(row));
  }
  lp::Row budget;
  for (int e : ctx_.usable_edges()) {
    auto [u, v] = ctx_.endpoints(e);
    budget.coefs.emplace_back(col_of_edge_[e], static_cast<double>(inst_.d(u, v)));
  }
  budget.sense = lp::RowSense::LessEqual;
  budget.rhs = static_cast<double>(inst_.distance_budget);
  model.add_row(std::move(budget));

  for (const auto& sel : pp.selectors) {
    const int i = sel.node;
    const int b_off = model.add_variable(0.0, 1.0, 0.0);
    lp::Row off{{{y0_ + i, 1.0}, {b_off, 1.0}}, lp::RowSense::LessEqual, 1.0};
    model.add_row(std::move(off));
    lp::Row one{{{b_off, 1.0}}, lp::RowSense::Equal, 1.0};
    for (auto [a, b] : sel.pairs) {
      const int ca = col_of_edge_[edge_id(n_, a, i)];
      const int cb = col_of_edge_[edge_id(n_, i, b)];
      // A shortcut through an unusable edge can never be taken.
      if (ca < 0 || cb < 0) continue;
      const int bk = model.add_variable(0.0, 1.0, 0.0);
      lp::Row link{{{ca, 1.0}, {cb, 1.0}, {bk, -2.0}}, lp::RowSense::GreaterEqual, 0.0};
      model.add_row(std::move(link));
      one.coefs.emplace_back(bk, 1.0);
    }
    model.add_row(std::move(one));
  }

  num_cols_ = model.num_variables();
  base_rows_ = static_cast<int>(model.rows.size());
  root_lo_ = model.lower;
  root_hi_ = model.upper;
  lp_ = std::make_unique<lp::Simplex>(model);
}

lp::Row FollowerSolver::to_row(const FollowerCut& cut) const {
  lp::Row row;
  for (auto [e, a] : cut.x) {
    const int c = col_of_edge_[e];
    if (c >= 0) row.coefs.emplace_back(c, a);
  }
  for (auto [j, a] : cut.y) row.coefs.emplace_back(y0_ + j, a);
  row.sense = cut.sense;
  row.rhs = cut.rhs;
  return row;
}

FollowerPoint FollowerSolver::point() const {
  FollowerPoint pt;
  pt.x.assign(num_edges(n_), 0.0);
  for (std::size_t c = 0; c < edge_of_col_.size(); ++c) pt.x[edge_of_col_[c]] = lp_->value(static_cast<int>(c));
  pt.y.resize(n_);
  for (int i = 0; i < n_; ++i) pt.y[i] = lp_->value(y0_ + i);
  return pt;
}

bool FollowerSolver::point_integral() const {
  for (int c = 0; c < num_cols_; ++c)
    if (!is_integral(lp_->value(c))) return false;
  return true;
}

int FollowerSolver::branching_variable() const {
  auto pick = [&](int from, int to) {
    int best = -1;
    double best_frac = 0.5 - kIntTol;
    for (int c = from; c < to; ++c) {
      const double v = lp_->value(c);
      if (is_integral(v)) continue;
      const double f = fractionality(v);
      if (best < 0 || f < best_frac) {
        best = c;
        best_frac = f;
      }
    }
    return best;
  };
  if (int c = pick(y0_, b0_); c >= 0) return c;
  if (int c = pick(0, y0_); c >= 0) return c;
  return pick(b0_, num_cols_);
}

Tour FollowerSolver::extract_tour(const FollowerPoint& pt) const {
  std::vector<std::vector<int>> adj(n_);
  for (int e : ctx_.usable_edges())
    if (pt.x[e] > 0.5) {
      auto [u, v] = ctx_.endpoints(e);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  std::vector<int> nodes{inst_.depot};
  int prev = -1, cur = inst_.depot;
  while (true) {
    if (adj[cur].size() != 2) throw std::logic_error("follower: integral point is not a cycle");
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == inst_.depot) break;
    nodes.push_back(next);
    prev = cur;
    cur = next;
  }
  return make_tour(inst_, std::move(nodes));
}

void FollowerSolver::offer(const Tour& tour) {
  if (!is_follower_feasible(tour, inst_)) return;
  const auto value = static_cast<std::int64_t>(std::llround(tour_weight(tour, w_)));
  if (value > incumbent_value_) {
    incumbent_value_ = value;
    incumbent_ = tour;
  }
}

void FollowerSolver::add_cuts(std::vector<FollowerCut>& cuts, bool emit) {
  for (auto& cut : cuts) {
    lp_->add_row(to_row(cut));
    if (!emit) continue;
    switch (cut.kind) {
      case CutKind::Gsec: ++res_.gsec_cuts; break;
      case CutKind::Logical: ++res_.logical_cuts; break;
      case CutKind::CycleCover: ++res_.cc_cuts; break;
    }
    if (opt_.observer) opt_.observer(cut);
    if (opt_.pool && cut.kind != CutKind::Logical) opt_.pool->add(cut);
  }
}

std::optional<double> FollowerSolver::process_node(bool root) {
  int passes = 0;
  int integral_rounds = 0;
  while (true) {
    const double cutoff = static_cast<double>(threshold()) + 1.0 - kIntTol;
    const lp::Status st = lp_->solve(cutoff);
    if (st == lp::Status::Infeasible || st == lp::Status::CutoffExceeded) return std::nullopt;
    if (st != lp::Status::Optimal) throw std::runtime_error(std::string("follower LP: ") + lp::to_string(st));
    const double bound = lp_->objective_value();
    if (std::floor(bound + kIntTol) <= static_cast<double>(threshold())) return std::nullopt;

    FollowerPoint pt = point();
    const bool integral = point_integral();

    if (root && opt_.pool) {
      std::vector<FollowerCut> from_pool;
      for (const auto& cut : opt_.pool->cuts())
        if (cut.violation(pt.x, pt.y) > kIntTol) from_pool.push_back(cut);
      if (!from_pool.empty()) {
        res_.pool_cuts += static_cast<std::int64_t>(from_pool.size());
        add_cuts(from_pool, false);
        continue;
      }
    }

    std::vector<FollowerCut> cuts;
    if (integral) {
      cuts = separate_gsec(ctx_, pt, opt_.gsec_nondecreasing);
      if (!cuts.empty() && ++integral_rounds > 10 * n_ + 100)
        throw std::runtime_error("follower: no progress separating an integral point");
    } else if (passes < opt_.max_fractional_passes) {
      cuts = separate_logical(ctx_, pt);
      if (cuts.empty()) cuts = separate_gsec(ctx_, pt, opt_.gsec_nondecreasing);
      if (cuts.empty()) cuts = separate_cycle_cover(ctx_, pt);
      if (!cuts.empty()) ++passes;
    }
    if (!cuts.empty()) {
      add_cuts(cuts, true);
      continue;
    }

    if (integral) {
      offer(extract_tour(pt));
      return std::nullopt;
    }
    if (auto tour = primal_heuristic(ctx_, pt, w_)) offer(*tour);
    if (std::floor(bound + kIntTol) <= static_cast<double>(threshold())) return std::nullopt;
    return bound;
  }
}

FollowerResult FollowerSolver::run() {
  for (const auto& t : opt_.hints) offer(t);
  // Preprocessing cuts off three-node tours through interdicted nodes.
  if (opt_.preprocess) {
    const int dep = inst_.depot;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (a != dep && b != dep && w_[a] + w_[b] > static_cast<double>(incumbent_value_))
          offer(make_tour(inst_, {dep, a, b}));
  }

  std::vector<TreeNode> stack;
  stack.push_back({{}, std::numeric_limits<double>::infinity()});
  std::vector<int> touched;
  bool timed_out = false;
  double open_bound = -1.0;

  while (!stack.empty()) {
    if (opt_.deadline.expired()) {
      timed_out = true;
      for (const auto& node : stack) open_bound = std::max(open_bound, node.parent_bound);
      break;
    }
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    if (std::floor(node.parent_bound + kIntTol) <= static_cast<double>(threshold())) continue;

    for (int v : touched) lp_->set_bounds(v, root_lo_[v], root_hi_[v]);
    touched.clear();
    for (const auto& b : node.bounds) {
      lp_->set_bounds(b.var, b.lo, b.hi);
      touched.push_back(b.var);
    }
    const bool root = res_.nodes == 0;
    ++res_.nodes;
    if (lp_->num_rows() - base_rows_ > std::max(200, 4 * n_)) lp_->remove_slack_rows(base_rows_);

    const std::optional<double> bound = process_node(root);
    if (!bound) continue;
    const int var = branching_variable();
    if (var < 0) throw std::logic_error("follower: fractional node without branching candidate");
    TreeNode zero{node.bounds, *bound};
    zero.bounds.push_back({var, 0.0, 0.0});
    TreeNode one{std::move(node.bounds), *bound};
    one.bounds.push_back({var, 1.0, 1.0});
    stack.push_back(std::move(zero));
    stack.push_back(std::move(one));
  }

  res_.lp_iterations = lp_->iterations();
  if (incumbent_value_ >= 0) {
    res_.tour = incumbent_;
    res_.value = incumbent_value_;
  }
  const std::int64_t cutoff = opt_.lower_cutoff.value_or(-1);
  if (timed_out) {
    res_.status = FollowerStatus::TimeOut;
    res_.bound = std::max<std::int64_t>({res_.value, cutoff,
                                          static_cast<std::int64_t>(std::floor(open_bound + kIntTol))});
  } else if (cutoff >= 0 && incumbent_value_ <= cutoff) {
    res_.status = FollowerStatus::CutoffPruned;
    res_.bound = cutoff;
  } else {
    res_.status = FollowerStatus::Optimal;
    res_.bound = res_.value;
  }
  return res_;
}

FollowerPoint FollowerSolver::root_point() {
  for (int round = 0; round <= 10 * n_ + 100; ++round) {
    const lp::Status st = lp_->solve();
    if (st != lp::Status::Optimal) throw std::runtime_error(std::string("follower root LP: ") + lp::to_string(st));
    FollowerPoint pt = point();
    std::vector<FollowerCut> cuts = separate_logical(ctx_, pt);
    if (cuts.empty()) return pt;
    add_cuts(cuts, false);
  }
  throw std::runtime_error("follower root LP: logical separation did not converge");
}

}  // namespace

FollowerPoint follower_root_point(const FollowerContext& ctx, const Interdiction& z) {
  if (z.size() != ctx.n()) throw std::invalid_argument("follower_root_point: interdiction size mismatch");
  FollowerOptions opt;
  FollowerSolver solver(ctx, z, opt);
  return solver.root_point();
}

FollowerResult solve_follower(const FollowerContext& ctx, const Interdiction& z, const FollowerOptions& options) {
  if (z.size() != ctx.n()) throw std::invalid_argument("solve_follower: interdiction size mismatch");
  FollowerSolver solver(ctx, z, options);
  return solver.run();
}

}  // namespace oig
