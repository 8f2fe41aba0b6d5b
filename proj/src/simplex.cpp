#include "oig/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oig::lp {
namespace {

// Replacement for infinite structural bounds; a solution resting on one of
// these reports Unbounded.
constexpr double kBig = 1e7;
constexpr int kRefactorPeriod = 100;
constexpr int kBlandAfterDegenerate = 50;
constexpr double kPerturbation = 1e-7;
// Largest dual infeasibility removed by shifting the cost of an unbounded column.
constexpr double kMaxShift = 1e-5;

/// Divides a row by its largest absolute coefficient.
Row equilibrate(const Row& row, double& scale) {
  scale = 0.0;
  for (auto [j, a] : row.coefs) scale = std::max(scale, std::abs(a));
  if (scale == 0.0) scale = 1.0;
  Row out = row;
  for (auto& c : out.coefs) c.second /= scale;
  out.rhs /= scale;
  return out;
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::CutoffExceeded: return "cutoff_exceeded";
    case Status::Unbounded: return "unbounded";
    case Status::IterationLimit: return "iteration_limit";
  }
  return "?";
}

int LpModel::add_variable(double lo, double hi, double obj) {
  objective.push_back(obj);
  lower.push_back(lo);
  upper.push_back(hi);
  return static_cast<int>(objective.size()) - 1;
}

void LpModel::validate() const {
  const int n = num_variables();
  if (lower.size() != objective.size() || upper.size() != objective.size())
    throw std::invalid_argument("LpModel: bound/objective size mismatch");
  for (int j = 0; j < n; ++j)
    if (lower[j] > upper[j]) throw std::invalid_argument("LpModel: lower bound above upper bound");
  for (const auto& row : rows)
    for (auto [j, a] : row.coefs)
      if (j < 0 || j >= n) throw std::invalid_argument("LpModel: row references an undeclared variable");
}

Simplex::Simplex(const LpModel& model, Tolerances tol) : tol_(tol) {
  model.validate();
  num_struct_ = model.num_variables();
  sign_ = model.sense == Sense::Maximize ? 1.0 : -1.0;
  for (int j = 0; j < num_struct_; ++j) {
    double lo = model.lower[j], hi = model.upper[j];
    std::uint8_t art = 0;
    if (std::isinf(lo)) { lo = -kBig; art |= 1; }
    if (std::isinf(hi)) { hi = kBig; art |= 2; }
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(sign_ * model.objective[j]);
    artificial_.push_back(art);
  }
  x_.assign(num_struct_, 0.0);
  state_.assign(num_struct_, VarState::AtLower);
  pos_.assign(num_struct_, -1);
  d_.assign(num_struct_, 0.0);
  for (const auto& original : model.rows) {
    double scale;
    Row row = equilibrate(original, scale);
    scales_.push_back(scale);
    rows_.push_back(row);
    double lo = row.sense == RowSense::LessEqual ? -kInf : row.rhs;
    double hi = row.sense == RowSense::GreaterEqual ? kInf : row.rhs;
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(0.0);
    x_.push_back(0.0);
    state_.push_back(VarState::Basic);
    pos_.push_back(-1);
    d_.push_back(0.0);
  }
  reset_slack_basis();
}

void Simplex::place_nonbasic(int j) {
  const bool lo_finite = std::isfinite(lo_[j]);
  const bool hi_finite = std::isfinite(hi_[j]);
  if (lo_finite && hi_finite) {
    bool upper = d_[j] > 0.0;
    state_[j] = upper ? VarState::AtUpper : VarState::AtLower;
    x_[j] = upper ? hi_[j] : lo_[j];
  } else if (lo_finite) {
    state_[j] = VarState::AtLower;
    x_[j] = lo_[j];
  } else {
    state_[j] = VarState::AtUpper;
    x_[j] = hi_[j];
  }
}

void Simplex::reset_slack_basis() {
  const int m = num_rows();
  const int nc = num_cols();
  tab_.assign(m, std::vector<double>(nc, 0.0));
  basis_.assign(m, -1);
  std::fill(pos_.begin(), pos_.end(), -1);
  for (int r = 0; r < m; ++r) {
    for (auto [j, a] : rows_[r].coefs) tab_[r][j] -= a;
    const int slack = num_struct_ + r;
    tab_[r][slack] = 1.0;
    basis_[r] = slack;
    pos_[slack] = r;
    state_[slack] = VarState::Basic;
  }
  for (int j = 0; j < num_struct_; ++j) {
    d_[j] = cost_[j];
    place_nonbasic(j);
  }
  recompute_basic_values();
  recompute_reduced_costs();
  pivots_since_refactor_ = 0;
}

void Simplex::recompute_basic_values() {
  const int m = num_rows();
  const int nc = num_cols();
  for (int r = 0; r < m; ++r) {
    const auto& tr = tab_[r];
    double v = 0.0;
    for (int j = 0; j < nc; ++j)
      if (state_[j] != VarState::Basic && tr[j] != 0.0) v -= tr[j] * x_[j];
    x_[basis_[r]] = v;
  }
}

void Simplex::recompute_reduced_costs() {
  const int m = num_rows();
  const int nc = num_cols();
  d_ = cost_;
  for (int r = 0; r < m; ++r) {
    const double cb = cost_[basis_[r]];
    if (cb == 0.0) continue;
    const auto& tr = tab_[r];
    for (int j = 0; j < nc; ++j) d_[j] -= cb * tr[j];
  }
  for (int r = 0; r < m; ++r) d_[basis_[r]] = 0.0;
}

bool Simplex::refactor() {
  const int m = num_rows();
  const int nc = num_cols();
  std::vector<std::vector<double>> mat(m, std::vector<double>(nc, 0.0));
  for (int r = 0; r < m; ++r) {
    for (auto [j, a] : rows_[r].coefs) mat[r][j] += a;
    mat[r][num_struct_ + r] = -1.0;
  }
  std::vector<int> cols = basis_;
  std::vector<int> new_basis(m, -1);
  std::vector<char> assigned(m, 0);
  std::vector<int> nz;
  for (int k : cols) {
    int best = -1;
    double best_abs = 1e-9;
    for (int r = 0; r < m; ++r)
      if (!assigned[r] && std::abs(mat[r][k]) > best_abs) {
        best_abs = std::abs(mat[r][k]);
        best = r;
      }
    if (best < 0) return false;
    assigned[best] = 1;
    new_basis[best] = k;
    auto& pr = mat[best];
    const double piv = pr[k];
    nz.clear();
    for (int j = 0; j < nc; ++j)
      if (pr[j] != 0.0) {
        pr[j] /= piv;
        nz.push_back(j);
      }
    pr[k] = 1.0;
    for (int r = 0; r < m; ++r) {
      if (r == best) continue;
      const double f = mat[r][k];
      if (f == 0.0) continue;
      auto& row = mat[r];
      for (int j : nz) row[j] -= f * pr[j];
      row[k] = 0.0;
    }
  }
  tab_ = std::move(mat);
  basis_ = std::move(new_basis);
  std::fill(pos_.begin(), pos_.end(), -1);
  for (int r = 0; r < m; ++r) {
    pos_[basis_[r]] = r;
    state_[basis_[r]] = VarState::Basic;
  }
  recompute_basic_values();
  recompute_reduced_costs();
  pivots_since_refactor_ = 0;
  return true;
}

double Simplex::max_primal_infeasibility() const {
  double worst = 0.0;
  for (int k : basis_) {
    worst = std::max(worst, lo_[k] - x_[k]);
    worst = std::max(worst, x_[k] - hi_[k]);
  }
  return worst;
}

bool Simplex::make_dual_feasible(bool* shifted) {
  const int m = num_rows();
  const int nc = num_cols();
  for (int j = 0; j < nc; ++j) {
    if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
    double target;
    VarState to;
    const bool wrong = (state_[j] == VarState::AtLower && d_[j] > tol_.dual) ||
                       (state_[j] == VarState::AtUpper && d_[j] < -tol_.dual);
    if (wrong && shifted && std::abs(d_[j]) <= kMaxShift &&
        (!std::isfinite(lo_[j]) || !std::isfinite(hi_[j]))) {
      cost_[j] -= d_[j];
      d_[j] = 0.0;
      *shifted = true;
      continue;
    }
    if (state_[j] == VarState::AtLower && d_[j] > tol_.dual) {
      if (!std::isfinite(hi_[j])) return false;
      target = hi_[j];
      to = VarState::AtUpper;
    } else if (state_[j] == VarState::AtUpper && d_[j] < -tol_.dual) {
      if (!std::isfinite(lo_[j])) return false;
      target = lo_[j];
      to = VarState::AtLower;
    } else {
      continue;
    }
    const double delta = target - x_[j];
    for (int r = 0; r < m; ++r)
      if (tab_[r][j] != 0.0) x_[basis_[r]] -= tab_[r][j] * delta;
    x_[j] = target;
    state_[j] = to;
  }
  return true;
}

void Simplex::pivot(int r, int q) {
  const int m = num_rows();
  const int nc = num_cols();
  auto& pr = tab_[r];
  const double piv = pr[q];
  static thread_local std::vector<int> nz;
  nz.clear();
  for (int j = 0; j < nc; ++j)
    if (pr[j] != 0.0) {
      pr[j] /= piv;
      if (std::abs(pr[j]) < 1e-14) pr[j] = 0.0;
      else nz.push_back(j);
    }
  pr[q] = 1.0;
  for (int i = 0; i < m; ++i) {
    if (i == r) continue;
    auto& row = tab_[i];
    const double f = row[q];
    if (f == 0.0) continue;
    for (int j : nz) row[j] -= f * pr[j];
    row[q] = 0.0;
  }
  const double fd = d_[q];
  if (fd != 0.0) {
    for (int j : nz) d_[j] -= fd * pr[j];
  }
  d_[q] = 0.0;
  const int leaving = basis_[r];
  pos_[leaving] = -1;
  basis_[r] = q;
  pos_[q] = r;
  state_[q] = VarState::Basic;
  ++pivots_since_refactor_;
  ++iterations_;
}

Status Simplex::primal_simplex() {
  const int m = num_rows();
  const int nc = num_cols();
  const std::int64_t limit = iterations_ + 20000 + 50LL * (m + nc);
  int degenerate = 0;
  while (true) {
    if (iterations_ > limit) return Status::IterationLimit;
    if (pivots_since_refactor_ >= kRefactorPeriod && !refactor()) reset_slack_basis();
    const bool bland = degenerate > kBlandAfterDegenerate;

    int q = -1;
    double best = 0.0;
    for (int j = 0; j < nc; ++j) {
      if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
      double score = 0.0;
      if (state_[j] == VarState::AtLower && d_[j] > tol_.dual) score = d_[j];
      else if (state_[j] == VarState::AtUpper && d_[j] < -tol_.dual) score = -d_[j];
      if (score <= 0.0) continue;
      if (bland) {
        q = j;
        break;
      }
      if (score > best) {
        best = score;
        q = j;
      }
    }
    if (q < 0) return Status::Optimal;
    const double sigma = state_[q] == VarState::AtLower ? 1.0 : -1.0;

    // Harris two-pass ratio test.
    double theta_relaxed = kInf;
    for (int r = 0; r < m; ++r) {
      const double a = tab_[r][q];
      if (std::abs(a) <= tol_.pivot) continue;
      const double rate = -a * sigma;
      const int k = basis_[r];
      double lim;
      if (rate > 0.0) {
        if (!std::isfinite(hi_[k])) continue;
        lim = (hi_[k] + tol_.primal - x_[k]) / rate;
      } else {
        if (!std::isfinite(lo_[k])) continue;
        lim = (lo_[k] - tol_.primal - x_[k]) / rate;
      }
      theta_relaxed = std::min(theta_relaxed, lim);
    }
    int leave = -1;
    double theta = kInf, best_pivot = 0.0;
    for (int r = 0; r < m; ++r) {
      const double a = tab_[r][q];
      if (std::abs(a) <= tol_.pivot) continue;
      const double rate = -a * sigma;
      const int k = basis_[r];
      double lim;
      if (rate > 0.0) {
        if (!std::isfinite(hi_[k])) continue;
        lim = (hi_[k] - x_[k]) / rate;
      } else {
        if (!std::isfinite(lo_[k])) continue;
        lim = (lo_[k] - x_[k]) / rate;
      }
      if (lim > theta_relaxed) continue;
      bool take;
      if (bland) take = leave < 0 || lim < theta - 1e-12 || (lim <= theta + 1e-12 && k < basis_[leave]);
      else take = std::abs(a) > best_pivot;
      if (take) {
        leave = r;
        theta = lim;
        best_pivot = std::abs(a);
      }
    }
    const double flip = hi_[q] - lo_[q];
    if (leave < 0 && !std::isfinite(flip)) return Status::Unbounded;

    if (leave < 0 || flip <= std::max(theta, 0.0)) {
      for (int r = 0; r < m; ++r) {
        const double a = tab_[r][q];
        if (a != 0.0) x_[basis_[r]] -= a * sigma * flip;
      }
      x_[q] = sigma > 0 ? hi_[q] : lo_[q];
      state_[q] = sigma > 0 ? VarState::AtUpper : VarState::AtLower;
      degenerate = 0;
      ++iterations_;
      continue;
    }

    theta = std::max(theta, 0.0);
    if (theta > 0.0) {
      for (int r = 0; r < m; ++r) {
        const double a = tab_[r][q];
        if (a != 0.0) x_[basis_[r]] -= a * sigma * theta;
      }
      x_[q] += sigma * theta;
    }
    const int k = basis_[leave];
    const double rate = -tab_[leave][q] * sigma;
    if (rate > 0.0) {
      x_[k] = hi_[k];
      state_[k] = VarState::AtUpper;
    } else {
      x_[k] = lo_[k];
      state_[k] = VarState::AtLower;
    }
    pivot(leave, q);
    degenerate = theta < 1e-12 ? degenerate + 1 : 0;
  }
}

Status Simplex::dual_simplex(std::optional<double> cutoff_internal) {
  // Perturb the costs of boxed nonbasic columns away from zero reduced cost;
  // this keeps the dual feasible and breaks the dual degeneracy that makes
  // the plain method stall. `slack` bounds the objective error it introduces.
  const std::vector<double> original = cost_;
  double slack = 0.0;
  const int nc0 = num_cols();
  for (int j = 0; j < nc0; ++j) {
    if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
    if (!std::isfinite(lo_[j]) || !std::isfinite(hi_[j])) continue;
    // Deterministic spread in [1, 2) so that ties between columns are broken.
    const double spread = 1.0 + static_cast<double>((static_cast<std::uint64_t>(j) * 2654435761ULL) % 1024) / 1024.0;
    const double eps = kPerturbation * spread * (1.0 + std::abs(cost_[j]));
    const double delta = state_[j] == VarState::AtLower ? -eps : eps;
    cost_[j] += delta;
    d_[j] += delta;
    slack += eps * std::max(std::abs(lo_[j]), std::abs(hi_[j]));
  }
  bool shifted = false;
  auto finish = [&](Status st) {
    cost_ = original;
    recompute_reduced_costs();
    return st;
  };

  const int m = num_rows();
  const int nc = num_cols();
  const std::int64_t limit = iterations_ + 20000 + 50LL * (m + nc);
  int degenerate = 0;
  while (true) {
    if (iterations_ > limit) return finish(Status::IterationLimit);
    if (pivots_since_refactor_ >= kRefactorPeriod) {
      if (!refactor()) return finish(Status::IterationLimit);
      if (!make_dual_feasible(&shifted)) return finish(Status::IterationLimit);
    }
    // A shifted cost has no bounded effect on the objective, so the early exit is off.
    if (cutoff_internal && !shifted && objective_value() * sign_ + slack <= *cutoff_internal - 1e-9)
      return finish(Status::CutoffExceeded);
    const bool bland = degenerate > kBlandAfterDegenerate;

    int r = -1;
    double worst = tol_.primal;
    for (int i = 0; i < m; ++i) {
      const int k = basis_[i];
      const double infeas = std::max(lo_[k] - x_[k], x_[k] - hi_[k]);
      if (infeas <= tol_.primal) continue;
      if (bland) {
        if (r < 0 || k < basis_[r]) r = i;
      } else if (infeas > worst) {
        worst = infeas;
        r = i;
      }
    }
    if (r < 0) return finish(Status::Optimal);
    const int k = basis_[r];
    const double s = x_[k] < lo_[k] ? 1.0 : -1.0;
    const double target = s > 0 ? lo_[k] : hi_[k];
    const auto& tr = tab_[r];

    double theta_relaxed = kInf;
    for (int j = 0; j < nc; ++j) {
      if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
      const double a = tr[j];
      if (std::abs(a) <= tol_.pivot) continue;
      const bool ok = state_[j] == VarState::AtLower ? -a * s > 0.0 : a * s > 0.0;
      if (!ok) continue;
      theta_relaxed = std::min(theta_relaxed, (std::abs(d_[j]) + tol_.dual) / std::abs(a));
    }
    int q = -1;
    double best_pivot = 0.0, best_ratio = kInf;
    for (int j = 0; j < nc; ++j) {
      if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
      const double a = tr[j];
      if (std::abs(a) <= tol_.pivot) continue;
      const bool ok = state_[j] == VarState::AtLower ? -a * s > 0.0 : a * s > 0.0;
      if (!ok) continue;
      const double ratio = std::abs(d_[j]) / std::abs(a);
      if (ratio > theta_relaxed) continue;
      bool take;
      if (bland) take = q < 0 || ratio < best_ratio - 1e-12;
      else take = std::abs(a) > best_pivot;
      if (take) {
        q = j;
        best_pivot = std::abs(a);
        best_ratio = ratio;
      }
    }
    if (q < 0) return finish(Status::Infeasible);

    const double delta = (x_[k] - target) / tr[q];
    for (int i = 0; i < m; ++i) {
      const double a = tab_[i][q];
      if (a != 0.0) x_[basis_[i]] -= a * delta;
    }
    x_[q] += delta;
    x_[k] = target;
    state_[k] = s > 0 ? VarState::AtLower : VarState::AtUpper;
    pivot(r, q);
    degenerate = best_ratio < 1e-12 ? degenerate + 1 : 0;
  }
}

bool Simplex::residual_ok() const {
  for (int i = 0; i < num_rows(); ++i) {
    double act = 0.0, scale = 1.0;
    for (auto [j, a] : rows_[i].coefs) {
      act += a * x_[j];
      scale = std::max(scale, std::abs(a * x_[j]));
    }
    if (std::abs(act - x_[num_struct_ + i]) > 1e-9 * scale) return false;
  }
  return max_primal_infeasibility() <= tol_.primal;
}

Status Simplex::solve(std::optional<double> cutoff) {
  std::optional<double> cutoff_internal;
  if (cutoff) cutoff_internal = sign_ * *cutoff;

  Status st = Status::IterationLimit;
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (attempt >= 2) reset_slack_basis();
    if (max_primal_infeasibility() <= tol_.primal) {
      st = primal_simplex();
    } else {
      if (!make_dual_feasible()) {
        reset_slack_basis();
        make_dual_feasible();
      }
      st = dual_simplex(cutoff_internal);
      if (st == Status::Optimal) st = primal_simplex();
    }
    if (st == Status::Optimal) {
      if (!residual_ok()) {
        if (!refactor()) reset_slack_basis();
        if (!residual_ok()) continue;
        // re-check optimality on the refreshed tableau
        st = max_primal_infeasibility() <= tol_.primal ? primal_simplex() : Status::IterationLimit;
        if (st != Status::Optimal) continue;
      }
      for (int j = 0; j < num_struct_; ++j) {
        if ((artificial_[j] & 1) && x_[j] <= -kBig + 1.0) return Status::Unbounded;
        if ((artificial_[j] & 2) && x_[j] >= kBig - 1.0) return Status::Unbounded;
      }
      if (cutoff_internal && objective_value() * sign_ <= *cutoff_internal + 1e-9) return Status::CutoffExceeded;
      return Status::Optimal;
    }
    if (st == Status::Infeasible || st == Status::CutoffExceeded) {
      // Confirm on a fresh factorisation before trusting the verdict.
      if (pivots_since_refactor_ == 0) return st;
      if (!refactor()) reset_slack_basis();
      continue;
    }
    if (st == Status::Unbounded) return st;
    if (!refactor()) reset_slack_basis();
  }
  return st;
}

double Simplex::objective_value() const {
  double v = 0.0;
  for (int j = 0; j < num_struct_; ++j) v += cost_[j] * x_[j];
  return sign_ * v;
}

std::vector<double> Simplex::values() const { return {x_.begin(), x_.begin() + num_struct_}; }

int Simplex::add_row(const Row& original) {
  double scale;
  const Row row = equilibrate(original, scale);
  for (auto [j, a] : row.coefs)
    if (j < 0 || j >= num_struct_) throw std::invalid_argument("Simplex::add_row: undeclared variable");
  const int c = num_cols();
  const int m = num_rows();
  for (auto& tr : tab_) tr.push_back(0.0);
  std::vector<double> nr(static_cast<std::size_t>(c) + 1, 0.0);
  double activity = 0.0;
  for (auto [j, a] : row.coefs) {
    nr[j] -= a;
    activity += a * x_[j];
  }
  nr[c] = 1.0;
  for (auto [j, a] : row.coefs) {
    const int r = pos_[j];
    if (r < 0) continue;
    const double f = nr[j];
    if (f == 0.0) continue;
    const auto& tr = tab_[r];
    for (int k = 0; k < c; ++k)
      if (tr[k] != 0.0) nr[k] -= f * tr[k];
    nr[j] = 0.0;
  }
  tab_.push_back(std::move(nr));
  rows_.push_back(row);
  scales_.push_back(scale);
  lo_.push_back(row.sense == RowSense::LessEqual ? -kInf : row.rhs);
  hi_.push_back(row.sense == RowSense::GreaterEqual ? kInf : row.rhs);
  cost_.push_back(0.0);
  x_.push_back(activity);
  d_.push_back(0.0);
  state_.push_back(VarState::Basic);
  pos_.push_back(m);
  basis_.push_back(c);
  return m;
}

void Simplex::add_rows(std::span<const Row> rows) {
  for (const auto& r : rows) add_row(r);
}

int Simplex::remove_slack_rows(int first_removable) {
  const int m = num_rows();
  const int nc = num_cols();
  std::vector<char> drop_row(m, 0);
  int dropped = 0;
  for (int i = std::max(first_removable, 0); i < m; ++i) {
    const int c = num_struct_ + i;
    if (state_[c] != VarState::Basic) continue;
    const bool inside_lo = !std::isfinite(lo_[c]) || x_[c] > lo_[c] + tol_.primal;
    const bool inside_hi = !std::isfinite(hi_[c]) || x_[c] < hi_[c] - tol_.primal;
    if (inside_lo && inside_hi) {
      drop_row[i] = 1;
      ++dropped;
    }
  }
  if (dropped == 0) return 0;

  std::vector<int> new_index(nc, -1);
  int next = 0;
  for (int j = 0; j < nc; ++j) {
    const bool drop = j >= num_struct_ && drop_row[j - num_struct_];
    if (!drop) new_index[j] = next++;
  }
  auto compact = [&](auto& vec) {
    for (int j = 0; j < nc; ++j)
      if (new_index[j] >= 0) vec[new_index[j]] = vec[j];
    vec.resize(next);
  };
  std::vector<std::vector<double>> tab;
  std::vector<int> basis;
  tab.reserve(m - dropped);
  for (int r = 0; r < m; ++r) {
    const int k = basis_[r];
    if (new_index[k] < 0) continue;
    auto& row = tab_[r];
    compact(row);
    tab.push_back(std::move(row));
    basis.push_back(new_index[k]);
  }
  compact(lo_);
  compact(hi_);
  compact(cost_);
  compact(x_);
  compact(d_);
  compact(state_);
  std::vector<Row> rows;
  std::vector<double> scales;
  for (int i = 0; i < m; ++i)
    if (!drop_row[i]) {
      rows.push_back(std::move(rows_[i]));
      scales.push_back(scales_[i]);
    }
  rows_ = std::move(rows);
  scales_ = std::move(scales);
  tab_ = std::move(tab);
  basis_ = std::move(basis);
  pos_.assign(next, -1);
  for (int r = 0; r < static_cast<int>(basis_.size()); ++r) pos_[basis_[r]] = r;
  return dropped;
}

void Simplex::set_bounds(int var, double lo, double hi) {
  if (var < 0 || var >= num_struct_) throw std::out_of_range("Simplex::set_bounds");
  if (lo > hi) throw std::invalid_argument("Simplex::set_bounds: lo > hi");
  std::uint8_t art = 0;
  if (std::isinf(lo)) { lo = -kBig; art |= 1; }
  if (std::isinf(hi)) { hi = kBig; art |= 2; }
  artificial_[var] = art;
  lo_[var] = lo;
  hi_[var] = hi;
  if (state_[var] == VarState::Basic) return;
  const double old = x_[var];
  if (state_[var] == VarState::AtUpper) x_[var] = hi;
  else x_[var] = lo;
  const double delta = x_[var] - old;
  if (delta == 0.0) return;
  for (int r = 0; r < num_rows(); ++r) {
    const double a = tab_[r][var];
    if (a != 0.0) x_[basis_[r]] -= a * delta;
  }
}

void Simplex::set_objective(std::span<const double> objective) {
  if (static_cast<int>(objective.size()) != num_struct_) throw std::invalid_argument("Simplex::set_objective: size");
  for (int j = 0; j < num_struct_; ++j) cost_[j] = sign_ * objective[j];
  recompute_reduced_costs();
}

LpSolution solve(const LpModel& model, std::optional<double> cutoff) {
  Simplex simplex(model);
  LpSolution sol;
  sol.status = simplex.solve(cutoff);
  sol.objective = simplex.objective_value();
  sol.values = simplex.values();
  return sol;
}

}  // namespace oig::lp
