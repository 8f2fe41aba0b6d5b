#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "oig/instance.hpp"
#include "oig/lp.hpp"
#include "oig/timer.hpp"
#include "oig/tour.hpp"

namespace oig {

/// Index of the undirected edge {i, j}, i != j, among the n(n-1)/2 pairs.
inline int edge_id(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}
inline int num_edges(int n) { return n * (n - 1) / 2; }

enum class CutKind { Gsec, Logical, CycleCover };
const char* to_string(CutKind kind);

/// A linear inequality over the follower variables, expressed on global edge
/// ids and node indices so that it is independent of any particular LP.
struct FollowerCut {
  CutKind kind = CutKind::Gsec;
  std::vector<std::pair<int, double>> x;  // (edge id, coefficient)
  std::vector<std::pair<int, double>> y;  // (node, coefficient)
  lp::RowSense sense = lp::RowSense::GreaterEqual;
  double rhs = 0.0;

  /// Positive when the point violates the cut.
  double violation(std::span<const double> xv, std::span<const double> yv) const;
  std::string key() const;
};

/// A point in (x, y) space: x per global edge id, y per node.
struct FollowerPoint {
  std::vector<double> x;
  std::vector<double> y;
};

/// Shared per-instance data for the follower solver and its separators.
class FollowerContext {
 public:
  explicit FollowerContext(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  int n() const { return inst_->n; }
  int depot() const { return inst_->depot; }
  std::int64_t budget() const { return inst_->distance_budget; }
  std::pair<int, int> endpoints(int e) const { return ends_[e]; }
  /// Edges that can lie on some budget-feasible depot tour.
  const std::vector<int>& usable_edges() const { return usable_; }
  bool node_reachable(int v) const { return reachable_[v] != 0; }
  std::int64_t shortest_path(int i, int j) const { return sp_[static_cast<std::size_t>(i) * n() + j]; }

 private:
  const Instance* inst_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> usable_;
  std::vector<std::uint8_t> reachable_;
  std::vector<std::int64_t> sp_;
};

/// Bounded FIFO store of GSEC and cycle-cover cuts shared across follower solves.
class FollowerCutPool {
 public:
  explicit FollowerCutPool(std::size_t capacity = 5000) : capacity_(capacity) {}
  /// Returns false for duplicates. Evicts the oldest entry when full.
  bool add(const FollowerCut& cut);
  std::size_t size() const { return cuts_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::deque<FollowerCut>& cuts() const { return cuts_; }

 private:
  std::size_t capacity_;
  std::deque<FollowerCut> cuts_;
  std::set<std::string> keys_;
};

std::vector<FollowerCut> separate_logical(const FollowerContext& ctx, const FollowerPoint& pt);
/// Non-decreasing order of y (the default) or non-increasing.
std::vector<FollowerCut> separate_gsec(const FollowerContext& ctx, const FollowerPoint& pt,
                                       bool nondecreasing = true);
std::vector<FollowerCut> separate_cycle_cover(const FollowerContext& ctx, const FollowerPoint& pt);

/// Extra rows and selector binaries for interdicted nodes.
struct Preprocessing {
  std::vector<int> fixed_zero;  // nodes with y fixed to 0
  struct Selector {
    int node;
    std::vector<std::pair<int, int>> pairs;  // (a, b) with d_ai + d_ib < d_ab
  };
  std::vector<Selector> selectors;
};
Preprocessing follower_preprocessing(const Instance& inst, const Interdiction& z);

/// Builds a budget-feasible depot tour from an LP point, improved with 2-opt
/// and insertion under weights w. Returns nothing if no 3-node tour fits.
std::optional<Tour> primal_heuristic(const FollowerContext& ctx, const FollowerPoint& pt,
                                     std::span<const double> w);

enum class FollowerStatus { Optimal, CutoffPruned, TimeOut };
const char* to_string(FollowerStatus status);

using CutObserver = std::function<void(const FollowerCut&)>;

struct FollowerOptions {
  /// Nodes whose bound cannot beat this value are pruned.
  std::optional<std::int64_t> lower_cutoff;
  FollowerCutPool* pool = nullptr;
  bool preprocess = false;
  bool gsec_nondecreasing = true;
  int max_fractional_passes = 20;
  Deadline deadline;
  CutObserver observer;
  /// Known feasible tours used as starting incumbents.
  std::span<const Tour> hints;
};

struct FollowerResult {
  FollowerStatus status = FollowerStatus::Optimal;
  Tour tour;                // best tour found, empty if none
  std::int64_t value = 0;   // prize of `tour` (0 if empty)
  std::int64_t bound = 0;   // proven upper bound on the optimum
  std::int64_t nodes = 0;
  std::int64_t gsec_cuts = 0;
  std::int64_t logical_cuts = 0;
  std::int64_t cc_cuts = 0;
  std::int64_t pool_cuts = 0;
  std::int64_t lp_iterations = 0;
};

/// Optimum of the follower LP relaxation (degree, depot and budget rows plus
/// logical cuts) under z.
FollowerPoint follower_root_point(const FollowerContext& ctx, const Interdiction& z);

/// Exact orienteering under interdiction z by branch-and-cut.
FollowerResult solve_follower(const FollowerContext& ctx, const Interdiction& z,
                              const FollowerOptions& options = {});

}  // namespace oig
