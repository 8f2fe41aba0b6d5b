#pragma once

#include <cstdint>
#include <vector>

#include "oig/instance.hpp"
#include "oig/tour.hpp"

namespace oig::oracle {

struct OpResult {
  std::int64_t value = 0;
  Tour tour;  // empty when no 3-node tour fits the budget
};

/// Enumerates every node set that admits a budget-feasible depot cycle with at
/// least three nodes, by a Held-Karp path DP. Dense 2^(n-1)(n-1) table for
/// n <= 20; above that (up to 32 nodes) a budget-pruned sparse DP whose size
/// is limited by `state_limit`.
class OpOracle {
 public:
  explicit OpOracle(const Instance& inst, std::size_t state_limit = 60'000'000);

  std::int64_t value(const Interdiction& z) const;
  OpResult solve(const Interdiction& z) const;

  /// Number of candidate sets after dropping those with a feasible one-node extension.
  std::size_t num_sets() const { return sets_.size(); }

 private:
  struct Set {
    std::uint32_t mask;  // over non-depot nodes, see others_
    std::int64_t base;   // total prize including the depot
  };
  void build_dense();
  void build_sparse(std::size_t state_limit);
  void reduce(std::vector<std::uint32_t> feasible);
  Tour reconstruct(std::uint32_t mask) const;
  std::int64_t set_value(const Set& s, const Interdiction& z) const;

  const Instance* inst_;
  std::vector<int> others_;
  std::vector<Set> sets_;  // sorted by decreasing base prize
  // Dense DP table (n <= 20) or sparse layers, kept for tour reconstruction.
  std::vector<std::int32_t> dense_;
  struct State {
    std::uint32_t mask;
    std::uint8_t end;
    std::uint8_t parent;
    std::int32_t len;
  };
  std::vector<std::vector<State>> layers_;
};

OpResult op_exact(const Instance& inst, const Interdiction& z);

struct OigExactResult {
  std::int64_t value = 0;
  Interdiction z;
  std::uint64_t evaluated = 0;
};

/// Minimises Phi over interdictions with exactly min(Q, n) nodes, or over all
/// |z| <= Q when full_enumeration is set. Throws std::length_error when the
/// estimated work exceeds work_bound.
OigExactResult oig_exact(const Instance& inst, bool full_enumeration = false,
                         double work_bound = 4e10);
OigExactResult oig_exact(const OpOracle& op, const Instance& inst, bool full_enumeration = false,
                         double work_bound = 4e10);

/// Held-Karp optimal tour length, n <= 18.
std::int64_t tsp_exact(const Instance& inst);

/// Every budget-feasible depot cycle with >= 3 nodes, each cycle once
/// (depot first, nodes[1] < nodes.back()). Refuses n > 11.
std::vector<Tour> enumerate_feasible_tours(const Instance& inst);

}  // namespace oig::oracle
