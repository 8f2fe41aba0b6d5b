#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oig/instance.hpp"

namespace oig {

/// A cycle through distinct nodes. Follower tours keep the depot at position 0.
struct Tour {
  std::vector<int> nodes;
  std::int64_t length = 0;

  bool empty() const { return nodes.empty(); }
  friend bool operator==(const Tour&, const Tour&) = default;
};

/// Sum of distances over consecutive pairs plus the closing edge. Throws
/// std::domain_error on out-of-range nodes.
std::int64_t tour_length(const Instance& inst, std::span<const int> nodes);
Tour make_tour(const Instance& inst, std::vector<int> nodes);

std::int64_t tour_prize(const Tour& tour, const Instance& inst, const Interdiction& z);
double tour_weight(const Tour& tour, std::span<const double> w);

/// Depot at position 0, >= 3 distinct nodes, cached length correct, within B_f.
bool is_follower_feasible(const Tour& tour, const Instance& inst);

/// Rotates so the depot comes first and orients so nodes[1] < nodes.back();
/// two tours describing the same cycle then compare equal.
Tour canonical(Tour tour, int depot);

/// Best-improvement segment reversal to a 2-opt local minimum. Position 0
/// stays fixed. Returns true if the tour changed.
bool two_opt(Tour& tour, const Instance& inst);

/// Repeatedly inserts the non-tour node with the best weight per unit of
/// length increase (non-positive increases first) at its cheapest position,
/// as long as length stays within budget. Only nodes with w > 0 qualify.
/// Returns the tour weight afterwards.
double insert(Tour& tour, const Instance& inst, std::span<const double> w, std::int64_t budget);

}  // namespace oig
