#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "oig/instance.hpp"
#include "oig/tour.hpp"

namespace oig {

/// Distinct follower tours (compared as cycles). capacity 0 means unbounded.
class SolutionPool {
 public:
  explicit SolutionPool(std::size_t capacity = 0) : capacity_(capacity) {}
  /// Returns false when the tour is already present or the pool is full.
  bool add(const Tour& tour, int depot);
  bool contains(const Tour& tour, int depot) const;
  std::size_t size() const { return tours_.size(); }
  bool empty() const { return tours_.empty(); }
  std::size_t capacity() const { return capacity_; }
  const std::vector<Tour>& tours() const { return tours_; }

 private:
  std::size_t capacity_;
  std::vector<Tour> tours_;
  std::set<std::vector<int>> keys_;
};

/// Drops nodes flagged in `removable` whose removal does not lengthen the
/// tour. Never goes below three nodes and never drops position 0.
void repair(Tour& tour, const Instance& inst, std::span<const std::uint8_t> removable);

struct Improved {
  Tour tour;
  double prize = 0.0;
};

/// One pooled tour through repair and the {2-opt; insert} loop, which stops
/// once the prize no longer grows or exceeds `threshold`.
Improved improve_pooled(const Tour& tour, const Instance& inst, std::span<const double> w,
                        std::span<const std::uint8_t> removable,
                        double threshold = std::numeric_limits<double>::infinity());

/// First pooled tour whose improved prize exceeds the threshold.
std::optional<Improved> find_heuristic_fol_soln(const Instance& inst, std::span<const double> w,
                                                std::span<const std::uint8_t> removable,
                                                double threshold, const SolutionPool& pool);

/// All distinct tours from the pool whose (optionally improved) prize exceeds
/// the threshold, most violated first, at most max_count.
std::vector<Improved> heuristic_cut_tours(const Instance& inst, std::span<const double> w,
                                          std::span<const std::uint8_t> removable, double threshold,
                                          const SolutionPool& pool, std::size_t max_count, bool improve);

/// {2-opt; insert} until the weight stops growing, then a final 2-opt.
void improve_tour(Tour& tour, const Instance& inst, std::span<const double> w);

/// Nodes with z > 0.5.
std::vector<std::uint8_t> interdicted_mask(std::span<const double> z);

}  // namespace oig
