#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "oig/follower.hpp"
#include "oig/heuristics.hpp"
#include "oig/instance.hpp"
#include "oig/tour.hpp"

namespace oig {

enum class Setting { I, IF, IFH, IFHC, IFHCP };
const char* to_string(Setting s);
Setting parse_setting(std::string_view s);

struct SettingFeatures {
  bool fractional = false;   // heuristic separation at fractional leader points
  bool heuristic = false;    // heuristic before exact separation at integer points
  bool cut_pool = false;     // follower cut pool shared across follower solves
  bool preprocess = false;   // follower preprocessing
  bool solution_pool = false;
};
SettingFeatures features(Setting s);

enum class OigStatus { Optimal, TimeOut };
const char* to_string(OigStatus s);

/// Called for every interdiction cut added to the master, with the tour that
/// defines it and whether it was separated at a fractional point.
using InterdictionCutObserver = std::function<void(const Tour&, bool fractional)>;

struct LeaderOptions {
  Setting setting = Setting::IFHC;
  double time_limit = 0.0;  // seconds, <= 0 means none
  std::uint64_t seed = 0;   // recorded only; the exact solver is deterministic
  int max_fractional_passes = 10;
  std::size_t max_cuts_per_pass = 10;
  /// Fractional separation evaluates pooled tours as-is instead of improving them.
  bool evaluate_only = false;
  bool gsec_nondecreasing = true;
  InterdictionCutObserver observer;
  CutObserver follower_observer;
};

struct OigResult {
  OigStatus status = OigStatus::Optimal;
  Interdiction z;
  Tour tour;                    // an optimal follower tour for z
  std::int64_t upper_bound = 0; // incumbent value, exactly confirmed
  double lower_bound = 0.0;
  double gap = 0.0;             // percent
  double root_gap = 0.0;        // percent, after root processing
  std::int64_t nodes = 0;
  std::int64_t int_cuts = 0;
  std::int64_t frac_cuts = 0;
  std::int64_t follower_solves = 0;
  std::int64_t heuristic_cuts = 0;  // integer cuts found without an exact solve
  double time = 0.0;
  double sep_time = 0.0;
  std::uint64_t seed = 0;
};

double gap_percent(double upper, double lower);

/// Exact branch-and-cut on the single-level interdiction-cut reformulation.
OigResult solve_oig(const Instance& inst, const LeaderOptions& options = {});

}  // namespace oig
