#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oig/ga.hpp"
#include "oig/instance.hpp"
#include "oig/leader.hpp"
#include "oig/tour.hpp"

namespace oig {

enum class Mode { Exact, Ga, Oracle };
const char* to_string(Mode m);
Mode parse_mode(std::string_view s);

/// One solver run, as written to the CSV report.
struct RunRecord {
  std::string instance;
  std::string scheme;   // "u" or "r"
  int q = 0;
  std::string setting;  // I..IFHCP, "GA" or "oracle"
  double t = 0.0;
  double t_sep = 0.0;
  double gap = 0.0;
  double root_gap = 0.0;
  std::int64_t value = 0;
  double bound = 0.0;
  std::int64_t nodes = 0;
  std::int64_t int_cuts = 0;
  std::int64_t frac_cuts = 0;
  std::uint64_t seed = 0;
  std::string status;   // optimal, time_out, heuristic, error
  std::optional<double> delta;  // GA rows: 100 (z_GA - z_BC) / z_BC
  std::string error;
};

struct RunSpec {
  Mode mode = Mode::Exact;
  Setting setting = Setting::IFHC;
  double time_limit = 0.0;
  std::uint64_t seed = 0;
  GaParams ga;  // seed and time limit are taken from the fields above
};

struct RunOutcome {
  RunRecord record;
  Interdiction z;
  Tour tour;
  std::optional<std::int64_t> estimate;  // GA fitness of z
};

/// Dispatches to the exact solver, the GA or the brute-force oracle.
/// Solver exceptions are caught and reported with status "error".
RunOutcome run_one(const Instance& inst, const RunSpec& spec);

/// Fills delta on GA rows from an optimal exact or oracle row with the same
/// instance, scheme and Q.
void fill_deltas(std::vector<RunRecord>& records);

struct Aggregate {
  int q = 0;
  std::string setting;
  int runs = 0;
  int n_opt = 0;
  double t = 0.0;
  double t_sep = 0.0;
  double gap = 0.0;
  double root_gap = 0.0;
  double nodes = 0.0;
  double int_cuts = 0.0;
  double frac_cuts = 0.0;
  std::optional<double> delta;
};

/// Means per (Q, setting), in order of first appearance.
std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records);

struct CsvOptions {
  /// Write "-" instead of wall-clock columns so that reports are reproducible.
  bool timings = true;
};

std::string csv_header();
std::string csv_row(const RunRecord& r, const CsvOptions& options = {});
std::string csv_row(const Aggregate& a, const CsvOptions& options = {});
std::string write_csv(const std::vector<RunRecord>& records, bool with_aggregates,
                      const CsvOptions& options = {});

/// Two decimals, never "-0.00".
std::string fixed2(double v);

/// Solution file: interdicted nodes and the follower tour (1-based TSPLIB ids)
/// with both objective values.
std::string write_solution(const Instance& inst, const RunOutcome& outcome);

}  // namespace oig
