#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace oig::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { Maximize, Minimize };
enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class Status { Optimal, Infeasible, CutoffExceeded, Unbounded, IterationLimit };

const char* to_string(Status status);

struct Row {
  std::vector<std::pair<int, double>> coefs;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

struct LpModel {
  Sense sense = Sense::Maximize;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Row> rows;

  int add_variable(double lo, double hi, double obj);
  void add_row(Row row) { rows.push_back(std::move(row)); }
  int num_variables() const { return static_cast<int>(objective.size()); }
  /// Throws std::invalid_argument on lo > hi or out-of-range row references.
  void validate() const;
};

struct LpSolution {
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> values;
};

struct Tolerances {
  double primal = 1e-6;
  double dual = 1e-7;
  double pivot = 1e-9;
};

/// Dense-tableau bounded-variable simplex. Keeps its basis between calls so
/// that adding rows, changing bounds, or changing the objective re-optimises
/// from the previous vertex (dual simplex after row/bound changes, primal
/// simplex after objective changes).
class Simplex {
 public:
  explicit Simplex(const LpModel& model, Tolerances tol = {});

  int num_variables() const { return num_struct_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  int add_row(const Row& row);
  void add_rows(std::span<const Row> rows);
  /// Removes rows whose slack is basic and strictly inside its bounds, for
  /// rows with index >= first_removable. Returns the number removed.
  int remove_slack_rows(int first_removable);

  void set_bounds(int var, double lo, double hi);
  double lower(int var) const { return lo_[var]; }
  double upper(int var) const { return hi_[var]; }
  void set_objective(std::span<const double> objective);

  /// cutoff: for maximisation, stop as soon as the optimum is proven <= cutoff
  /// (>= cutoff for minimisation) and report CutoffExceeded.
  Status solve(std::optional<double> cutoff = std::nullopt);

  double objective_value() const;
  double value(int var) const { return x_[var]; }
  std::vector<double> values() const;
  /// Activity a_i x of row i.
  double row_activity(int row) const { return x_[num_struct_ + row] * scales_[row]; }

  std::int64_t iterations() const { return iterations_; }

 private:
  enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

  int num_cols() const { return static_cast<int>(lo_.size()); }
  void reset_slack_basis();
  bool refactor();
  void recompute_basic_values();
  void recompute_reduced_costs();
  double max_primal_infeasibility() const;
  /// With `shifted`, small dual infeasibilities on columns that cannot be
  /// flipped are removed by shifting their cost and *shifted is set.
  bool make_dual_feasible(bool* shifted = nullptr);
  void pivot(int r, int q);
  Status primal_simplex();
  Status dual_simplex(std::optional<double> cutoff_internal);
  bool residual_ok() const;
  void place_nonbasic(int j);

  Tolerances tol_;
  int num_struct_ = 0;
  double sign_ = 1.0;  // +1 maximise, -1 minimise (internal form is max)
  std::vector<double> cost_;  // internal objective, per column
  std::vector<double> lo_, hi_;
  std::vector<double> x_;
  std::vector<double> d_;  // reduced costs
  std::vector<VarState> state_;
  std::vector<int> basis_;  // basis_[r] = column basic in row r
  std::vector<int> pos_;    // pos_[j] = row of basic column j, -1 if nonbasic
  std::vector<std::vector<double>> tab_;
  std::vector<Row> rows_;     // stored divided by scales_
  std::vector<double> scales_;
  std::int64_t iterations_ = 0;
  int pivots_since_refactor_ = 0;
  std::vector<std::uint8_t> artificial_;  // structural bounds replaced by +-kBig
};

/// One-shot convenience wrapper.
LpSolution solve(const LpModel& model, std::optional<double> cutoff = std::nullopt);

}  // namespace oig::lp
