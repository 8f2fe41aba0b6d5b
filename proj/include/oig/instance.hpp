#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oig/tsplib.hpp"

namespace oig {

enum class PrizeScheme { Unit, Random };

std::string_view to_string(PrizeScheme scheme);  // "u" / "r"
PrizeScheme parse_prize_scheme(std::string_view s);

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 2;
};

/// An orienteering interdiction instance on a complete undirected graph.
/// Node indices are 0-based; TSPLIB node k is index k-1.
struct Instance {
  std::string name;
  PrizeScheme scheme = PrizeScheme::Unit;
  int n = 0;
  std::vector<std::int64_t> dist;  // row-major n*n
  std::vector<std::int64_t> prizes;
  int depot = 0;
  std::int64_t distance_budget = 0;
  int interdiction_budget = 0;
  std::int64_t tsp_optimum = 0;
  /// Whether the follower collects the depot's own prize. Off by default:
  /// the tour starts there, so only the visited non-depot nodes pay out.
  bool collect_depot = false;

  std::int64_t d(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
  /// Prize the follower can collect at node i when it is not interdicted.
  std::int64_t collectible(int i) const { return i == depot && !collect_depot ? 0 : prizes[i]; }
  std::int64_t total_prize() const;  // sum of collectible prizes

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Binary leader decision over nodes.
class Interdiction {
 public:
  Interdiction() = default;
  explicit Interdiction(int n) : bits_(static_cast<std::size_t>(n), 0) {}
  static Interdiction from_nodes(int n, std::span<const int> nodes);

  int size() const { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  void set(int i, bool v = true) { bits_[static_cast<std::size_t>(i)] = v ? 1 : 0; }
  void flip(int i) { bits_[static_cast<std::size_t>(i)] ^= 1; }
  int count() const;
  std::vector<int> nodes() const;
  std::vector<double> as_doubles() const;

  friend bool operator==(const Interdiction&, const Interdiction&) = default;
  friend auto operator<=>(const Interdiction&, const Interdiction&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Collectible prize per node under z: p_i * (1 - z_i), 0 at an uncollected depot.
std::vector<double> collectible_prizes(const Instance& inst, const Interdiction& z);
std::vector<double> collectible_prizes(const Instance& inst, std::span<const double> z);

std::int64_t random_prize(int tsplib_index);  // 1 + (7141 i + 73) mod 100

Instance build_instance(const RawTsp& raw, PrizeScheme scheme, int interdiction_budget,
                        Rational budget_factor, int depot, std::int64_t tsp_optimum);

/// Builds an instance from an explicit symmetric matrix (synthetic instances, tests).
Instance make_instance(std::string name, int n, std::vector<std::int64_t> dist,
                       std::vector<std::int64_t> prizes, int depot,
                       std::int64_t distance_budget, int interdiction_budget,
                       std::int64_t tsp_optimum);

std::string write_instance(const Instance& inst);
Instance read_instance(std::string_view text);
void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

/// Bundled name -> optimal TSP length table (two columns per line, '#' comments).
class NuTable {
 public:
  static NuTable parse(std::string_view text);
  static NuTable load(const std::filesystem::path& path);
  std::optional<std::int64_t> find(const std::string& name) const;
  const std::map<std::string, std::int64_t>& entries() const { return values_; }

 private:
  std::map<std::string, std::int64_t> values_;
};

}  // namespace oig
