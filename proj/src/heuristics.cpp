#include "oig/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oig/follower.hpp"

namespace oig {
namespace {

constexpr double kTol = 1e-6;

std::vector<int> pool_key(const Tour& tour, int depot) { return canonical(tour, depot).nodes; }

/// Cheapest insertion of j; returns (position, increase).
std::pair<int, std::int64_t> cheapest_position(const Instance& inst, const std::vector<int>& t, int j) {
  const int k = static_cast<int>(t.size());
  if (k == 1) return {1, 2 * inst.d(t[0], j)};
  int pos = -1;
  std::int64_t inc = 0;
  for (int p = 0; p < k; ++p) {
    const int a = t[p], b = t[(p + 1) % k];
    const std::int64_t c = inst.d(a, j) + inst.d(j, b) - inst.d(a, b);
    if (pos < 0 || c < inc) {
      inc = c;
      pos = p + 1;
    }
  }
  return {pos, inc};
}

}  // namespace

void improve_tour(Tour& tour, const Instance& inst, std::span<const double> w) {
  double before = -std::numeric_limits<double>::infinity();
  double now = tour_weight(tour, w);
  while (before < now - 1e-9) {
    before = now;
    two_opt(tour, inst);
    now = insert(tour, inst, w, inst.distance_budget);
  }
  two_opt(tour, inst);
}

namespace {

/// The tour described by a 0/1 point, if it is a single feasible depot cycle.
std::optional<Tour> integral_tour(const FollowerContext& ctx, const FollowerPoint& pt) {
  const Instance& inst = ctx.instance();
  const int n = inst.n;
  std::vector<std::vector<int>> adj(n);
  int used = 0;
  for (int e = 0; e < num_edges(n); ++e) {
    const double v = pt.x[e];
    if (std::abs(v - std::round(v)) > kTol) return std::nullopt;
    if (v < 0.5) continue;
    auto [a, b] = ctx.endpoints(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++used;
  }
  if (used < 3) return std::nullopt;
  std::vector<int> nodes{inst.depot};
  int prev = -1, cur = inst.depot;
  while (true) {
    if (adj[cur].size() != 2) return std::nullopt;
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == inst.depot) break;
    nodes.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(nodes.size()) != used) return std::nullopt;
  Tour t = make_tour(inst, std::move(nodes));
  if (!is_follower_feasible(t, inst)) return std::nullopt;
  return t;
}

}  // namespace

bool SolutionPool::add(const Tour& tour, int depot) {
  if (capacity_ > 0 && tours_.size() >= capacity_) return false;
  if (!keys_.insert(pool_key(tour, depot)).second) return false;
  tours_.push_back(tour);
  return true;
}

bool SolutionPool::contains(const Tour& tour, int depot) const { return keys_.count(pool_key(tour, depot)) > 0; }

void repair(Tour& tour, const Instance& inst, std::span<const std::uint8_t> removable) {
  auto& t = tour.nodes;
  std::size_t i = 1;
  while (i < t.size()) {
    if (t.size() <= 3) break;
    const int v = t[i];
    if (!removable[v]) {
      ++i;
      continue;
    }
    const int a = t[i - 1], b = t[(i + 1) % t.size()];
    const std::int64_t delta = inst.d(a, b) - inst.d(a, v) - inst.d(v, b);
    if (delta <= 0) {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      tour.length += delta;
    } else {
      ++i;
    }
  }
}

Improved improve_pooled(const Tour& tour, const Instance& inst, std::span<const double> w,
                        std::span<const std::uint8_t> removable, double threshold) {
  Improved out{tour, 0.0};
  repair(out.tour, inst, removable);
  double pi = tour_weight(out.tour, w);
  double prev = -std::numeric_limits<double>::infinity();
  while (prev < pi - 1e-9 && pi <= threshold + kTol) {
    prev = pi;
    two_opt(out.tour, inst);
    pi = insert(out.tour, inst, w, inst.distance_budget);
  }
  out.prize = pi;
  return out;
}

std::optional<Improved> find_heuristic_fol_soln(const Instance& inst, std::span<const double> w,
                                                std::span<const std::uint8_t> removable,
                                                double threshold, const SolutionPool& pool) {
  for (const auto& tour : pool.tours()) {
    Improved r = improve_pooled(tour, inst, w, removable, threshold);
    if (r.prize > threshold + kTol) return r;
  }
  return std::nullopt;
}

std::vector<Improved> heuristic_cut_tours(const Instance& inst, std::span<const double> w,
                                          std::span<const std::uint8_t> removable, double threshold,
                                          const SolutionPool& pool, std::size_t max_count, bool improve) {
  std::vector<Improved> found;
  std::set<std::vector<int>> seen;
  for (const auto& tour : pool.tours()) {
    Improved r = improve ? improve_pooled(tour, inst, w, removable, threshold) : Improved{tour, tour_weight(tour, w)};
    if (r.prize <= threshold + kTol) continue;
    if (!seen.insert(pool_key(r.tour, inst.depot)).second) continue;
    found.push_back(std::move(r));
  }
  std::stable_sort(found.begin(), found.end(), [](const Improved& a, const Improved& b) { return a.prize > b.prize; });
  if (found.size() > max_count) found.resize(max_count);
  return found;
}

std::vector<std::uint8_t> interdicted_mask(std::span<const double> z) {
  std::vector<std::uint8_t> m(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) m[i] = z[i] > 0.5;
  return m;
}

std::optional<Tour> primal_heuristic(const FollowerContext& ctx, const FollowerPoint& pt, std::span<const double> w) {
  const Instance& inst = ctx.instance();
  const int n = inst.n;
  const int dep = inst.depot;
  const std::int64_t budget = inst.distance_budget;

  if (auto t = integral_tour(ctx, pt)) return t;

  std::vector<int> order;
  for (int j = 0; j < n; ++j)
    if (j != dep && ctx.node_reachable(j) && pt.y[j] > kTol) order.push_back(j);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pt.y[a] > pt.y[b]; });

  Tour tour{{dep}, 0};
  for (int j : order) {
    auto [pos, inc] = cheapest_position(inst, tour.nodes, j);
    if (tour.length + inc > budget) continue;
    tour.nodes.insert(tour.nodes.begin() + pos, j);
    tour.length += inc;
  }

  if (tour.nodes.size() < 3) {
    // Seed from the two nearest prize-bearing nodes, else the cheapest triangle.
    std::vector<int> near;
    for (int j = 0; j < n; ++j)
      if (j != dep && ctx.node_reachable(j) && w[j] > 0.0) near.push_back(j);
    std::stable_sort(near.begin(), near.end(), [&](int a, int b) { return inst.d(dep, a) < inst.d(dep, b); });
    std::optional<Tour> seed;
    if (near.size() >= 2) {
      Tour t = make_tour(inst, {dep, near[0], near[1]});
      if (t.length <= budget) seed = t;
    }
    if (!seed) {
      std::int64_t best = -1;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (a == dep || b == dep) continue;
          const std::int64_t len = inst.d(dep, a) + inst.d(a, b) + inst.d(b, dep);
          if (len <= budget && (best < 0 || len < best)) {
            best = len;
            seed = Tour{{dep, a, b}, len};
          }
        }
    }
    if (!seed) return std::nullopt;
    tour = *seed;
  }
  improve_tour(tour, inst, w);
  if (!is_follower_feasible(tour, inst)) return std::nullopt;
  return tour;
}

}  // namespace oig
