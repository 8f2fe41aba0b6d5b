#include "oig/tour.hpp"

#include <algorithm>
#include <stdexcept>

namespace oig {

std::int64_t tour_length(const Instance& inst, std::span<const int> nodes) {
  for (int v : nodes)
    if (v < 0 || v >= inst.n) throw std::domain_error("tour node out of range");
  const std::size_t k = nodes.size();
  if (k < 2) return 0;
  std::int64_t len = 0;
  for (std::size_t i = 0; i < k; ++i) len += inst.d(nodes[i], nodes[(i + 1) % k]);
  return len;
}

Tour make_tour(const Instance& inst, std::vector<int> nodes) {
  Tour t;
  t.length = tour_length(inst, nodes);
  t.nodes = std::move(nodes);
  return t;
}

std::int64_t tour_prize(const Tour& tour, const Instance& inst, const Interdiction& z) {
  std::int64_t p = 0;
  for (int v : tour.nodes)
    if (!z[v]) p += inst.collectible(v);
  return p;
}

double tour_weight(const Tour& tour, std::span<const double> w) {
  double s = 0.0;
  for (int v : tour.nodes) s += w[v];
  return s;
}

bool is_follower_feasible(const Tour& tour, const Instance& inst) {
  if (tour.nodes.size() < 3 || tour.nodes.front() != inst.depot) return false;
  std::vector<char> seen(inst.n, 0);
  for (int v : tour.nodes) {
    if (v < 0 || v >= inst.n || seen[v]) return false;
    seen[v] = 1;
  }
  return tour.length == tour_length(inst, tour.nodes) && tour.length <= inst.distance_budget;
}

Tour canonical(Tour tour, int depot) {
  auto& v = tour.nodes;
  auto it = std::find(v.begin(), v.end(), depot);
  if (it == v.end()) return tour;
  std::rotate(v.begin(), it, v.end());
  if (v.size() > 2 && v[1] > v.back()) std::reverse(v.begin() + 1, v.end());
  return tour;
}

bool two_opt(Tour& tour, const Instance& inst) {
  auto& t = tour.nodes;
  const int k = static_cast<int>(t.size());
  if (k < 4) return false;
  bool changed = false;
  while (true) {
    std::int64_t best = 0;
    int bi = -1, bj = -1;
    for (int i = 1; i < k - 1; ++i) {
      const int a = t[i - 1], b = t[i];
      for (int j = i + 1; j < k; ++j) {
        const int c = t[j], d = t[(j + 1) % k];
        if (d == a) continue;
        const std::int64_t delta = inst.d(a, c) + inst.d(b, d) - inst.d(a, b) - inst.d(c, d);
        if (delta < best) {
          best = delta;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    std::reverse(t.begin() + bi, t.begin() + bj + 1);
    tour.length += best;
    changed = true;
  }
  return changed;
}

double insert(Tour& tour, const Instance& inst, std::span<const double> w, std::int64_t budget) {
  auto& t = tour.nodes;
  std::vector<char> in_tour(inst.n, 0);
  for (int v : t) in_tour[v] = 1;
  while (!t.empty()) {
    const int k = static_cast<int>(t.size());
    int best_node = -1, best_pos = -1;
    std::int64_t best_inc = 0;
    for (int j = 0; j < inst.n; ++j) {
      if (in_tour[j] || w[j] <= 0.0) continue;
      std::int64_t inc;
      int pos;
      if (k == 1) {
        inc = 2 * inst.d(t[0], j);
        pos = 1;
      } else {
        inc = 0;
        pos = -1;
        for (int p = 0; p < k; ++p) {
          const int a = t[p], b = t[(p + 1) % k];
          const std::int64_t c = inst.d(a, j) + inst.d(j, b) - inst.d(a, b);
          if (pos < 0 || c < inc) {
            inc = c;
            pos = p + 1;
          }
        }
      }
      if (tour.length + inc > budget) continue;
      bool better;
      if (best_node < 0) {
        better = true;
      } else if (inc <= 0 || best_inc <= 0) {
        if (inc <= 0 && best_inc <= 0) better = w[j] > w[best_node];
        else better = inc <= 0;
      } else {
        better = w[j] / static_cast<double>(inc) > w[best_node] / static_cast<double>(best_inc);
      }
      if (better) {
        best_node = j;
        best_pos = pos;
        best_inc = inc;
      }
    }
    if (best_node < 0) break;
    t.insert(t.begin() + best_pos, best_node);
    tour.length += best_inc;
    in_tour[best_node] = 1;
  }
  return tour_weight(tour, w);
}

}  // namespace oig
