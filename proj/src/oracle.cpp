#include "oig/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace oig::oracle {
namespace {

constexpr std::int32_t kInf32 = std::numeric_limits<std::int32_t>::max();

void check_int32_range(const Instance& inst) {
  std::int64_t maxd = 0;
  for (auto d : inst.dist) maxd = std::max(maxd, d);
  if (inst.distance_budget + 2 * maxd >= (std::int64_t{1} << 30))
    throw std::domain_error("oracle: distances too large for the DP table");
}

}  // namespace

OpOracle::OpOracle(const Instance& inst, std::size_t state_limit) : inst_(&inst) {
  if (inst.n > 32) throw std::length_error("oracle: more than 32 nodes");
  check_int32_range(inst);
  for (int v = 0; v < inst.n; ++v)
    if (v != inst.depot) others_.push_back(v);
  if (inst.n <= 20) build_dense();
  else build_sparse(state_limit);
}

void OpOracle::build_dense() {
  const Instance& inst = *inst_;
  const int m = static_cast<int>(others_.size());
  const std::int64_t budget = inst.distance_budget;
  const std::size_t full = std::size_t{1} << m;
  dense_.assign(full * m, kInf32);
  auto at = [&](std::size_t mask, int k) -> std::int32_t& { return dense_[mask * m + k]; };
  for (int k = 0; k < m; ++k) {
    const std::int64_t d = inst.d(inst.depot, others_[k]);
    if (d <= budget) at(std::size_t{1} << k, k) = static_cast<std::int32_t>(d);
  }
  std::vector<std::uint32_t> feasible;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::int64_t cycle = std::numeric_limits<std::int64_t>::max();
    for (int k = 0; k < m; ++k) {
      const std::int32_t len = at(mask, k);
      if (len == kInf32) continue;
      cycle = std::min(cycle, len + inst.d(others_[k], inst.depot));
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        const std::int64_t nl = len + inst.d(others_[k], others_[j]);
        if (nl > budget) continue;
        auto& slot = at(mask | (std::size_t{1} << j), j);
        if (nl < slot) slot = static_cast<std::int32_t>(nl);
      }
    }
    if (std::popcount(mask) >= 2 && cycle <= budget) feasible.push_back(static_cast<std::uint32_t>(mask));
  }
  reduce(std::move(feasible));
}

void OpOracle::build_sparse(std::size_t state_limit) {
  const Instance& inst = *inst_;
  const int n = inst.n;
  const int m = static_cast<int>(others_.size());
  const std::int64_t budget = inst.distance_budget;
  // Shortest return distances bound how far a path may wander.
  std::vector<std::int64_t> sp(inst.dist.begin(), inst.dist.end());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sp[i * n + j] = std::min(sp[i * n + j], sp[i * n + k] + sp[k * n + j]);
  auto back = [&](int k) { return sp[others_[k] * n + inst.depot]; };

  std::size_t total = 0;
  std::vector<State> layer;
  for (int k = 0; k < m; ++k) {
    const std::int64_t d = inst.d(inst.depot, others_[k]);
    if (d + back(k) <= budget) layer.push_back({std::uint32_t{1} << k, static_cast<std::uint8_t>(k), 0xff, static_cast<std::int32_t>(d)});
  }
  std::vector<std::uint32_t> feasible;
  while (!layer.empty()) {
    total += layer.size();
    if (total > state_limit) throw std::length_error("oracle: sparse DP state limit exceeded");
    std::vector<State> next;
    for (const State& s : layer) {
      for (int j = 0; j < m; ++j) {
        if (s.mask >> j & 1) continue;
        const std::int64_t nl = s.len + inst.d(others_[s.end], others_[j]);
        if (nl + back(j) > budget) continue;
        next.push_back({s.mask | (std::uint32_t{1} << j), static_cast<std::uint8_t>(j), s.end, static_cast<std::int32_t>(nl)});
      }
    }
    std::sort(next.begin(), next.end(), [](const State& a, const State& b) {
      if (a.mask != b.mask) return a.mask < b.mask;
      if (a.end != b.end) return a.end < b.end;
      return a.len < b.len;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const State& a, const State& b) { return a.mask == b.mask && a.end == b.end; }),
               next.end());
    layers_.push_back(std::move(layer));
    layer = std::move(next);
    if (total + layer.size() > state_limit) throw std::length_error("oracle: sparse DP state limit exceeded");
  }
  for (std::size_t L = 1; L < layers_.size(); ++L) {
    const auto& lay = layers_[L];
    std::size_t i = 0;
    while (i < lay.size()) {
      const std::uint32_t mask = lay[i].mask;
      bool ok = false;
      for (; i < lay.size() && lay[i].mask == mask; ++i)
        if (lay[i].len + inst.d(others_[lay[i].end], inst.depot) <= budget) ok = true;
      if (ok) feasible.push_back(mask);
    }
  }
  reduce(std::move(feasible));
}

void OpOracle::reduce(std::vector<std::uint32_t> feasible) {
  std::sort(feasible.begin(), feasible.end());
  const int m = static_cast<int>(others_.size());
  const Instance& inst = *inst_;
  for (std::uint32_t mask : feasible) {
    bool dominated = false;
    for (int j = 0; j < m && !dominated; ++j) {
      if (mask >> j & 1) continue;
      dominated = std::binary_search(feasible.begin(), feasible.end(), mask | (std::uint32_t{1} << j));
    }
    if (dominated) continue;
    std::int64_t base = inst.collectible(inst.depot);
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) base += inst.prizes[others_[k]];
    sets_.push_back({mask, base});
  }
  std::stable_sort(sets_.begin(), sets_.end(), [](const Set& a, const Set& b) { return a.base > b.base; });
}

std::int64_t OpOracle::set_value(const Set& s, const Interdiction& z) const {
  std::int64_t v = s.base;
  if (z[inst_->depot]) v -= inst_->collectible(inst_->depot);
  for (std::uint32_t bits = s.mask; bits; bits &= bits - 1) {
    const int node = others_[std::countr_zero(bits)];
    if (z[node]) v -= inst_->prizes[node];
  }
  return v;
}

std::int64_t OpOracle::value(const Interdiction& z) const {
  std::int64_t best = 0;
  for (const Set& s : sets_) {
    if (s.base <= best) break;
    best = std::max(best, set_value(s, z));
  }
  return best;
}

OpResult OpOracle::solve(const Interdiction& z) const {
  OpResult out;
  const Set* arg = nullptr;
  std::int64_t best = -1;
  for (const Set& s : sets_) {
    if (s.base <= best) break;
    const std::int64_t v = set_value(s, z);
    if (v > best) {
      best = v;
      arg = &s;
    }
  }
  if (!arg) return out;
  out.value = best;
  out.tour = reconstruct(arg->mask);
  return out;
}

Tour OpOracle::reconstruct(std::uint32_t mask) const {
  const Instance& inst = *inst_;
  const int m = static_cast<int>(others_.size());
  std::vector<int> rev;
  if (!dense_.empty()) {
    auto at = [&](std::uint32_t s, int k) { return dense_[static_cast<std::size_t>(s) * m + k]; };
    int end = -1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int k = 0; k < m; ++k) {
      if (!(mask >> k & 1) || at(mask, k) == kInf32) continue;
      const std::int64_t c = at(mask, k) + inst.d(others_[k], inst.depot);
      if (c < best) {
        best = c;
        end = k;
      }
    }
    std::uint32_t s = mask;
    while (true) {
      rev.push_back(others_[end]);
      const std::uint32_t prev = s & ~(std::uint32_t{1} << end);
      if (!prev) break;
      int from = -1;
      for (int j = 0; j < m && from < 0; ++j)
        if ((prev >> j & 1) && at(prev, j) != kInf32 && at(prev, j) + inst.d(others_[j], others_[end]) == at(s, end))
          from = j;
      s = prev;
      end = from;
    }
  } else {
    const int L = std::popcount(mask) - 1;
    auto find = [&](int layer, std::uint32_t s, int end) -> const State* {
      const auto& lay = layers_[layer];
      auto it = std::lower_bound(lay.begin(), lay.end(), std::pair{s, end}, [](const State& a, const std::pair<std::uint32_t, int>& key) {
        return a.mask != key.first ? a.mask < key.first : a.end < key.second;
      });
      return it != lay.end() && it->mask == s && it->end == end ? &*it : nullptr;
    };
    const State* cur = nullptr;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int k = 0; k < m; ++k) {
      if (!(mask >> k & 1)) continue;
      const State* st = find(L, mask, k);
      if (!st) continue;
      const std::int64_t c = st->len + inst.d(others_[k], inst.depot);
      if (c < best) {
        best = c;
        cur = st;
      }
    }
    for (int layer = L; cur; --layer) {
      rev.push_back(others_[cur->end]);
      if (layer == 0) break;
      cur = find(layer - 1, cur->mask & ~(std::uint32_t{1} << cur->end), cur->parent);
    }
  }
  std::vector<int> nodes{inst.depot};
  nodes.insert(nodes.end(), rev.rbegin(), rev.rend());
  return make_tour(inst, std::move(nodes));
}

OpResult op_exact(const Instance& inst, const Interdiction& z) { return OpOracle(inst).solve(z); }

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

OigExactResult oig_exact(const Instance& inst, bool full_enumeration, double work_bound) {
  return oig_exact(OpOracle(inst), inst, full_enumeration, work_bound);
}

OigExactResult oig_exact(const OpOracle& op, const Instance& inst, bool full_enumeration, double work_bound) {
  const int n = inst.n;
  const int q = std::min(inst.interdiction_budget, n);
  double combos = 0.0;
  for (int k = full_enumeration ? 0 : q; k <= q; ++k) combos += binomial(n, k);
  if (combos * static_cast<double>(std::max<std::size_t>(op.num_sets(), 1)) > work_bound)
    throw std::length_error("oig_exact: work bound exceeded");

  OigExactResult best;
  best.value = std::numeric_limits<std::int64_t>::max();
  for (int k = full_enumeration ? 0 : q; k <= q; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      const Interdiction z = Interdiction::from_nodes(n, idx);
      const std::int64_t v = op.value(z);
      ++best.evaluated;
      if (v < best.value) {
        best.value = v;
        best.z = z;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return best;
}

std::int64_t tsp_exact(const Instance& inst) {
  if (inst.n > 18) throw std::length_error("tsp_exact: more than 18 nodes");
  const int n = inst.n;
  const int m = n - 1;
  const std::size_t full = std::size_t{1} << m;
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> dp(full * m, inf);
  for (int k = 0; k < m; ++k) dp[(std::size_t{1} << k) * m + k] = inst.d(0, k + 1);
  for (std::size_t mask = 1; mask < full; ++mask)
    for (int k = 0; k < m; ++k) {
      const std::int64_t len = dp[mask * m + k];
      if (len >= inf) continue;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        auto& slot = dp[(mask | (std::size_t{1} << j)) * m + j];
        slot = std::min(slot, len + inst.d(k + 1, j + 1));
      }
    }
  std::int64_t best = inf;
  for (int k = 0; k < m; ++k) best = std::min(best, dp[(full - 1) * m + k] + inst.d(k + 1, 0));
  return best;
}

std::vector<Tour> enumerate_feasible_tours(const Instance& inst) {
  if (inst.n > 11) throw std::length_error("enumerate_feasible_tours: more than 11 nodes");
  std::vector<Tour> out;
  std::vector<int> path{inst.depot};
  std::vector<char> used(inst.n, 0);
  used[inst.depot] = 1;
  const std::int64_t budget = inst.distance_budget;
  auto rec = [&](auto&& self, std::int64_t len) -> void {
    const int last = path.back();
    if (path.size() >= 3 && path[1] < last && len + inst.d(last, inst.depot) <= budget)
      out.push_back(Tour{path, len + inst.d(last, inst.depot)});
    for (int j = 0; j < inst.n; ++j) {
      if (used[j]) continue;
      const std::int64_t nl = len + inst.d(last, j);
      if (nl > budget) continue;
      used[j] = 1;
      path.push_back(j);
      self(self, nl);
      path.pop_back();
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oig::oracle
