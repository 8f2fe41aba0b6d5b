#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "oig/follower.hpp"
#include "oig/graph.hpp"

namespace oig {
namespace {

constexpr double kViolationTol = 1e-6;
constexpr double kSupportTol = 1e-9;

}  // namespace

const char* to_string(CutKind kind) {
  switch (kind) {
    case CutKind::Gsec: return "gsec";
    case CutKind::Logical: return "logical";
    case CutKind::CycleCover: return "cc";
  }
  return "?";
}

double FollowerCut::violation(std::span<const double> xv, std::span<const double> yv) const {
  double lhs = 0.0;
  for (auto [e, a] : x) lhs += a * xv[e];
  for (auto [j, a] : y) lhs += a * yv[j];
  switch (sense) {
    case lp::RowSense::GreaterEqual: return rhs - lhs;
    case lp::RowSense::LessEqual: return lhs - rhs;
    case lp::RowSense::Equal: return std::abs(lhs - rhs);
  }
  return 0.0;
}

std::string FollowerCut::key() const {
  std::ostringstream out;
  out << static_cast<int>(kind) << '|' << static_cast<int>(sense) << '|' << rhs << '|';
  for (auto [e, a] : x) out << e << ':' << a << ',';
  out << '|';
  for (auto [j, a] : y) out << j << ':' << a << ',';
  return out.str();
}

FollowerContext::FollowerContext(const Instance& inst) : inst_(&inst) {
  const int n = inst.n;
  ends_.resize(num_edges(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ends_[edge_id(n, i, j)] = {i, j};

  sp_.assign(inst.dist.begin(), inst.dist.end());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const std::int64_t ik = sp_[static_cast<std::size_t>(i) * n + k];
      for (int j = 0; j < n; ++j) {
        auto& ij = sp_[static_cast<std::size_t>(i) * n + j];
        ij = std::min(ij, ik + sp_[static_cast<std::size_t>(k) * n + j]);
      }
    }

  const int dep = inst.depot;
  const std::int64_t budget = inst.distance_budget;
  reachable_.assign(n, 0);
  for (int v = 0; v < n; ++v) reachable_[v] = v == dep || 2 * shortest_path(dep, v) <= budget;
  for (int e = 0; e < num_edges(n); ++e) {
    auto [i, j] = ends_[e];
    if (!reachable_[i] || !reachable_[j]) continue;
    if (shortest_path(dep, i) + inst.d(i, j) + shortest_path(j, dep) <= budget) usable_.push_back(e);
  }
}

bool FollowerCutPool::add(const FollowerCut& cut) {
  if (capacity_ == 0) return false;
  std::string key = cut.key();
  if (keys_.count(key)) return false;
  if (cuts_.size() >= capacity_) {
    keys_.erase(cuts_.front().key());
    cuts_.pop_front();
  }
  cuts_.push_back(cut);
  keys_.insert(std::move(key));
  return true;
}

std::vector<FollowerCut> separate_logical(const FollowerContext& ctx, const FollowerPoint& pt) {
  std::vector<FollowerCut> cuts;
  for (int e : ctx.usable_edges()) {
    const double xe = pt.x[e];
    if (xe <= kViolationTol) continue;
    auto [u, v] = ctx.endpoints(e);
    for (int j : {u, v}) {
      if (xe > pt.y[j] + kViolationTol) {
        FollowerCut c;
        c.kind = CutKind::Logical;
        c.x = {{e, 1.0}};
        c.y = {{j, -1.0}};
        c.sense = lp::RowSense::LessEqual;
        c.rhs = 0.0;
        cuts.push_back(std::move(c));
      }
    }
  }
  return cuts;
}

std::vector<FollowerCut> separate_gsec(const FollowerContext& ctx, const FollowerPoint& pt, bool nondecreasing) {
  const int n = ctx.n();
  const int dep = ctx.depot();
  FlowNetwork net;
  net.num_nodes = n;
  net.source = dep;
  for (int e : ctx.usable_edges()) {
    if (pt.x[e] <= kSupportTol) continue;
    auto [u, v] = ctx.endpoints(e);
    net.add_edge(u, v, pt.x[e]);
  }

  std::vector<int> order;
  for (int j = 0; j < n; ++j)
    if (j != dep && pt.y[j] > kSupportTol) order.push_back(j);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return nondecreasing ? pt.y[a] < pt.y[b] : pt.y[a] > pt.y[b];
  });

  std::vector<FollowerCut> cuts;
  std::set<std::string> seen;
  for (int j : order) {
    net.sink = j;
    MinCut mc = max_flow_min_cut(net);
    if (mc.value >= 2.0 * pt.y[j] - kViolationTol) continue;
    FollowerCut c;
    c.kind = CutKind::Gsec;
    for (int e : ctx.usable_edges()) {
      auto [u, v] = ctx.endpoints(e);
      if (mc.source_side[u] != mc.source_side[v]) c.x.emplace_back(e, 1.0);
    }
    c.y = {{j, -2.0}};
    c.sense = lp::RowSense::GreaterEqual;
    c.rhs = 0.0;
    if (seen.insert(c.key()).second) cuts.push_back(std::move(c));
  }
  return cuts;
}

std::vector<FollowerCut> separate_cycle_cover(const FollowerContext& ctx, const FollowerPoint& pt) {
  const int n = ctx.n();
  const int dep = ctx.depot();
  const Instance& inst = ctx.instance();
  std::vector<WeightedEdge> support;
  std::vector<int> support_id;
  for (int e : ctx.usable_edges()) {
    if (pt.x[e] <= kSupportTol) continue;
    auto [u, v] = ctx.endpoints(e);
    support.push_back({u, v, pt.x[e]});
    support_id.push_back(e);
  }
  const std::vector<int> tree = max_weight_spanning_tree(n, support);
  std::vector<char> in_tree(support.size(), 0);
  std::vector<std::vector<int>> adj(n);
  for (int k : tree) {
    in_tree[k] = 1;
    adj[support[k].u].push_back(support[k].v);
    adj[support[k].v].push_back(support[k].u);
  }
  // Root each tree component for path queries.
  std::vector<int> parent(n, -1), depth(n, -1), comp(n, -1);
  for (int r = 0; r < n; ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    comp[r] = r;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          comp[v] = r;
          stack.push_back(v);
        }
    }
  }

  std::vector<FollowerCut> cuts;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (in_tree[k]) continue;
    int a = support[k].u, b = support[k].v;
    if (comp[a] != comp[b]) continue;
    std::vector<int> left{a}, right{b};
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = parent[a];
        left.push_back(a);
      } else {
        b = parent[b];
        right.push_back(b);
      }
    }
    right.pop_back();
    std::vector<int> cycle = left;
    cycle.insert(cycle.end(), right.rbegin(), right.rend());
    if (std::find(cycle.begin(), cycle.end(), dep) == cycle.end()) continue;
    if (tour_length(inst, cycle) <= ctx.budget()) continue;

    FollowerCut c;
    c.kind = CutKind::CycleCover;
    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) c.x.emplace_back(edge_id(n, cycle[i], cycle[(i + 1) % m]), 1.0);
    std::sort(c.x.begin(), c.x.end());
    std::vector<int> nodes = cycle;
    std::sort(nodes.begin(), nodes.end());
    for (int v : nodes) c.y.emplace_back(v, -1.0);
    c.sense = lp::RowSense::LessEqual;
    c.rhs = -1.0;
    if (c.violation(pt.x, pt.y) <= kViolationTol) continue;
    if (seen.insert(c.key()).second) cuts.push_back(std::move(c));
  }
  return cuts;
}

Preprocessing follower_preprocessing(const Instance& inst, const Interdiction& z) {
  Preprocessing out;
  const int n = inst.n;
  for (int i = 0; i < n; ++i) {
    if (!z[i] || i == inst.depot) continue;
    Preprocessing::Selector sel{i, {}};
    for (int a = 0; a < n; ++a) {
      if (a == i) continue;
      for (int b = a + 1; b < n; ++b) {
        if (b == i) continue;
        if (inst.d(a, i) + inst.d(i, b) < inst.d(a, b)) sel.pairs.emplace_back(a, b);
      }
    }
    if (sel.pairs.empty()) out.fixed_zero.push_back(i);
    else out.selectors.push_back(std::move(sel));
  }
  return out;
}

}  // namespace oig
