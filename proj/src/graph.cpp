#include "oig/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oig {

MinCut max_flow_min_cut(const FlowNetwork& net) {
  const int n = net.num_nodes;
  // Residual graph with paired arcs: arc 2k forward, 2k+1 reverse.
  std::vector<int> head, next, to;
  std::vector<double> cap;
  std::vector<int> first(n, -1);
  auto push = [&](int u, int v, double c) {
    to.push_back(v);
    cap.push_back(c);
    next.push_back(first[u]);
    first[u] = static_cast<int>(to.size()) - 1;
  };
  for (const auto& a : net.arcs) {
    push(a.from, a.to, std::max(a.capacity, 0.0));
    push(a.to, a.from, 0.0);
  }

  constexpr double kEps = 1e-12;
  MinCut out;
  std::vector<int> pred(n);
  while (true) {
    std::fill(pred.begin(), pred.end(), -1);
    std::queue<int> bfs;
    bfs.push(net.source);
    pred[net.source] = -2;
    while (!bfs.empty() && pred[net.sink] == -1) {
      const int u = bfs.front();
      bfs.pop();
      for (int e = first[u]; e >= 0; e = next[e])
        if (cap[e] > kEps && pred[to[e]] == -1) {
          pred[to[e]] = e;
          bfs.push(to[e]);
        }
    }
    if (pred[net.sink] == -1) break;
    double aug = std::numeric_limits<double>::infinity();
    for (int v = net.sink; v != net.source; v = to[pred[v] ^ 1]) aug = std::min(aug, cap[pred[v]]);
    for (int v = net.sink; v != net.source; v = to[pred[v] ^ 1]) {
      cap[pred[v]] -= aug;
      cap[pred[v] ^ 1] += aug;
    }
    out.value += aug;
  }
  out.source_side.assign(n, 0);
  for (int v = 0; v < n; ++v) out.source_side[v] = pred[v] != -1;
  return out;
}

std::vector<int> max_weight_spanning_tree(int num_nodes, const std::vector<WeightedEdge>& edges) {
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return edges[a].weight > edges[b].weight; });
  std::vector<int> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> tree;
  for (int e : order) {
    const int a = find(edges[e].u), b = find(edges[e].v);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e);
  }
  return tree;
}

}  // namespace oig
