#pragma once

#include <cstdint>
#include <vector>

namespace oig {

struct Arc {
  int from;
  int to;
  double capacity;
};

struct FlowNetwork {
  int num_nodes = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 0;

  void add_arc(int from, int to, double capacity) { arcs.push_back({from, to, capacity}); }
  /// Two opposite arcs, each with the given capacity.
  void add_edge(int u, int v, double capacity) {
    add_arc(u, v, capacity);
    add_arc(v, u, capacity);
  }
};

struct MinCut {
  double value = 0.0;
  std::vector<std::uint8_t> source_side;  // per node
};

/// Edmonds-Karp. The source side is the set reachable in the final residual graph.
MinCut max_flow_min_cut(const FlowNetwork& net);

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

/// Kruskal on decreasing weight, ties by lower edge index. Returns indices
/// into `edges` of a maximum-weight spanning forest.
std::vector<int> max_weight_spanning_tree(int num_nodes, const std::vector<WeightedEdge>& edges);

}  // namespace oig
