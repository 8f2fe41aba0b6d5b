#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oig/graph.hpp"

using namespace oig;

namespace {

double brute_min_cut(const FlowNetwork& net) {
  double best = 1e300;
  for (std::uint32_t mask = 0; mask < (1u << net.num_nodes); ++mask) {
    if (!(mask >> net.source & 1) || (mask >> net.sink & 1)) continue;
    double cut = 0.0;
    for (const Arc& a : net.arcs)
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) cut += a.capacity;
    best = std::min(best, cut);
  }
  return best;
}

int find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = find(p, p[x]); }

}  // namespace

TEST(Graph, MaxFlowMatchesBruteForceCut) {
  std::mt19937 gen(5);
  for (int k = 0; k < 200; ++k) {
    FlowNetwork net;
    net.num_nodes = 2 + static_cast<int>(gen() % 7);
    net.source = 0;
    net.sink = net.num_nodes - 1;
    const int arcs = static_cast<int>(gen() % 16);
    for (int a = 0; a < arcs; ++a) {
      const int u = static_cast<int>(gen() % net.num_nodes), v = static_cast<int>(gen() % net.num_nodes);
      if (u == v) continue;
      const double cap = static_cast<double>(gen() % 10) / 4.0;
      if (gen() % 2) net.add_edge(u, v, cap);
      else net.add_arc(u, v, cap);
    }
    const MinCut cut = max_flow_min_cut(net);
    const double ref = brute_min_cut(net);
    EXPECT_NEAR(cut.value, ref, 1e-9) << "case " << k;
    ASSERT_EQ(cut.source_side.size(), static_cast<std::size_t>(net.num_nodes));
    EXPECT_TRUE(cut.source_side[net.source]);
    EXPECT_FALSE(cut.source_side[net.sink]);
    double side = 0.0;
    for (const Arc& a : net.arcs)
      if (cut.source_side[a.from] && !cut.source_side[a.to]) side += a.capacity;
    EXPECT_NEAR(side, ref, 1e-9) << "case " << k;
  }
}

TEST(Graph, KruskalMatchesBruteForce) {
  std::mt19937 gen(9);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + static_cast<int>(gen() % 4);
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (gen() % 3) edges.push_back({u, v, static_cast<double>(gen() % 5)});
    const std::vector<int> tree = max_weight_spanning_tree(n, edges);
    const int m = static_cast<int>(edges.size());
    // Best spanning forest over all edge subsets that are acyclic with
    // maximum cardinality.
    double best = -1.0;
    std::size_t best_size = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      bool acyclic = true;
      double w = 0.0;
      std::size_t size = 0;
      for (int e = 0; e < m && acyclic; ++e) {
        if (!(mask >> e & 1)) continue;
        const int a = find(p, edges[e].u), b = find(p, edges[e].v);
        if (a == b) acyclic = false;
        p[a] = b;
        w += edges[e].weight;
        ++size;
      }
      if (!acyclic) continue;
      if (size > best_size || (size == best_size && w > best)) {
        best_size = size;
        best = w;
      }
    }
    double w = 0.0;
    for (int e : tree) w += edges[e].weight;
    EXPECT_EQ(tree.size(), best_size) << "case " << k;
    EXPECT_DOUBLE_EQ(w, best) << "case " << k;
  }
}
