#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oig/follower.hpp"
#include "oig/oracle.hpp"
#include "test_util.hpp"

using namespace oig;

namespace {

std::int64_t tsp_by_permutation(const Instance& inst) {
  std::vector<int> p(inst.n);
  std::iota(p.begin(), p.end(), 0);
  std::int64_t best = -1;
  do {
    const std::int64_t len = tour_length(inst, p);
    if (best < 0 || len < best) best = len;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return best;
}

/// Every depot cycle on every node subset, by permutation.
std::int64_t op_by_permutation(const Instance& inst, const Interdiction& z) {
  const int n = inst.n;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> nodes{0};
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) nodes.push_back(i);
    if (nodes.size() < 3) continue;
    std::int64_t shortest = -1;
    do {
      const std::int64_t len = tour_length(inst, nodes);
      if (shortest < 0 || len < shortest) shortest = len;
    } while (std::next_permutation(nodes.begin() + 1, nodes.end()));
    if (shortest > inst.distance_budget) continue;
    best = std::max(best, tour_prize(make_tour(inst, nodes), inst, z));
  }
  return best;
}

}  // namespace

TEST(Oracle, HeldKarpMatchesPermutations) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const Instance inst = support::random_instance(700 + seed, 4 + seed % 5, false, 0);
    EXPECT_EQ(oracle::tsp_exact(inst), tsp_by_permutation(inst));
    EXPECT_EQ(inst.tsp_optimum, tsp_by_permutation(inst));
  }
}

TEST(Oracle, EnumeratedToursAreDistinctAndFeasible) {
  const Instance inst = support::random_instance(710, 8, false, 0);
  const auto tours = oracle::enumerate_feasible_tours(inst);
  std::set<std::vector<int>> keys;
  for (const Tour& t : tours) {
    EXPECT_TRUE(is_follower_feasible(t, inst));
    EXPECT_EQ(t, canonical(t, 0));
    EXPECT_TRUE(keys.insert(t.nodes).second);
  }
  const Instance big = support::random_instance(711, 12, false, 0);
  EXPECT_ANY_THROW(oracle::enumerate_feasible_tours(big));
}

TEST(Oracle, OpMatchesTwoBruteForces) {
  std::mt19937 gen(12);
  for (unsigned seed = 0; seed < 12; ++seed) {
    const Instance inst = support::random_instance(720 + seed, 5 + seed % 4, seed % 2 == 1, 2);
    const oracle::OpOracle op(inst);
    for (int k = 0; k < 5; ++k) {
      const Interdiction z = support::random_interdiction(gen, inst.n, 3);
      const std::int64_t ref = op_by_permutation(inst, z);
      EXPECT_EQ(support::op_by_enumeration(inst, z), ref);
      EXPECT_EQ(op.value(z), ref);
      const oracle::OpResult r = op.solve(z);
      EXPECT_EQ(r.value, ref);
      if (ref > 0) {
        EXPECT_TRUE(is_follower_feasible(r.tour, inst));
        EXPECT_EQ(tour_prize(r.tour, inst, z), ref);
      }
    }
  }
}

TEST(Oracle, SparseDpAgreesWithBranchAndCut) {
  const Instance inst = support::tsplib_instance("gr24", 1272, PrizeScheme::Random, 3);
  const oracle::OpOracle op(inst);
  const FollowerContext ctx(inst);
  std::mt19937 gen(13);
  for (int k = 0; k < 5; ++k) {
    const Interdiction z = support::random_interdiction(gen, inst.n, 4);
    const oracle::OpResult r = op.solve(z);
    EXPECT_EQ(r.value, solve_follower(ctx, z).value);
    EXPECT_TRUE(is_follower_feasible(r.tour, inst));
  }
}

TEST(Oracle, InterdictionMatchesFullEnumeration) {
  for (unsigned seed = 0; seed < 8; ++seed) {
    const Instance inst = support::random_instance(740 + seed, 6 + seed % 3, seed % 2 == 0, 1 + seed % 3);
    std::int64_t ref = -1;
    const int n = inst.n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > inst.interdiction_budget) continue;
      Interdiction z(n);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) z.set(i);
      const std::int64_t v = op_by_permutation(inst, z);
      if (ref < 0 || v < ref) ref = v;
    }
    const oracle::OigExactResult exact = oracle::oig_exact(inst);
    EXPECT_EQ(exact.value, ref);
    EXPECT_EQ(oracle::oig_exact(inst, true).value, ref);
    EXPECT_EQ(op_by_permutation(inst, exact.z), ref);
  }
}

TEST(Oracle, WorkBoundIsEnforced) {
  const Instance inst = support::random_instance(750, 10, false, 3);
  EXPECT_THROW(oracle::oig_exact(inst, false, 1.0), std::length_error);
}
