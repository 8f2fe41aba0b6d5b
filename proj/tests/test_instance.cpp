#include <gtest/gtest.h>

#include "oig/instance.hpp"
#include "test_util.hpp"

using namespace oig;

TEST(Instance, RandomPrizeFormula) {
  // 1 + (7141 i + 73) mod 100 for TSPLIB indices 1, 2, 3.
  EXPECT_EQ(random_prize(1), 15);
  EXPECT_EQ(random_prize(2), 56);
  EXPECT_EQ(random_prize(3), 97);
}

TEST(Instance, BuildFromTsplib) {
  const Instance u = support::tsplib_instance("gr17", 2085, PrizeScheme::Unit, 5);
  EXPECT_EQ(u.n, 17);
  EXPECT_EQ(u.distance_budget, 1042);  // floor(2085 / 2)
  EXPECT_EQ(u.interdiction_budget, 5);
  EXPECT_EQ(u.depot, 0);
  for (auto p : u.prizes) EXPECT_EQ(p, 1);
  const Instance r = support::tsplib_instance("gr17", 2085, PrizeScheme::Random, 8);
  for (int i = 0; i < r.n; ++i) EXPECT_EQ(r.prizes[i], random_prize(i + 1));
}

TEST(Instance, DepotPrizeIsNotCollectedByDefault) {
  Instance r = support::tsplib_instance("gr17", 2085, PrizeScheme::Random, 5);
  EXPECT_EQ(r.collectible(0), 0);
  EXPECT_EQ(r.collectible(1), r.prizes[1]);
  std::int64_t sum = 0;
  for (int i = 1; i < r.n; ++i) sum += r.prizes[i];
  EXPECT_EQ(r.total_prize(), sum);
  r.collect_depot = true;
  EXPECT_EQ(r.collectible(0), 15);
  EXPECT_EQ(r.total_prize(), sum + 15);
}

TEST(Instance, RoundTrip) {
  Instance a = support::random_instance(7, 9);
  a.collect_depot = true;
  const Instance b = read_instance(write_instance(a));
  EXPECT_EQ(b.name, a.name);
  EXPECT_EQ(b.n, a.n);
  EXPECT_EQ(b.dist, a.dist);
  EXPECT_EQ(b.prizes, a.prizes);
  EXPECT_EQ(b.depot, a.depot);
  EXPECT_EQ(b.distance_budget, a.distance_budget);
  EXPECT_EQ(b.interdiction_budget, a.interdiction_budget);
  EXPECT_EQ(b.tsp_optimum, a.tsp_optimum);
  EXPECT_TRUE(b.collect_depot);
}

TEST(Instance, RejectsMalformedFiles) {
  EXPECT_ANY_THROW(read_instance("OIG_INSTANCE 2\n"));
  EXPECT_ANY_THROW(read_instance("NAME x\n"));
  EXPECT_ANY_THROW(read_instance("OIG_INSTANCE 1\nNAME x\nN 3\nPRIZES\n1 1 1\n"));  // no END
}

TEST(Instance, ValidateCatchesBrokenInvariants) {
  std::vector<std::int64_t> d = {0, 1, 2, 1, 0, 3, 2, 3, 0};
  EXPECT_NO_THROW(make_instance("ok", 3, d, {1, 1, 1}, 0, 5, 1, 6));
  auto asym = d;
  asym[1] = 9;
  EXPECT_THROW(make_instance("x", 3, asym, {1, 1, 1}, 0, 5, 1, 6), std::invalid_argument);
  EXPECT_THROW(make_instance("x", 3, d, {1, 0, 1}, 0, 5, 1, 6), std::invalid_argument);
  EXPECT_THROW(make_instance("x", 3, d, {1, 1, 1}, 3, 5, 1, 6), std::invalid_argument);
  EXPECT_THROW(make_instance("x", 3, d, {1, 1, 1}, 0, -1, 1, 6), std::invalid_argument);
}

TEST(Instance, NuTableParsing) {
  const NuTable t = NuTable::parse("# comment\ngr17 2085\n\nbayg29 1610  # trailing\n");
  EXPECT_EQ(t.find("gr17").value(), 2085);
  EXPECT_EQ(t.find("bayg29").value(), 1610);
  EXPECT_FALSE(t.find("nope").has_value());
  EXPECT_THROW(NuTable::parse("gr17\n"), std::runtime_error);
  EXPECT_THROW(NuTable::parse("gr17 -4\n"), std::runtime_error);
}

TEST(Instance, BundledTableHasReferenceLengths) {
  const NuTable t = NuTable::load(support::data_path("nu.txt"));
  EXPECT_EQ(t.find("bayg29").value(), 1610);
  EXPECT_EQ(t.find("gr24").value(), 1272);
}

TEST(Instance, CollectiblePrizesUnderInterdiction) {
  const Instance r = support::tsplib_instance("gr17", 2085, PrizeScheme::Random, 5);
  const Interdiction z = Interdiction::from_nodes(r.n, std::vector<int>{1, 4});
  const auto w = collectible_prizes(r, z);
  EXPECT_EQ(w[0], 0.0);
  EXPECT_EQ(w[1], 0.0);
  EXPECT_EQ(w[4], 0.0);
  EXPECT_EQ(w[2], static_cast<double>(r.prizes[2]));
  const std::vector<double> half(r.n, 0.5);
  EXPECT_DOUBLE_EQ(collectible_prizes(r, half)[3], 0.5 * static_cast<double>(r.prizes[3]));
}

TEST(Interdiction, Basics) {
  Interdiction z(5);
  EXPECT_EQ(z.count(), 0);
  z.set(1);
  z.set(3);
  EXPECT_EQ(z.count(), 2);
  EXPECT_EQ(z.nodes(), (std::vector<int>{1, 3}));
  z.flip(3);
  EXPECT_EQ(z.nodes(), (std::vector<int>{1}));
  EXPECT_EQ(z.as_doubles(), (std::vector<double>{0, 1, 0, 0, 0}));
}
