#include <gtest/gtest.h>

#include <sstream>

#include "oig/report.hpp"
#include "test_util.hpp"

using namespace oig;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

int fields(const std::string& line) { return static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST(Report, Fixed2) {
  EXPECT_EQ(fixed2(1.005), "1.00");
  EXPECT_EQ(fixed2(2.5), "2.50");
  EXPECT_EQ(fixed2(-0.001), "0.00");
  EXPECT_EQ(fixed2(12.346), "12.35");
}

TEST(Report, ModeNames) {
  for (Mode m : {Mode::Exact, Mode::Ga, Mode::Oracle}) EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_THROW(parse_mode("bogus"), std::invalid_argument);
}

TEST(Report, TwoInstancesTwoSettings) {
  std::vector<RunRecord> records;
  for (unsigned seed : {1u, 2u}) {
    const Instance inst = support::random_instance(seed, 9, false, 2);
    for (Setting s : {Setting::I, Setting::IFHC}) {
      RunSpec spec;
      spec.setting = s;
      records.push_back(run_one(inst, spec).record);
    }
  }
  const std::string csv = write_csv(records, true, CsvOptions{false});
  const auto ls = lines(csv);
  ASSERT_EQ(ls.size(), 1u + 4u + 2u);
  EXPECT_EQ(ls[0], csv_header());
  for (const auto& l : ls) EXPECT_EQ(fields(l), 16) << l;
  for (int i = 1; i <= 4; ++i) EXPECT_NE(ls[i].find(",-,-,"), std::string::npos);
  EXPECT_EQ(ls[5].rfind("mean,*,2,I,", 0), 0u);
  EXPECT_NE(ls[5].find("nOpt=2/2"), std::string::npos);
  EXPECT_EQ(ls[6].rfind("mean,*,2,IFHC,", 0), 0u);
  EXPECT_EQ(records[0].value, records[1].value);
  EXPECT_EQ(records[2].value, records[3].value);
  EXPECT_EQ(write_csv(records, true, CsvOptions{false}), csv);
}

TEST(Report, GaDeltaAgainstExactRow) {
  RunRecord exact;
  exact.instance = "a";
  exact.scheme = "r";
  exact.q = 3;
  exact.setting = "IFHC";
  exact.status = "optimal";
  exact.value = 100;
  RunRecord ga = exact;
  ga.setting = "GA";
  ga.status = "heuristic";
  ga.value = 110;
  RunRecord other = ga;
  other.q = 4;
  std::vector<RunRecord> rs{exact, ga, other};
  fill_deltas(rs);
  EXPECT_FALSE(rs[0].delta.has_value());
  ASSERT_TRUE(rs[1].delta.has_value());
  EXPECT_DOUBLE_EQ(*rs[1].delta, 10.0);
  EXPECT_FALSE(rs[2].delta.has_value());
  EXPECT_NE(csv_row(rs[1]).find(",heuristic,10.00"), std::string::npos);
}

TEST(Report, ModesAndErrors) {
  const Instance inst = support::random_instance(3, 8, false, 2);
  RunSpec oracle_spec;
  oracle_spec.mode = Mode::Oracle;
  const RunOutcome o = run_one(inst, oracle_spec);
  EXPECT_EQ(o.record.status, "optimal");
  EXPECT_EQ(o.record.setting, "oracle");
  RunSpec ga_spec;
  ga_spec.mode = Mode::Ga;
  ga_spec.ga.max_iter = 50;
  const RunOutcome g = run_one(inst, ga_spec);
  EXPECT_EQ(g.record.status, "heuristic");
  EXPECT_EQ(g.record.setting, "GA");
  EXPECT_GE(g.record.value, o.record.value);
  ASSERT_TRUE(g.estimate.has_value());
  RunSpec bad = ga_spec;
  bad.ga.p_s = 7.0;
  const RunOutcome e = run_one(inst, bad);
  EXPECT_EQ(e.record.status, "error");
  EXPECT_FALSE(e.record.error.empty());
}

TEST(Report, SolutionFileUsesOneBasedIds) {
  const Instance inst = support::random_instance(4, 8, false, 1);
  RunSpec spec;
  spec.mode = Mode::Oracle;
  const RunOutcome o = run_one(inst, spec);
  const std::string text = write_solution(inst, o);
  EXPECT_NE(text.find("\ntour 1 "), std::string::npos);
  EXPECT_NE(text.find("leader_value " + std::to_string(o.record.value)), std::string::npos);
  EXPECT_NE(text.find("follower_value " + std::to_string(o.record.value)), std::string::npos);
}
