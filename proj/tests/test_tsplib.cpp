#include <gtest/gtest.h>

#include "oig/oracle.hpp"
#include "oig/tsplib.hpp"
#include "test_util.hpp"

using namespace oig;

namespace {

const char* kEuc = R"(NAME: tiny
TYPE: TSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 4
3 1 1
EOF
)";

}  // namespace

TEST(Tsplib, Euclidean) {
  const RawTsp raw = parse_tsplib(kEuc);
  EXPECT_EQ(raw.name, "tiny");
  EXPECT_EQ(raw.dimension, 3);
  EXPECT_EQ(edge_weight(raw, 0, 1), 5);
  EXPECT_EQ(edge_weight(raw, 0, 2), 1);  // nint(1.414)
  EXPECT_EQ(edge_weight(raw, 1, 2), 4);  // nint(3.606)
  EXPECT_EQ(edge_weight(raw, 2, 1), edge_weight(raw, 1, 2));
}

TEST(Tsplib, PseudoEuclideanRoundsUp) {
  const RawTsp raw = parse_tsplib(
      "NAME: a\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: ATT\nNODE_COORD_SECTION\n1 0 0\n2 10 0\n3 0 30\nEOF\n");
  EXPECT_EQ(edge_weight(raw, 0, 1), 4);  // sqrt(10) = 3.16 -> 4
  EXPECT_EQ(edge_weight(raw, 0, 2), 10);  // sqrt(90) = 9.49 -> 10
}

TEST(Tsplib, ExplicitFormats) {
  // The same 4-node matrix in four layouts.
  const std::vector<std::vector<int>> d = {{0, 1, 2, 3}, {1, 0, 4, 5}, {2, 4, 0, 6}, {3, 5, 6, 0}};
  const std::map<std::string, std::string> bodies = {
      {"FULL_MATRIX", "0 1 2 3 1 0 4 5 2 4 0 6 3 5 6 0"},
      {"UPPER_ROW", "1 2 3 4 5 6"},
      {"LOWER_DIAG_ROW", "0 1 0 2 4 0 3 5 6 0"},
      {"UPPER_DIAG_ROW", "0 1 2 3 0 4 5 0 6 0"},
  };
  for (const auto& [fmt, body] : bodies) {
    const std::string text = "NAME: m\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: " +
                             fmt + "\nEDGE_WEIGHT_SECTION\n" + body + "\nEOF\n";
    const RawTsp raw = parse_tsplib(text);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) EXPECT_EQ(edge_weight(raw, i, j), d[i][j]) << fmt << " " << i << "," << j;
  }
}

TEST(Tsplib, GeographicDistance) {
  const RawTsp raw = read_tsplib(support::data_path("tsplib/ulysses22.tsp"));
  EXPECT_EQ(raw.weight_kind, WeightKind::Geo);
  EXPECT_EQ(edge_weight(raw, 0, 1), 509);
  EXPECT_EQ(edge_weight(raw, 0, 2), 501);
}

TEST(Tsplib, RejectsUnsupportedWeightType) {
  EXPECT_THROW(parse_tsplib("NAME: x\nTYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: CEIL_2D\nNODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n"),
               ParseError);
}

TEST(Tsplib, RejectsShortWeightSection) {
  EXPECT_THROW(parse_tsplib("NAME: x\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
                            "EDGE_WEIGHT_FORMAT: UPPER_ROW\nEDGE_WEIGHT_SECTION\n1 2\nEOF\n"),
               ParseError);
}

TEST(Tsplib, RejectsMissingDimension) {
  EXPECT_THROW(parse_tsplib("NAME: x\nTYPE: TSP\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\nEOF\n"),
               ParseError);
}

TEST(Tsplib, BundledOptimaMatchHeldKarp) {
  // The bundled optimum table must agree with an exact TSP solve.
  const NuTable table = NuTable::load(support::data_path("nu.txt"));
  const Instance gr17 = support::tsplib_instance("gr17", 1, PrizeScheme::Unit, 0);
  EXPECT_EQ(oracle::tsp_exact(gr17), table.find("gr17").value());
}

TEST(Tsplib, ExplicitCountMatchesFormat) {
  EXPECT_EQ(explicit_weight_count(ExplicitFormat::FullMatrix, 5), 25u);
  EXPECT_EQ(explicit_weight_count(ExplicitFormat::UpperRow, 5), 10u);
  EXPECT_EQ(explicit_weight_count(ExplicitFormat::LowerDiagRow, 5), 15u);
  EXPECT_EQ(explicit_weight_count(ExplicitFormat::UpperDiagRow, 5), 15u);
}
