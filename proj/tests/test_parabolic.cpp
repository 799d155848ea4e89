#include <gtest/gtest.h>

#include "lieflag/parabolic.hpp"

using namespace lieflag;

TEST(MarkedDiagram, ParseAndPrintRoundTrip) {
  for (const char* s : {"D4[2,3,4]", "A3[1,2]", "A1[1]xC2[1,2]", "E6[1,6]"})
    EXPECT_EQ(MarkedDiagram::parse(s).to_string(), s);
  EXPECT_EQ(MarkedDiagram::parse("D4[4,2,3]").to_string(), "D4[2,3,4]");
}

TEST(MarkedDiagram, ParseErrors) {
  EXPECT_THROW(MarkedDiagram::parse("D4[2,3,9]"), Error);
  EXPECT_THROW(MarkedDiagram::parse("D4[2,2]"), Error);
  EXPECT_THROW(MarkedDiagram::parse("Q4[1]"), Error);
  EXPECT_THROW(MarkedDiagram::parse("D4[1"), Error);
  EXPECT_THROW(MarkedDiagram::parse("D4[]"), Error);
  EXPECT_NO_THROW(MarkedDiagram::parse("D4", true));
  try {
    MarkedDiagram::parse("A3[0]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownNode);
  }
}

// Dimensions of G/P: number of positive roots with deg_I >= 1.
TEST(MarkedDiagram, GradedDims) {
  EXPECT_EQ(MarkedDiagram::parse("D4[2,3,4]").graded_dims().dims, (std::vector<int>{4, 4, 2, 1}));
  EXPECT_EQ(MarkedDiagram::parse("D4[2,3]").graded_dims().dims, (std::vector<int>{5, 4, 1}));
  EXPECT_EQ(MarkedDiagram::parse("A4[2,3,4]").graded_dims().dims, (std::vector<int>{4, 3, 2}));
  EXPECT_EQ(MarkedDiagram::parse("A3[1,2]").graded_dims().total, 5);
  // Grassmannian G(2,5): dim 6, depth 1; quadric Q^6 = D4[1]: dim 6, depth 1.
  EXPECT_EQ(MarkedDiagram::parse("A4[2]").graded_dims().dims, (std::vector<int>{6}));
  EXPECT_EQ(MarkedDiagram::parse("D4[1]").graded_dims().dims, (std::vector<int>{6}));
  // Full flags of A_n: n(n+1)/2.
  EXPECT_EQ(MarkedDiagram::parse("A4[1,2,3,4]").space_dim(), 10);
  for (int m = 3; m <= 8; ++m)
    EXPECT_EQ(MarkedDiagram::parse("A" + std::to_string(m) + "[1,2," + std::to_string(m) + "]").space_dim(), 3 * m - 3);
}

TEST(MarkedDiagram, NeighborsAndJComponents) {
  auto md = MarkedDiagram::parse("D4[1,3,4]");
  EXPECT_EQ(md.neighbors(0).in_j, (NodeSet{1}));
  EXPECT_EQ(md.j_components().size(), 1u);
  EXPECT_TRUE(md.is_j_connected(0, 2));
  EXPECT_EQ(md.trivalent_nodes(), (NodeSet{1}));
  EXPECT_EQ(md.end_nodes(), (NodeSet{0, 2, 3}));
  auto a = MarkedDiagram::parse("A4[1,4]");
  EXPECT_TRUE(a.is_j_connected(0, 3));
  auto b = MarkedDiagram::parse("A4[1,2,4]");
  EXPECT_FALSE(b.is_j_connected(0, 3));
}

TEST(MarkedDiagram, LevelSets) {
  auto md = MarkedDiagram::parse("A5[1,3,5]");
  auto lv = md.level_sets(0);
  ASSERT_EQ(lv.size(), 3u);
  EXPECT_EQ(lv[1], (NodeSet{2}));
  EXPECT_EQ(lv[2], (NodeSet{4}));
  EXPECT_THROW(MarkedDiagram::parse("A1[1]xA1[1]").level_sets(0), Error);
}

TEST(MarkedDiagram, EndVertexFindingsReportNotThrow) {
  // D4[1]: the J-neighbour of a1 is the branch node, not an end of its J-component.
  auto f = MarkedDiagram::parse("D4[1]").end_vertex_findings();
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE(MarkedDiagram::parse("A4[2]").end_vertex_findings().empty());
}

TEST(Canonical, UnderAutomorphisms) {
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("D4[2,3,4]")), "D4[1,2,3]");
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("D4[1,3,4]")), "D4[1,3,4]");
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("A3[2,3]")), "A3[1,2]");
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("E6[6]")), "E6[1]");
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("D5[5]")), "D5[4]");
  EXPECT_EQ(canonical_string(MarkedDiagram::parse("A2[1]xA1[1]")), "A1[1]xA2[1]");
}

TEST(Canonical, AutomorphismsPreserveCartan) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 5}, {'D', 4}, {'D', 6}, {'E', 6}}) {
    RootSystem rs(t, n);
    for (const auto& p : diagram_automorphisms(t, n))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(rs.cartan_matrix()[p[i]][p[j]], rs.cartan_matrix()[i][j]);
  }
}

TEST(InducedDiagram, IdentifiesSubdiagramTypes) {
  auto md = MarkedDiagram::parse("D4[1,3,4]");
  auto ind = induced_diagram(md, {0, 1, 2}, {0, 2});
  EXPECT_EQ(ind.diagram.to_string(), "A3[1,3]");
  auto e6 = MarkedDiagram::parse("E6[1]");
  auto d5 = induced_diagram(e6, {1, 2, 3, 4, 5}, {5});
  EXPECT_EQ(d5.diagram.components()[0].name(), "D5");
}

TEST(Vmrt, FactorsOverJNeighbours) {
  // D4[2]: the J-neighbours of a2 are three A1 components.
  EXPECT_EQ(vmrt_factors(MarkedDiagram::parse("D4[2]"), 1).size(), 3u);
  auto f = vmrt_factors(MarkedDiagram::parse("A4[1]"), 0);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].diagram, "A3[1]");
  EXPECT_THROW(vmrt_factors(MarkedDiagram::parse("A4[1]"), 1), Error);
}
