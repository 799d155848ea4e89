#include <gtest/gtest.h>

#include "lieflag/splitting.hpp"

using namespace lieflag;

const MarkedDiagram& a3_12() {
  static const MarkedDiagram md = MarkedDiagram::parse("A3[1,2]");
  return md;
}

TEST(Splitting, A3FlagExamples) {
  EXPECT_EQ(distribution_splitting(a3_12(), 0, 1, 1).degrees, (std::vector<int>{-1}));
  EXPECT_EQ(distribution_splitting(a3_12(), 1, 1, 1).degrees, (std::vector<int>{2, 1}));
  auto s = distribution_splitting(a3_12(), 1, 1, 0);
  EXPECT_EQ(s.degrees, (std::vector<int>{-1, -1}));
  EXPECT_EQ(s.total, -2);
  EXPECT_EQ(relative_fiber_splitting(a3_12(), {0}, 1).degrees, (std::vector<int>{-1}));
  EXPECT_EQ(distribution_splitting(a3_12(), 1, 1, 1).to_string(), "O(2) + O(1)");
}

TEST(Splitting, SelfPairingContainsTwo) {
  for (const char* spec : {"A3[1,2]", "D4[2,3,4]", "A5[1,3,5]", "E6[1,6]"}) {
    auto md = MarkedDiagram::parse(spec);
    for (int b : md.marked()) {
      auto d = distribution_splitting(md, b, 1, b).degrees;
      EXPECT_NE(std::find(d.begin(), d.end(), 2), d.end()) << spec << " " << b;
    }
  }
}

TEST(Splitting, SumRuleOverLayers) {
  auto md = MarkedDiagram::parse("D4[2,3,4]");
  for (int b : md.marked())
    for (int a : md.marked()) {
      auto layers = derived_support(md, b);
      int by_layers = 0, direct = 0;
      for (std::size_t k = 1; k <= layers.size() + 1; ++k) by_layers += distribution_splitting(md, b, k, a).total;
      for (const auto& l : layers)
        for (const auto& g : l) direct += md.data().pairing(g, a);
      EXPECT_EQ(by_layers, direct);
    }
}

TEST(Splitting, LayersAreDisjoint) {
  auto layers = derived_support(MarkedDiagram::parse("A3[1,2]"), 1);
  // a2 and a2+a3 commute, so the distribution is integrable.
  ASSERT_EQ(layers.size(), 1u);
  EXPECT_EQ(layers[0].size(), 2u);
  auto d = derived_support(MarkedDiagram::parse("A4[2]"), 1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].size(), 6u);
  // E6[2] is contact: the second layer is the highest root alone.
  auto e = derived_support(MarkedDiagram::parse("E6[2]"), 1);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].size(), 20u);
  EXPECT_EQ(e[1], (std::vector<Root>{{1, 2, 2, 3, 2, 1}}));
}

// Degenerate central-fiber splittings such as O(-2) + O do not arise from the
// homogeneous pairing formula.
TEST(Splitting, NoDegenerateSplitting) {
  for (int b : {0, 1})
    for (int a : {0, 1})
      for (int k = 1; k <= 2; ++k)
        for (int d : distribution_splitting(a3_12(), b, k, a).degrees) EXPECT_NE(d, -2);
}

TEST(Splitting, Errors) {
  try {
    distribution_splitting(a3_12(), 2, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMarked);
  }
  try {
    relative_fiber_splitting(a3_12(), {}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySubset);
  }
  EXPECT_THROW(distribution_splitting(a3_12(), 0, 0, 0), Error);
  EXPECT_TRUE(distribution_splitting(a3_12(), 0, 5, 0).degrees.empty());
}
