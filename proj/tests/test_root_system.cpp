#include <gtest/gtest.h>

#include "lieflag/root_system.hpp"

using namespace lieflag;

// Positive root counts: A_n n(n+1)/2, B_n and C_n n^2, D_n n(n-1), E6 36, E7 63, E8 120.
TEST(RootSystem, PositiveRootCounts) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(RootSystem('A', n).positive_roots().size(), std::size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(RootSystem('B', n).positive_roots().size(), std::size_t(n * n));
    EXPECT_EQ(RootSystem('C', n).positive_roots().size(), std::size_t(n * n));
  }
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(RootSystem('D', n).positive_roots().size(), std::size_t(n * (n - 1)));
  EXPECT_EQ(RootSystem('E', 6).positive_roots().size(), 36u);
  EXPECT_EQ(RootSystem('E', 7).positive_roots().size(), 63u);
  EXPECT_EQ(RootSystem('E', 8).positive_roots().size(), 120u);
  // Exceptional non-simply-laced types are outside the supported range.
  EXPECT_THROW(RootSystem('G', 2), Error);
  EXPECT_THROW(RootSystem('F', 4), Error);
}

TEST(RootSystem, HighestRoots) {
  // D4: a1+2a2+a3+a4; E6 (Bourbaki): 1,2,2,3,2,1; B3: a1+2a2+2a3; C3: 2a1+2a2+a3.
  EXPECT_EQ(RootSystem('D', 4).positive_roots().back(), (Root{1, 2, 1, 1}));
  EXPECT_EQ(RootSystem('E', 6).positive_roots().back(), (Root{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(RootSystem('B', 3).positive_roots().back(), (Root{1, 2, 2}));
  EXPECT_EQ(RootSystem('C', 3).positive_roots().back(), (Root{2, 2, 1}));
}

TEST(RootSystem, CartanConventions) {
  // B2: node 2 short, <a1,a2> = -2, <a2,a1> = -1.
  RootSystem b2('B', 2);
  EXPECT_EQ(b2.cartan_matrix()[0][1], -2);
  EXPECT_EQ(b2.cartan_matrix()[1][0], -1);
  EXPECT_EQ(b2.cartan_pairing({1, 1}, 0), 1);
  RootSystem d4('D', 4);
  EXPECT_EQ(d4.cartan_pairing({0, 1, 0, 0}, 1), 2);
  EXPECT_EQ(d4.cartan_pairing({1, 1, 1, 1}, 1), -1);
  EXPECT_TRUE(d4.simply_laced());
  EXPECT_FALSE(b2.simply_laced());
}

TEST(RootSystem, InadmissibleTypes) {
  EXPECT_THROW(RootSystem('B', 1), Error);
  EXPECT_THROW(RootSystem('D', 3), Error);
  EXPECT_THROW(RootSystem('E', 9), Error);
  EXPECT_THROW(RootSystem('X', 2), Error);
}

TEST(RootSystem, ArithmeticAndErrors) {
  RootSystem a3('A', 3);
  auto r = a3.root_arithmetic({1, 0, 0}, {0, 1, 0});
  EXPECT_TRUE(r.sum_is_root);
  EXPECT_EQ(r.height, 1);
  EXPECT_EQ(a3.root_arithmetic({1, 1, 1}, {0, 1, 0}).height, 3);
  EXPECT_FALSE(a3.root_arithmetic({1, 0, 0}, {0, 0, 1}).sum_is_root);
  EXPECT_THROW(a3.cartan_pairing({1, 0, 1}, 0), Error);
  EXPECT_THROW(a3.cartan_pairing({1, 0, 0}, 5), Error);
}

TEST(RootSystem, DirectSumIsBlockDiagonal) {
  RootSystem a1('A', 1), a2('A', 2);
  auto d = direct_sum({&a1.data(), &a2.data()});
  EXPECT_EQ(d.rank(), 3u);
  EXPECT_EQ(d.positive_roots().size(), 4u);
  EXPECT_EQ(d.cartan()[0][1], 0);
  EXPECT_FALSE(d.is_root({1, 1, 0}));
}

TEST(RootSystem, RootClosureOracle) {
  // In a simply-laced system, a + b is a root iff (a, b) = -1, i.e. <a, b> = -1.
  RootSystem e6('E', 6);
  const auto& rs = e6.positive_roots();
  for (const auto& a : rs)
    for (const auto& b : rs) {
      int p = 0;
      for (int j = 0; j < 6; ++j) p += b[j] * e6.cartan_pairing(a, j);
      EXPECT_EQ(e6.data().is_positive_root(a + b), p == -1);
    }
}
