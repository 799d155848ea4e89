#include <gtest/gtest.h>

#include "lieflag/free_lie.hpp"

using namespace lieflag;

// Witt: dim L_k(q) = (1/k) sum_{d|k} mu(d) q^{k/d}.
TEST(FreeLie, WittKnownValues) {
  EXPECT_EQ(witt_number(2, 1), 2);
  EXPECT_EQ(witt_number(2, 2), 1);
  EXPECT_EQ(witt_number(2, 3), 2);
  EXPECT_EQ(witt_number(2, 4), 3);
  EXPECT_EQ(witt_number(2, 5), 6);
  EXPECT_EQ(witt_number(3, 3), 8);
  EXPECT_EQ(witt_number(4, 8), 8160);
}

TEST(FreeLie, LyndonCountsMatchWitt) {
  for (int q = 1; q <= 4; ++q) {
    auto sizes = hall_basis(q, 8);
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(sizes[k - 1], witt_number(q, k)) << q << " " << k;
  }
  EXPECT_THROW(hall_basis(0, 3), Error);
}

TEST(FreeLie, LyndonWordsAndFactorization) {
  Word ab = letter(0) + letter(1);
  EXPECT_TRUE(is_lyndon(ab));
  EXPECT_FALSE(is_lyndon(letter(1) + letter(0)));
  EXPECT_FALSE(is_lyndon(ab + ab));
  Word aab = letter(0) + ab;
  auto [u, v] = standard_factorization(aab);
  EXPECT_EQ(u, letter(0));
  EXPECT_EQ(v, ab);
}

TEST(FreeLie, BracketAntisymmetryAndJacobi) {
  FreeLieAlgebra f(3);
  auto x = generator_element(0), y = generator_element(1), z = generator_element(2);
  auto xy = f.bracket(x, y);
  auto yx = f.bracket(y, x);
  FreeElement sum = xy;
  add_scaled(sum, yx, 1);
  EXPECT_TRUE(sum.empty());
  FreeElement jac = f.bracket(x, f.bracket(y, z));
  add_scaled(jac, f.bracket(y, f.bracket(z, x)), 1);
  add_scaled(jac, f.bracket(z, f.bracket(x, y)), 1);
  EXPECT_TRUE(jac.empty());
  EXPECT_TRUE(f.bracket(x, x).empty());
}

TEST(FreeLie, AdjointPowerDegree) {
  FreeLieAlgebra f(2);
  auto r = f.adjoint_power(generator_element(0), generator_element(1), 2);
  ASSERT_FALSE(r.empty());
  for (const auto& [w, c] : r) EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(multidegree(r.begin()->first, 2), (std::vector<int>{2, 1}));
}

TEST(FreeLie, DerivationIsLeibniz) {
  FreeLieAlgebra f(2);
  // D(x0) = x1, D(x1) = 0; D[x0,x1] = [x1,x1] + [x0,0] = 0; D[[x0,x1],x0] = [[x0,x1],x1].
  std::vector<FreeElement> img{generator_element(1), {}};
  auto x01 = f.bracket(generator_element(0), generator_element(1));
  EXPECT_TRUE(f.apply_derivation(x01, img).empty());
  auto lhs = f.apply_derivation(f.bracket(x01, generator_element(0)), img);
  EXPECT_EQ(lhs, f.bracket(x01, generator_element(1)));
}
