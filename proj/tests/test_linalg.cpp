#include <gtest/gtest.h>

#include "lieflag/core.hpp"
#include "lieflag/linalg.hpp"

using namespace lieflag;

TEST(Rational, ParsesAndPrintsFractions) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(SparseVector, AddCancelsToEmpty) {
  SparseVector v{{3, Rational(1, 2)}, {1, 2}};
  EXPECT_EQ(v.leading_index(), 1);
  v.add(3, Rational(-1, 2));
  EXPECT_EQ(v.size(), 1u);
  v -= SparseVector::unit(1, 2);
  EXPECT_TRUE(v.empty());
}

TEST(Matrix, RankOfKnownMatrices) {
  Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(rank(id), 3u);
  Matrix m(0, 3);
  m.append_row(std::vector<Rational>{1, 2, 3});
  m.append_row(std::vector<Rational>{2, 4, 6});
  m.append_row(std::vector<Rational>{0, 1, 1});
  EXPECT_EQ(rank(m), 2u);
}

TEST(Matrix, NullspaceVectorsAreKilled) {
  Matrix m(0, 4);
  m.append_row(std::vector<Rational>{1, 1, 0, 0});
  m.append_row(std::vector<Rational>{0, 0, 1, -1});
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    EXPECT_EQ(v[0] + v[1], 0);
    EXPECT_EQ(v[2] - v[3], 0);
  }
}

TEST(Matrix, SolveExactRational) {
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 3;
  auto x = solve(a, {1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1, 5));
  EXPECT_EQ((*x)[1], Rational(3, 5));
  Matrix s(2, 1);
  s(0, 0) = 1;
  s(1, 0) = 1;
  EXPECT_FALSE(solve(s, {1, 2}).has_value());
}

TEST(Subspace, MembershipAndResidue) {
  Subspace s;
  EXPECT_TRUE(s.insert(SparseVector{{0, 1}, {1, 1}}));
  EXPECT_FALSE(s.insert(SparseVector{{0, 2}, {1, 2}}));
  EXPECT_TRUE(s.contains(SparseVector{{0, -3}, {1, -3}}));
  EXPECT_FALSE(s.contains(SparseVector::unit(0)));
  EXPECT_EQ(s.dimension(), 1u);
}
