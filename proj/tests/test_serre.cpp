#include <gtest/gtest.h>

#include "lieflag/graded_algebra.hpp"
#include "lieflag/serre.hpp"

using namespace lieflag;

// Oracle: height-graded dims of n = number of positive roots of each height.
std::vector<int> height_counts(const RootSystem& rs) {
  std::vector<int> d;
  for (const auto& r : rs.positive_roots()) {
    int h = height(r);
    if (static_cast<int>(d.size()) < h) d.resize(h, 0);
    ++d[h - 1];
  }
  return d;
}

TEST(Serre, NilradicalsMatchRootData) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 3}, {'A', 5}, {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'D', 4}, {'D', 5}, {'E', 6}}) {
    RootSystem rs(t, n);
    auto h = serre_nilradical(rs);
    EXPECT_EQ(h.algebra.dims(), height_counts(rs)) << rs.name();
    EXPECT_TRUE(h.algebra.check_jacobi()) << rs.name();
    EXPECT_TRUE(h.algebra.check_weights()) << rs.name();
    std::set<Root> seen(h.roots.begin(), h.roots.end());
    EXPECT_EQ(seen.size(), rs.positive_roots().size()) << rs.name();
  }
}

TEST(Serre, KnownDims) {
  EXPECT_EQ(serre_nilradical(RootSystem('A', 3)).algebra.dims(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(serre_nilradical(RootSystem('D', 4)).algebra.dims(), (std::vector<int>{4, 3, 3, 1, 1}));
  EXPECT_EQ(serre_nilradical(RootSystem('C', 2)).algebra.dims(), (std::vector<int>{2, 1, 1}));
}

TEST(NilpotentQuotient, FreeTruncatedMatchesWitt) {
  Presentation p;
  p.generator_labels = {"a", "b"};
  p.max_degree = 5;
  p.allow_truncation = true;
  auto g = nilpotent_quotient(p);
  EXPECT_EQ(g.dims(), (std::vector<int>{2, 1, 2, 3, 6}));
  p.allow_truncation = false;
  EXPECT_THROW(nilpotent_quotient(p), Error);
}

TEST(NilpotentQuotient, RejectsInhomogeneousRelations) {
  Presentation p;
  p.generator_labels = {"a", "b"};
  FreeLieAlgebra f(2);
  FreeElement r = f.bracket(generator_element(0), generator_element(1));
  add_scaled(r, generator_element(0), 1);
  p.relations = {r};
  EXPECT_THROW(nilpotent_quotient(p), Error);
}

TEST(Parabolic, NilradicalDimsAndDegrees) {
  auto h = parabolic_nilradical(MarkedDiagram::parse("D4[2,3,4]"));
  EXPECT_EQ(h.algebra.dims(), (std::vector<int>{4, 4, 2, 1}));
  EXPECT_TRUE(h.algebra.check_jacobi());
  EXPECT_TRUE(h.algebra.is_generated_in_degree_one());
  for (int i = 0; i < h.algebra.dim(); ++i) EXPECT_EQ(h.algebra.degree(i), h.roots[i][1] + h.roots[i][2] + h.roots[i][3]);
}

TEST(Prop27, DegreeOnePresentationForAllSmallMarkings) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4}, {'D', 4}}) {
    for (int mask = 1; mask < (1 << n); ++mask) {
      NodeSet m;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) m.push_back(i);
      MarkedDiagram md({RootSystem(t, n)}, m);
      auto r = prop27_quotient(md);
      EXPECT_TRUE(r.dims_match) << md.to_string();
      EXPECT_TRUE(r.profiles_match) << md.to_string();
    }
  }
}

TEST(Prop27, ScopeAndEmptyMarking) {
  try {
    prop27_quotient(MarkedDiagram::parse("B3[1]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScopeError);
  }
  EXPECT_THROW(parabolic_nilradical(MarkedDiagram::parse("A3", true)), Error);
}

TEST(GradedAlgebra, QuotientAndChangeOfBasis) {
  auto h = serre_nilradical(RootSystem('A', 3));
  const auto& g = h.algebra;
  int top = h.index_of_root({1, 1, 1});
  auto q = quotient_by_elements(g, {SparseVector::unit(top)}, "q");
  EXPECT_EQ(q.dims(), (std::vector<int>{3, 2}));
  EXPECT_TRUE(q.check_jacobi());
  std::vector<SparseVector> vecs;
  for (int i = g.dim() - 1; i >= 0; --i) vecs.push_back(SparseVector::unit(i, 2));
  std::vector<std::string> labels;
  for (int i = 0; i < g.dim(); ++i) labels.push_back("u" + std::to_string(i));
  auto s = sort_by_degree(change_basis(g, vecs, labels, "s"));
  EXPECT_EQ(s.dims(), g.dims());
  EXPECT_TRUE(s.check_jacobi());
}

TEST(GradedAlgebra, SeriesOfHeisenberg) {
  GradedLieAlgebra h("heis");
  h.add_basis("x", 1);
  h.add_basis("y", 1);
  h.add_basis("z", 2);
  h.set_bracket(0, 1, SparseVector::unit(2));
  EXPECT_EQ(h.lower_central_series(), (std::vector<int>{3, 1, 0}));
  EXPECT_EQ(h.center_dims(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(h.is_nilpotent());
}
