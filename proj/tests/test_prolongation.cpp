#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lieflag/models.hpp"
#include "lieflag/prolongation.hpp"

using namespace lieflag;

GradedLieAlgebra abelian(int n) {
  GradedLieAlgebra g("ab");
  for (int i = 0; i < n; ++i) g.add_basis("x" + std::to_string(i), 1);
  return g;
}

// Abelian C^n: l_k = Hom(Sym^{k+1} C^n, C^n).
TEST(Prolongation, AbelianOracle) {
  EXPECT_EQ(prolongation_dims(abelian(1), 3), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(prolongation_dims(abelian(2), 3), (std::vector<int>{4, 6, 8, 10}));
}

TEST(Prolongation, HeisenbergDegreeZero) {
  GradedLieAlgebra h("heis");
  h.add_basis("x", 1);
  h.add_basis("y", 1);
  h.add_basis("z", 2);
  h.set_bracket(0, 1, SparseVector::unit(2));
  // gl(2) acting on (x, y) with z scaled by the trace.
  EXPECT_EQ(graded_derivations_deg0(h).dim(), 4);
}

TEST(Prolongation, MatchesRootDataAwayFromExceptions) {
  for (const char* s : {"D4[2,3,4]", "A4[2,3,4]", "A3[1,2,3]", "D4[2,3]"}) {
    auto rep = prolongation_tower(MarkedDiagram::parse(s), 3);
    EXPECT_FALSE(rep.exception) << s;
    EXPECT_TRUE(rep.all_match()) << s;
  }
  auto rep = prolongation_tower(MarkedDiagram::parse("D4[2,3,4]"), 1);
  EXPECT_EQ(rep.rows[0].computed, 6);
  EXPECT_EQ(rep.rows[1].computed, 4);
}

TEST(Prolongation, FullFlagDegreeZeroIsCartan) {
  // A2[1,2] is in the exception family; from A3 on g_0 is the Cartan.
  for (int n = 3; n <= 5; ++n) {
    std::string s = "A" + std::to_string(n) + "[";
    for (int i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + std::to_string(i);
    auto g = parabolic_nilradical(MarkedDiagram::parse(s + "]")).algebra;
    EXPECT_EQ(graded_derivations_deg0(g).dim(), n) << s;
  }
}

TEST(Prolongation, ExceptionFamilyIsFlagged) {
  auto rep = prolongation_tower(MarkedDiagram::parse("A3[1,2]"), 1);
  EXPECT_TRUE(rep.exception);
  EXPECT_FALSE(rep.all_match());
  EXPECT_EQ(rep.rows[0].expected, 5);
}

TEST(Prolongation, InvariantUnderBasisShuffle) {
  auto g = parabolic_nilradical(MarkedDiagram::parse("A4[2,3,4]")).algebra;
  std::mt19937 rng(11);
  std::vector<int> perm(g.dim());
  for (int i = 0; i < g.dim(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SparseVector> vecs;
  std::vector<std::string> labels;
  for (int i = 0; i < g.dim(); ++i) {
    vecs.push_back(SparseVector::unit(perm[i], i + 1));
    labels.push_back("u" + std::to_string(i));
  }
  auto h = sort_by_degree(change_basis(g, vecs, labels, "shuffled"));
  EXPECT_EQ(prolongation_dims(h, 2), prolongation_dims(g, 2));
}

TEST(Prolongation, Errors) {
  auto g = abelian(2);
  try {
    prolong_step(g, {}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingLowerStep);
  }
  try {
    prolongation_tower(MarkedDiagram::parse("A4[1]"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProjectiveSpaceInput);
  }
  try {
    prolongation_tower(MarkedDiagram::parse("B3[1]"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScopeError);
  }
}

TEST(Prolongation, StepsVerifyIndependently) {
  auto g = parabolic_nilradical(MarkedDiagram::parse("D4[2,3]")).algebra;
  std::vector<ProlongationStep> levels;
  prolongation_dims(g, 2, &levels);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::vector<ProlongationStep> lower(levels.begin(), levels.begin() + i);
    EXPECT_TRUE(verify_step(g, lower, levels[i])) << i;
  }
}

// The degenerate models have infinite towers; pinned as regression values.
TEST(Prolongation, DegenerateModelRegression) {
  EXPECT_EQ(prolongation_dims(build_a3_deg(), 3), (std::vector<int>{6, 11, 19, 32}));
  EXPECT_EQ(prolongation_dims(build_a4_deg(), 2), (std::vector<int>{7, 14, 31}));
}
