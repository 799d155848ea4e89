#include <gtest/gtest.h>

#include "lieflag/compare.hpp"
#include "lieflag/json_io.hpp"
#include "lieflag/models.hpp"

using namespace lieflag;

TEST(Models, AllIdsVerify) {
  for (const auto& id : model_ids()) {
    auto m = build_model(id);
    auto r = verify_model(m);
    EXPECT_TRUE(r.jacobi) << id;
    EXPECT_TRUE(r.dims_ok) << id << " " << dims_to_string(m.algebra.dims());
    EXPECT_TRUE(r.table_mismatches.empty()) << id;
  }
}

TEST(Models, A4DegTableAndHalfBracket) {
  auto g = build_a4_deg();
  EXPECT_EQ(a4_deg_table().size(), 27u);
  EXPECT_TRUE(verify_bracket_table(g, a4_deg_table()).empty());
  auto v = g.bracket(SparseVector::unit(g.index_of("v23")), SparseVector::unit(g.index_of("v34")));
  EXPECT_EQ(v, SparseVector::unit(g.index_of("v2334"), make_rational(1, 2)));
}

TEST(Models, TableMismatchIsReported) {
  auto g = build_a4_deg();
  auto t = a4_deg_table();
  t[0].value = {{Rational(5), t[0].left}};
  EXPECT_EQ(verify_bracket_table(g, t).size(), 1u);
}

TEST(Models, A3DegIsC2PlusA1) {
  auto g = build_a3_deg();
  EXPECT_EQ(g.dims(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(g.center_dims(), (std::vector<int>{1, 0, 1}));
}

TEST(Models, IdealQuotientMatchesA4Deg) {
  for (int lam : {0, 1, 3}) {
    auto c = compare_graded(build_a4_idealq(lam), build_a4_deg());
    EXPECT_TRUE(c.certificate.has_value()) << lam;
  }
}

TEST(Models, UnknownModel) {
  try {
    build_model("NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownModel);
  }
  EXPECT_EQ(build_model("STD(D4[2,3,4])").algebra.dims(), (std::vector<int>{4, 4, 2, 1}));
}

TEST(Regrade, IdentityWhenNothingMoves) {
  auto g = build_b4_q();
  auto r = regrade_positive_part(g, {});
  EXPECT_EQ(r.dims(), g.dims());
  EXPECT_TRUE(r.check_jacobi());
}

TEST(Regrade, B4QWithV4InDegreeZero) {
  auto r = regrade_positive_part(build_b4_q(), {{"v4", 0}});
  EXPECT_EQ(r.dims(), (std::vector<int>{5, 4, 1}));
  EXPECT_TRUE(r.check_jacobi());
  EXPECT_THROW(regrade_positive_part(build_b4_q(), {{"v12", 0}}), Error);
  EXPECT_THROW(regrade_positive_part(build_a4_deg(), {{"v2", 0}}), Error);
}

// The regraded B4 quotient has the dims of STD(D4[2,3]) but a larger center;
// the comparison must say so rather than claim an isomorphism.
TEST(Regrade, CaseCReportsCenterDifference) {
  auto rc = case_c_regrading();
  EXPECT_EQ(rc.regraded.dims(), rc.target.dims());
  EXPECT_TRUE(rc.comparison.dims_equal);
  EXPECT_FALSE(rc.comparison.certificate.has_value());
  ASSERT_FALSE(rc.comparison.differences.empty());
  EXPECT_NE(rc.comparison.differences[0].find("center"), std::string::npos);
}

TEST(Compare, SelfAndMismatch) {
  auto a = build_model("STD(D4[2,3])").algebra;
  EXPECT_TRUE(compare_graded(a, a).certificate.has_value());
  auto c = compare_graded(build_a3_deg(), build_model("STD(A3[1,2])").algebra);
  EXPECT_FALSE(c.certificate.has_value());
  // (3,1,1) against (3,2): same total dimension, different grading.
  EXPECT_FALSE(c.dims_equal);
  EXPECT_FALSE(c.differences.empty());
}

TEST(Json, AlgebraRoundTrip) {
  for (const auto& id : model_ids()) {
    auto g = build_model(id).algebra;
    auto back = algebra_from_json(Json::parse(algebra_to_json(g).dump()));
    EXPECT_TRUE(same_algebra(g, back)) << id;
  }
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"name":"x"})")), Error);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"name":"x","labels":["a"],"degrees":[1],"brackets":[{"i":0,"j":0,"terms":[]}]})")),
               Error);
}
