#include <gtest/gtest.h>

#include <cstdlib>
#include <thread>

#include "lieflag/classify.hpp"
#include "lieflag/json_io.hpp"

using namespace lieflag;

TEST(Classify, PaperExamples) {
  auto v = classify("A3[1,2]");
  EXPECT_EQ(v.status, Status::NotRigid);
  EXPECT_EQ(v.degeneration, kDegenerationA3);
  EXPECT_EQ(v.model, "A3_DEG");

  v = classify("E6[1,2,3,4,5,6]");
  EXPECT_EQ(v.status, Status::Rigid);
  EXPECT_EQ(v.trace[0].rule, "R-FULL");

  v = classify("D4[2,3,4]");
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_EQ(v.canonical_form, "D4[1,2,3]");
  EXPECT_EQ(v.trace[0].rule, "R-D4UNK");
  ASSERT_EQ(v.constraints.size(), 2u);
  EXPECT_NE(v.constraints[0].find("{a2,a3}"), std::string::npos);

  EXPECT_EQ(classify("A4[2,3,4]").status, Status::Rigid);
  EXPECT_EQ(classify("A5[1,5]").trace[0].rule, "R-A1N");
  EXPECT_EQ(classify("A6[1,2,6]").trace[0].rule, "R-A12M");
}

TEST(Classify, D4EndNodesReduceToA3) {
  auto v = classify("D4[1,3,4]");
  EXPECT_EQ(v.status, Status::Rigid);
  const TraceStep* red = nullptr;
  for (const auto& s : v.trace)
    if (s.rule == "R-REDUCE") red = &s;
  ASSERT_NE(red, nullptr);
  ASSERT_EQ(red->children.size(), 3u);
  for (const auto& c : red->children) EXPECT_EQ(c.diagram, "A3[1,3]");
}

TEST(Classify, JConnectedExample) {
  auto v = classify("A5[1,2,4,5]");
  EXPECT_EQ(v.status, Status::Rigid);
  bool jconn = false;
  for (const auto& s : v.trace) jconn = jconn || s.rule == "R-JCONN";
  EXPECT_TRUE(jconn);
}

TEST(Classify, Products) {
  auto v = classify("A3[1,2]xA2[1]");
  EXPECT_EQ(v.status, Status::NotRigid);
  EXPECT_EQ(v.trace[0].rule, "R-PRODUCT");
  EXPECT_EQ(classify("A2[1]xD4[1]").status, Status::Rigid);
  EXPECT_EQ(classify("D4[2,3,4]xA1[1]").status, Status::Undetermined);
}

TEST(Classify, ScopeError) {
  try {
    classify("B3[1]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScopeError);
  }
}

TEST(Classify, InvariantUnderAutomorphisms) {
  EXPECT_EQ(classify("D4[2,3,4]").status, classify("D4[1,2,4]").status);
  EXPECT_EQ(classify("A3[1,2]").status, classify("A3[2,3]").status);
  auto a = classify("E6[1,3]"), b = classify("E6[5,6]");
  EXPECT_EQ(a.canonical_form, b.canonical_form);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(Classify, EveryTraceReplays) {
  for (char t : {'A', 'D'})
    for (int n = (t == 'D' ? 4 : 1); n <= 5; ++n)
      for (int mask = 1; mask < (1 << n); ++mask) {
        NodeSet m;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) m.push_back(i);
        auto v = classify(MarkedDiagram({RootSystem(t, n)}, m));
        std::string why;
        EXPECT_TRUE(replay(v, &why)) << v.input << ": " << why;
      }
}

TEST(Classify, TamperedTraceFailsReplay) {
  auto v = classify("A3[1,2]");
  v.trace[0].rule = "R-FULL";
  EXPECT_FALSE(replay(v));
}

TEST(Classify, JsonRoundTrip) {
  for (const char* s : {"D4[1,3,4]", "D4[2,3,4]", "A3[1,2]xA1[1]", "E6[1,6]"}) {
    auto v = classify(s);
    EXPECT_EQ(verdict_from_json(Json::parse(verdict_to_json(v).dump())), v) << s;
  }
  EXPECT_THROW(verdict_from_json(Json::parse("{}")), Error);
}

TEST(Classify, AddedFactsOnlyAddRigidity) {
  Classifier c;
  auto before = c.classify(MarkedDiagram::parse("D5[1,2,3]"));
  c.add_fact(MarkedDiagram::parse("D4[2,3,4]"), Status::Rigid);
  auto after = c.classify(MarkedDiagram::parse("D5[1,2,3]"));
  if (before.status == Status::Rigid) EXPECT_EQ(after.status, Status::Rigid);
  EXPECT_EQ(c.classify(MarkedDiagram::parse("D4[2,3,4]")).status, Status::Rigid);
}

TEST(Classify, MemoLimit) {
  Classifier c(2);
  for (const char* s : {"A4[1,2]", "A4[2,3]", "D5[1,2]", "E6[2,4]"}) c.classify(MarkedDiagram::parse(s));
  EXPECT_LE(c.memo_size(), 2u);
  Classifier big;
  big.classify(MarkedDiagram::parse("D5[1,2,5]"));
  EXPECT_GT(big.memo_size(), 0u);
}

TEST(Classify, ParallelAgreesWithSerial) {
  std::vector<std::string> specs{"A3[1,2]", "D4[1,3,4]", "D5[1,2,3]", "E6[1,2]", "A5[2,4]", "D4[2,3,4]"};
  std::vector<Verdict> serial, par(specs.size());
  Classifier c1, c2;
  for (const auto& s : specs) serial.push_back(c1.classify(MarkedDiagram::parse(s)));
  std::vector<std::thread> ts;
  for (std::size_t i = 0; i < specs.size(); ++i)
    ts.emplace_back([&, i] { par[i] = c2.classify(MarkedDiagram::parse(specs[i])); });
  for (auto& t : ts) t.join();
  EXPECT_EQ(serial, par);
}

TEST(FiberDiagram, Examples) {
  auto md = MarkedDiagram::parse("D4[1,3,4]");
  EXPECT_EQ(fiber_diagram(md, {0, 2}).diagram.to_string(), "A3[1,3]");
  auto f = fiber_diagram(MarkedDiagram::parse("A4[2,3,4]"), {2, 3});
  // The fiber is F(1,2;C^3): node a1 is cut off by the marked a2.
  EXPECT_EQ(f.diagram.to_string(), "A2[1,2]");
  try {
    fiber_diagram(MarkedDiagram::parse("A3[1,2,3]"), {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SelfReference);
  }
  EXPECT_THROW(fiber_diagram(md, {}), Error);
}
