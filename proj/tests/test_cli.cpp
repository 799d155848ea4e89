#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LIEFLAG_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& t) { return s.find(t) != std::string::npos; }

TEST(Cli, Dims) {
  auto r = run("dims 'D4[2,3,4]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "(4,4,2,1)")) << r.out;
}

TEST(Cli, RootsAndNilradicalJson) {
  EXPECT_EQ(run("roots D4").code, 0);
  auto r = run("nilradical 'A3[1,2]' --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("dims"), nlohmann::json::parse("[3,2]"));
}

TEST(Cli, Present) { EXPECT_EQ(run("present 'A4[2,3,4]'").code, 0); }

TEST(Cli, ModelVerify) {
  auto r = run("model A4_DEG --verify");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("model NOPE").code, 2);
}

TEST(Cli, Compare) {
  auto r = run("compare A4_IDEALQ A4_DEG");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "isomorphic")) << r.out;
}

TEST(Cli, Prolong) {
  auto r = run("prolong 'D4[2,3,4]' --steps 1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("prolong 'A3[1]'").code, 3);
}

TEST(Cli, Split) {
  auto r = run("split 'A3[1,2]' --beta 2 --k 1 --alpha 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "O(2) + O(1)")) << r.out;
  r = run("split-fiber 'A3[1,2]' --A 1 --alpha 2");
  EXPECT_TRUE(has(r.out, "O(-1)")) << r.out;
  EXPECT_EQ(run("split 'A3[1,2]' --beta 3 --k 1 --alpha 2").code, 2);
}

TEST(Cli, ClassifyJsonAndErrors) {
  auto r = run("classify 'A3[1,2]' --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("status"), "NotRigid");
  EXPECT_EQ(run("classify 'B3[1]'").code, 3);
  EXPECT_EQ(run("classify 'D4[1'").code, 2);
  EXPECT_EQ(run("classify").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, Batch) {
  std::string path = ::testing::TempDir() + "lieflag_batch.txt";
  {
    std::ofstream f(path);
    f << "A3[1,2]\nD4[1,3,4]\n\nE6[1]\n";
  }
  auto r = run("classify --batch " + path + " --threads 2");
  EXPECT_EQ(r.code, 0) << r.out;
  auto a = r.out.find("A3[1,2]"), d = r.out.find("D4[1,3,4]"), e = r.out.find("E6[1]");
  EXPECT_TRUE(a < d && d < e) << r.out;
}

// One line per criterion; the exit code is 0 exactly when none failed.
TEST(Cli, SelftestReportsEveryCriterion) {
  auto r = run("selftest");
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(has(r.out, "[" + std::to_string(n) + "]")) << n;
  EXPECT_EQ(r.code, has(r.out, "FAIL [") ? 4 : 0) << r.out;
}
