#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_runner.hpp"

namespace suprep::test {
namespace {

TEST(Cli, Validate) {
  auto r = run_cli("validate --algebra osp12");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK\n");
  r = run_cli("validate --algebra " + sample("osp12_jacobi_broken.alg"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("super-Jacobi fails on (x,x,y)"), std::string::npos);
  EXPECT_EQ(run_cli("validate --algebra " + sample("malformed.alg")).code, 2);
  EXPECT_EQ(run_cli("validate --algebra " + sample("sl2.alg")).code, 0);
  EXPECT_EQ(run_cli("validate --algebra " + sample("osp12.alg")).code, 0);
}

TEST(Cli, Eval) {
  auto r = run_cli("eval \"x*y\" --algebra osp12");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "- y*x + H\n");
  r = run_cli("eval \"beta(x*y)\" --lambda t=-1");
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run_cli("eval \"star(star(x*y))\"").out, "- y*x + H\n");
  EXPECT_EQ(run_cli("eval \"star(y)\"").out, "- i*x\n");
  EXPECT_EQ(run_cli("eval \"x*q\"").code, 2);
  EXPECT_EQ(run_cli("eval \"x*0.5\"").code, 2);
  EXPECT_EQ(run_cli("eval \"x\" --lambda t=0.5").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
}

TEST(Cli, EvalOutputIsAFixedPoint) {
  for (const char* expr : {"x*y*X", "star(x*y*Y)", "X*Y^3", "(1/2+i)*y*x*x", "star(y)*y"}) {
    std::string once = run_cli(std::string("eval \"") + expr + "\"").out;
    once.pop_back();
    std::string twice = run_cli("eval \"" + once + "\"").out;
    twice.pop_back();
    EXPECT_EQ(once, twice) << expr;
  }
}

TEST(Cli, GramCsv) {
  auto r = run_cli("gram --algebra osp12 --lambda t=-1 --depth 4 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "# suprep-gram v1\n"
            "depth,row,col,re,im,verdict\n"
            "0,0,0,1,0,positive-definite\n"
            "1,0,0,1,0,positive-definite\n"
            "2,0,0,1,0,positive-definite\n"
            "3,0,0,2,0,positive-definite\n"
            "4,0,0,4,0,positive-definite\n");
}

TEST(Cli, GramSymbolicAndDepthZero) {
  auto r = run_cli("gram --algebra sl2 --symbolic --depth 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level 1: Y*v\n  - t\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2*t^2 - 2*t"), std::string::npos);
  EXPECT_NE(r.out.find("closed form: unitary iff t is real and t < 0"), std::string::npos);
  r = run_cli("gram --lambda t=5 --depth 0 --format csv");
  EXPECT_NE(r.out.find("\n0,0,0,1,0,positive-definite\n"), std::string::npos);
  EXPECT_EQ(run_cli("gram --depth 2").code, 2);
  EXPECT_EQ(run_cli("gram --symbolic --lambda t=1 --depth 2").code, 2);
}

TEST(Cli, UnitaryScan) {
  auto r = run_cli("unitary-scan --algebra osp12 --from -2 --to 2 --step 1/2 --depth 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "# suprep-unitary-scan v1\n"
            "t,verdict,level,depth,closed_form\n"
            "-2,UnitaryToDepth(8),,8,unitary\n"
            "-3/2,UnitaryToDepth(8),,8,unitary\n"
            "-1,UnitaryToDepth(8),,8,unitary\n"
            "-1/2,UnitaryToDepth(8),,8,unitary\n"
            "0,reducible,1,8,reducible\n"
            "1/2,NotUnitary,1,8,not-unitary\n"
            "1,reducible,3,8,not-unitary\n"
            "3/2,NotUnitary,1,8,not-unitary\n"
            "2,reducible,5,8,not-unitary\n");
  auto s = run_cli("unitary-scan --algebra sl2 --from -2 --to 2 --step 1/2 --depth 8");
  std::istringstream a(r.out), b(s.out);
  std::string la, lb;
  while (std::getline(a, la) && std::getline(b, lb)) {
    // Same verdict column; reducible levels differ between the two algebras.
    EXPECT_EQ(la.substr(0, la.find(',', la.find(',') + 1)), lb.substr(0, lb.find(',', lb.find(',') + 1)));
  }
  r = run_cli("unitary-scan --from 1/3 --to 1/3 --step 1/2 --depth 8");
  EXPECT_EQ(r.out, "# suprep-unitary-scan v1\nt,verdict,level,depth,closed_form\n");
  EXPECT_EQ(run_cli("unitary-scan --from 0 --to 1 --step 0 --depth 2").code, 1);
  EXPECT_EQ(run_cli("unitary-scan --from 0 --to 1 --depth 2").code, 2);
  EXPECT_EQ(run_cli("unitary-scan --from 0 --to 0.5 --step 1/2 --depth 2").code, 2);
}

TEST(Cli, ScanToFileAndDeterminism) {
  std::string path = std::string(SUPREP_BINARY_DIR) + "/scan_test.csv";
  const std::string args = "unitary-scan --from -5/2 --to 5/2 --step 1/4 --depth 6 --out " + path;
  ASSERT_EQ(run_cli(args, "SUPREP_THREADS=1").code, 0);
  std::ifstream f1(path);
  std::string first((std::istreambuf_iterator<char>(f1)), {});
  ASSERT_EQ(run_cli(args, "SUPREP_THREADS=4").code, 0);
  std::ifstream f2(path);
  std::string second((std::istreambuf_iterator<char>(f2)), {});
  EXPECT_EQ(first, second);
  EXPECT_NE(first.find("# suprep-unitary-scan v1"), std::string::npos);
  std::remove(path.c_str());

  for (const char* cmd : {"gram --algebra sl2 --symbolic --depth 6", "singular --lambda t=2 --depth 6",
                          "eval \"star(x*y*X*Y)\"", "unitary-scan --from -3 --to 3 --step 1/3 --depth 5"})
    EXPECT_EQ(run_cli(cmd).out, run_cli(cmd).out) << cmd;
}

TEST(Cli, Singular) {
  auto r = run_cli("singular --algebra sl2 --lambda t=2 --depth 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level 3: Y^3*v (primitive)"), std::string::npos) << r.out;
  r = run_cli("singular --algebra osp12 --lambda t=-1 --depth 6");
  EXPECT_NE(r.out.find("no singular vectors to depth 6"), std::string::npos);
  r = run_cli("singular --algebra osp12 --lambda t=0 --depth 2");
  EXPECT_NE(r.out.find("level 1: y*v (primitive)"), std::string::npos);
}

TEST(Cli, KType) {
  auto r = run_cli("ktype --algebra osp12 --module " + sample("ktype_trivial.kt") + " --ptype 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bound: 4\n"), std::string::npos) << r.out;
  r = run_cli("ktype --module " + sample("ktype_integral.kt") + " --ptype 3");
  EXPECT_NE(r.out.find("Q: [2] [3] [4]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bound: 12\n"), std::string::npos);
  EXPECT_EQ(run_cli("ktype --module " + sample("ktype_partial.kt") + " --ptype 0").code, 1);
  EXPECT_EQ(run_cli("ktype --module " + sample("missing.kt") + " --ptype 0").code, 2);
}

}  // namespace
}  // namespace suprep::test
