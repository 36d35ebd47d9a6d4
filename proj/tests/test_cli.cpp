#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kEx1A = "y^2*z - x^3";
const std::string kEx1B = "y^2*z - x^2*(x+z)";
const std::string kEx2A =
    "(y-z)*x^5 + (y^2-y*z)*x^4 + (y^3-y^2*z)*x^3 + (-y^2*z^2+y*z^3)*x^2 + (-y^3*z^2+y^2*z^3)*x - y^4*z^2 + y^3*z^3";
const std::string kEx2B = "(y^2-2*z^2)*x^2 + (y^3-2*y*z^2)*x + y^4 - y^2*z^2 - 2*z^4";

struct Outcome {
  int code;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Outcome run(const std::vector<std::string>& args) {
  const std::string out = std::string(BEZOUT_WORK_DIR) + "/cli_stdout.txt";
  const std::string err = std::string(BEZOUT_WORK_DIR) + "/cli_stderr.txt";
  std::string cmd = "NO_COLOR=1 " + quote(BEZOUT_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(out) + " 2>" + quote(err);
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string golden(const std::string& name) { return slurp(std::string(BEZOUT_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST(Cli, FirstExampleText) {
  const Outcome r = run({"intersect", kEx1A, kEx1B});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("example1.txt"));
  EXPECT_NE(r.out.find("# Bezout: 9 = 3*3 OK"), std::string::npos);
}

TEST(Cli, FirstExampleJson) {
  const Outcome r = run({"intersect", kEx1A, kEx1B, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("example1.json"));
}

TEST(Cli, SecondExampleText) {
  const Outcome r = run({"intersect", kEx2A, kEx2B});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("example2.txt"));
}

TEST(Cli, SecondExampleJson) {
  const Outcome r = run({"intersect", kEx2A, kEx2B, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("example2.json"));
}

TEST(Cli, SecondExamplePoints) {
  const Outcome r = run({"points", kEx2A, kEx2B});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("example2_points.txt"));
}

TEST(Cli, OutputIsByteStable) {
  const Outcome a = run({"intersect", kEx2A, kEx2B, "--json", "--points"});
  const Outcome b = run({"intersect", kEx2A, kEx2B, "--json", "--points"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PseudoStrategyGivesSameCycle) {
  const Outcome r = run({"intersect", kEx2A, kEx2B, "--strategy", "pseudo"});
  EXPECT_EQ(r.out, golden("example2.txt"));
}

TEST(Cli, AffineInput) {
  const Outcome r = run({"intersect", "--affine", "x^2+y^2-1", "x*y-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "C1(x+y^3-y; y^4-y^2+1)\n# Bezout: 4 = 2*2 OK\n");
}

TEST(Cli, Verify) {
  const Outcome r = run({"verify", kEx1A, kEx1B});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("resultant oracle: pass"), std::string::npos);
  const Outcome j = run({"intersect", kEx1A, kEx1B, "--json", "--verify"});
  EXPECT_NE(j.out.find("\"verify\""), std::string::npos);
}

TEST(Cli, CommonComponentExitsTwo) {
  const Outcome r = run({"intersect", "x", "2*x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("common component: x"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ParseErrorExitsOne) {
  const Outcome r = run({"intersect", "x +", "y"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos);
  EXPECT_EQ(run({"intersect", "x", "w"}).code, 1);
  EXPECT_EQ(run({"intersect", "x"}).code, 1);
  EXPECT_EQ(run({"intersect", "x^2+y", "y"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
}

TEST(Cli, ConstantCurveWarns) {
  const Outcome r = run({"intersect", "3", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# Bezout: 0 = 0*1 OK"), std::string::npos);
  EXPECT_NE(r.out.find("# warning: "), std::string::npos);
}

TEST(Cli, PlotMarkers) {
  const std::string z = std::string(BEZOUT_WORK_DIR) + "/slice_z.svg";
  const std::string y = std::string(BEZOUT_WORK_DIR) + "/slice_y.svg";
  ASSERT_EQ(run({"plot", kEx1A, kEx1B, "--slice", "z=1", "--out", z}).code, 0);
  ASSERT_EQ(run({"plot", kEx1A, kEx1B, "--slice", "y=1", "--out", y}).code, 0);
  const std::string sz = slurp(z), sy = slurp(y);
  EXPECT_NE(sz.find("data-mult=\"4\""), std::string::npos);
  EXPECT_NE(sy.find("data-mult=\"5\""), std::string::npos);
  EXPECT_EQ(sz.find("data-mult=\"5\""), std::string::npos);
  EXPECT_EQ(sz, (run({"plot", kEx1A, kEx1B, "--slice", "z=1", "--out", z}), slurp(z)));
}

TEST(Cli, PlotRejectsBadSlice) { EXPECT_EQ(run({"plot", kEx1A, kEx1B, "--slice", "q=1"}).code, 1); }
