#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bracealg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  Invocation run(const std::string& args) {
    const auto out = dir_ / "stdout.txt";
    const std::string cmd = std::string(BRACECHECK_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
  }

  fs::path dir_;
};

const char* kLine = R"({"space": {"basis": [{"name": "e", "degree": 0}]}, "maps": [
  {"name": "mu", "arity": 2, "degree": 0, "entries": [{"in": ["e", "e"], "out": [{"basis": "e", "coeff": "1"}]}]},
  {"name": "id", "arity": 1, "degree": 0, "entries": [{"in": ["e"], "out": [{"basis": "e", "coeff": "1"}]}]}]})";

const char* kBroken = R"({"space": {"basis": [{"name": "a", "degree": 0}, {"name": "b", "degree": 0}]}, "maps": [
  {"name": "mu2", "arity": 2, "degree": 0, "entries": [
    {"in": ["a", "a"], "out": [{"basis": "b", "coeff": "1"}]},
    {"in": ["b", "a"], "out": [{"basis": "a", "coeff": "1"}]}]}]})";

}  // namespace

TEST_F(Cli, BraceAxiomPasses) {
  const auto ws = write("ws.json", kLine);
  const auto r = run("check brace-axiom --workspace " + ws.string() + " --x mu --xs mu,id --ys id");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS brace-axiom seed=1 case=0 x=mu xs=mu,id ys=id\n");
}

TEST_F(Cli, CompatibilityPasses) {
  const auto ws = write("ws.json", kLine);
  EXPECT_EQ(run("check thm2 --workspace " + ws.string() + " --f mu --gs id").code, 0);
}

TEST_F(Cli, NonAssociativeProductFailsWithCounterexample) {
  const auto ws = write("ws.json", kBroken);
  const auto r = run("check ainfty --workspace " + ws.string() + " --maps mu2 --max-arity 3");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("FAIL ainfty", 0), 0u);
  EXPECT_NE(r.out.find("\"input\":["), std::string::npos);
  EXPECT_NE(r.out.find("\"lhs\":"), std::string::npos);
}

TEST_F(Cli, InputErrorsExitTwo) {
  const auto ws = write("ws.json", kLine);
  EXPECT_EQ(run("check nosuch --workspace " + ws.string()).code, 2);
  EXPECT_EQ(run("check thm2 --workspace " + ws.string() + " --f nosuch").code, 2);
  EXPECT_EQ(run("check thm2 --f mu").code, 2);
  EXPECT_EQ(run("check linfty --workspace " + ws.string() + " --maps mu").code, 2);
  EXPECT_EQ(run("check corollary --workspace " + write("b.json", kBroken).string() + " --maps mu2").code, 2);
  EXPECT_EQ(run("fmt --workspace " + write("bad.json", "{not json").string()).code, 2);
  EXPECT_EQ(run("fuzz --max-dim 0").code, 2);
  EXPECT_EQ(run("fuzz --checks nosuch").code, 2);
  EXPECT_EQ(run("fuzz --degree-range 3..1").code, 2);
  EXPECT_EQ(run("fuzz --max-arity-out 12").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, FuzzIsDeterministicAndReplayable) {
  const auto a = run("fuzz --seed 3 --cases 5 --checks all");
  const auto b = run("fuzz --seed 3 --cases 5 --checks all");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 60);
  const auto one = run("fuzz --seed 3 --cases 5 --case 4 --checks thm1");
  const auto line = one.out;
  EXPECT_NE(a.out.find(line), std::string::npos) << line;
}

TEST_F(Cli, ShiftedConventionFailsAndIsReplayable) {
  const auto r = run("fuzz --seed 1 --cases 20 --checks brace-axiom --insertion-sign from-first-block");
  EXPECT_EQ(r.code, 1);
  const auto pos = r.out.find("FAIL brace-axiom");
  ASSERT_NE(pos, std::string::npos);
  const auto case_pos = r.out.find("case=", pos);
  const int index = std::stoi(r.out.substr(case_pos + 5));
  const auto replay = run("fuzz --seed 1 --cases 20 --case " + std::to_string(index) +
                          " --checks brace-axiom --insertion-sign from-first-block");
  EXPECT_EQ(replay.code, 1);
  EXPECT_NE(r.out.find(replay.out), std::string::npos);
}

TEST_F(Cli, ZeroCasesIsEmptySuccess) {
  const auto r = run("fuzz --seed 1 --cases 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, FmtAndAntisymmetrize) {
  const auto ws = write("ws.json", kLine);
  const auto out = dir_ / "as.json";
  ASSERT_EQ(run("antisymmetrize --workspace " + ws.string() + " --map mu --out " + out.string()).code, 0);
  const auto formatted = run("fmt --workspace " + out.string());
  EXPECT_EQ(formatted.code, 0);
  EXPECT_NE(formatted.out.find("\"name\": \"as_mu\""), std::string::npos);
  const auto again = write("again.json", formatted.out);
  EXPECT_EQ(run("fmt --workspace " + again.string()).out, formatted.out);
}

TEST_F(Cli, PermutationSweeps) {
  EXPECT_EQ(run("check lemma42 --blocks 2,1,0").code, 0);
  EXPECT_EQ(run("check lemma43 --max-r 3 --max-n 2 --cases 2").code, 0);
  EXPECT_EQ(run("check lemma44 --max-n 3 --cases 10").code, 0);
  EXPECT_EQ(run("check lemma42 --blocks 5,5").code, 2);
}
