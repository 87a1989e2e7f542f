#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "freecrit/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(FREECRIT_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("freecrit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string fixture(const std::string& name) { return write(name + ".json", freecrit::find_fixture(name)->document); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, PaperExamplesPass) {
  EXPECT_EQ(run("paper-examples").code, 0);
  EXPECT_EQ(run("--field rational paper-examples --only ex5.6").code, 0);
  EXPECT_EQ(run("paper-examples --only nope").code, 2);
}

TEST_F(Cli, ExportWritesEveryDocument) {
  EXPECT_EQ(run("paper-examples --export " + (dir_ / "fx").string()).code, 0);
  for (const auto& fx : freecrit::paper_fixtures()) {
    fs::path doc = dir_ / "fx" / (fx.name + ".json");
    ASSERT_TRUE(fs::exists(doc)) << doc;
    Result v = run("validate " + doc.string());
    EXPECT_EQ(v.code, 0) << fx.name << "\n" << v.out;
  }
}

TEST_F(Cli, ValidateAndChecks) {
  std::string ex56 = fixture("ex5.6");
  EXPECT_EQ(run("validate " + ex56).code, 0);
  EXPECT_EQ(run("verify-action " + ex56).code, 0);
  EXPECT_EQ(run("check --theorem thm51 " + ex56).code, 0);
  EXPECT_EQ(run("decompose " + fixture("ex5.5")).code, 1);
  Result j = run("--json check --theorem thm51 " + ex56);
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"verdict\""), std::string::npos);
}

TEST_F(Cli, AnnihilatorExcludesX) {
  Result r = run("--json annihilator " + fixture("ex2.3"));
  EXPECT_EQ(r.code, 0) << r.out;
  // The complex is k over k[x,y]/(x^2,xy); nothing nonzero acts as zero up to homotopy.
  EXPECT_NE(r.out.find("\"basis\": []"), std::string::npos) << r.out;
}

TEST_F(Cli, KoszulOnAnEmptySequence) {
  std::string alg = write("k.json", R"({"kind": "monomial_quotient", "vars": ["x"], "ideal": ["x"], "truncation": 1})");
  std::string out = (dir_ / "kc.json").string();
  Result r = run("koszul --vars '' -o " + out + " " + alg);
  EXPECT_EQ(r.code, 0) << r.out;
  Result b = run("betti " + out);
  EXPECT_EQ(b.code, 0) << b.out;
}

TEST_F(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(run("validate " + write("bad.json", "{\"kind\": ")).code, 2);
  EXPECT_EQ(run("validate " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("--field gfp:91 validate " + fixture("ex5.6")).code, 2);
  std::string q = write("q.json", R"({"field": {"field": "rational"}, "kind": "artinian", "labels": ["1"],
                                       "constants": [[0, 0, 0, "1"]]})");
  Result mismatch = run("validate " + q);
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.out.find("rational"), std::string::npos);
}
