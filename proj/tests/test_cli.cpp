#include "genset/cli.hpp"

#include "genset/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using genset::cli::ExitCode;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = genset::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("genset_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructWritesCanonicalFamily) {
  auto r = run({"construct", "-n", "4", "-k", "2"});
  EXPECT_EQ(r.code, ExitCode::kOk);
  std::istringstream in(r.out);
  auto made = genset::io::read_family(in);
  EXPECT_EQ(made.family.size(), 6u);
  EXPECT_EQ(r.out, "n=4\n1\n2\n1,2\n3\n4\n3,4\n");

  auto to_file = run({"--no-meta", "construct", "-n", "4", "-k", "2", "-o", path("f.txt")});
  EXPECT_EQ(to_file.code, ExitCode::kOk);
  EXPECT_NE(to_file.out.find("\"size\":6"), std::string::npos);
}

TEST_F(CliTest, CheckReportsCounterexample) {
  const auto f = file("f.txt", "n=2\n1\n1,2\n");
  auto r = run({"--no-meta", "check", "--family", f, "-k", "2"});
  EXPECT_EQ(r.code, ExitCode::kPropertyFails);
  EXPECT_NE(r.out.find("\"counterexample\":\"2\""), std::string::npos);
  EXPECT_EQ(run({"--format", "text", "check", "--family", f, "-k", "2"}).out, "fails 2\n");
  EXPECT_EQ(run({"--format", "text", "check", "--family", f, "-k", "2", "--base"}).code, ExitCode::kPropertyFails);
}

TEST_F(CliTest, CheckHoldsAndDecomposes) {
  run({"construct", "-n", "4", "-k", "2", "-o", path("c.txt")});
  auto holds = run({"--format", "text", "check", "--family", path("c.txt"), "-k", "2"});
  EXPECT_EQ(holds.code, ExitCode::kOk);
  EXPECT_EQ(holds.out, "holds\n");
  EXPECT_EQ(run({"--format", "text", "check", "--family", path("c.txt"), "-k", "2", "--base"}).code, ExitCode::kOk);
  auto d = run({"--format", "text", "check", "--family", path("c.txt"), "-k", "2", "--decompose", "1,3,4"});
  EXPECT_EQ(d.code, ExitCode::kOk);
  EXPECT_EQ(d.out, "parts 3,4 1\n");
  auto absent = run({"--format", "text", "check", "--family", path("c.txt"), "-k", "1", "--decompose", "1,3"});
  EXPECT_EQ(absent.code, ExitCode::kPropertyFails);
  EXPECT_EQ(absent.out, "absent\n");
}

TEST_F(CliTest, BoundsTrivial) {
  auto r = run({"--format", "text", "bounds", "trivial", "-n", "3", "-k", "2"});
  EXPECT_EQ(r.code, ExitCode::kOk);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(run({"--no-meta", "bounds", "trivial", "-n", "3", "-k", "2"}).out,
            "{\"command\":\"bounds trivial\",\"n\":3,\"k\":2,\"trivial_bound\":4}\n");
}

TEST_F(CliTest, BoundsFormulaAndTable) {
  auto r = run({"--format", "text", "bounds", "lemma4", "-n", "10", "-k", "2", "-m", "32", "--delta", "1/6", "-t", "3"});
  EXPECT_EQ(r.code, ExitCode::kOk);
  EXPECT_EQ(r.out, "1952382976000/1\n");
  auto t = run({"bounds", "table", "--n-min", "12", "--n-max", "12", "--k-min", "2", "--k-max", "2"});
  EXPECT_EQ(t.code, ExitCode::kOk);
  EXPECT_EQ(t.out,
            "n,k,trivial_bound,factorial_constant_bound,k_constant_bound,canonical_size\n"
            "12,2,90,90.5097,128,126\n");
}

TEST_F(CliTest, BoundsUnionCheckAndCoverage) {
  run({"construct", "-n", "9", "-k", "2", "-o", path("c.txt")});
  auto u = run({"--no-meta", "bounds", "union-check", "--family", path("c.txt"), "-k", "2", "--delta", "1/9", "-t", "2"});
  EXPECT_EQ(u.code, ExitCode::kOk);
  EXPECT_NE(u.out.find("\"bound_holds\":true"), std::string::npos);

  run({"construct", "-n", "3", "-k", "2", "-o", path("c3.txt")});
  auto c = run({"--format", "text", "bounds", "coverage", "--family", path("c3.txt"), "-k", "2"});
  EXPECT_EQ(c.code, ExitCode::kOk);
  EXPECT_EQ(c.out, "9 >= 8\n");
  auto bad = run({"--format", "text", "bounds", "coverage", "--family", file("one.txt", "n=2\n1\n"), "-k", "2"});
  EXPECT_EQ(bad.code, ExitCode::kPropertyFails);
  EXPECT_EQ(bad.out, "2 < 4\n");
}

TEST_F(CliTest, SearchMin) {
  auto one = run({"--no-meta", "search-min", "-n", "4", "-k", "2"});
  EXPECT_EQ(one.code, ExitCode::kOk);
  EXPECT_NE(one.out.find("\"minimum\":6"), std::string::npos);
  auto sweep = run({"--no-meta", "search-min", "--n-max", "3", "--k-max", "2"});
  EXPECT_EQ(sweep.code, ExitCode::kOk);
  EXPECT_EQ(sweep.out.substr(0, sweep.out.find('\n')), "n,k,trivial_bound,canonical_size,minimum,conjecture_holds,nodes,seconds");
  EXPECT_NE(sweep.out.find("\n3,2,4,4,4,true,"), std::string::npos);
  EXPECT_EQ(run({"search-min", "-n", "6", "-k", "2", "--node-budget", "3"}).code, ExitCode::kBudgetExceeded);
  EXPECT_EQ(run({"search-min"}).code, ExitCode::kUsageError);
}

TEST_F(CliTest, GraphStatistics) {
  run({"construct", "-n", "4", "-k", "2", "-o", path("c.txt")});
  auto g = run({"--format", "text", "graph", "--family", path("c.txt"), "--cliques", "2", "--density", "2"});
  EXPECT_EQ(g.code, ExitCode::kOk);
  EXPECT_EQ(g.out, "vertices=6 edges=11 cliques=11 density=11/15\n");
  auto edges = run({"graph", "--family", path("c.txt"), "--emit-edges", "-"});
  EXPECT_EQ(edges.out.substr(0, 11), "vertices=6\n");
  const auto gf = file("g.txt", "vertices=4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run({"--format", "text", "graph", "--graph", gf, "--cliques", "3"}).out, "vertices=4 edges=4 cliques=0\n");
  EXPECT_EQ(run({"graph", "--family", path("c.txt"), "--graph-m", "3"}).code, ExitCode::kBudgetExceeded);
  EXPECT_EQ(run({"graph", "--family", path("c.txt"), "--graph", gf}).code, ExitCode::kUsageError);
}

TEST_F(CliTest, Turan) {
  EXPECT_EQ(run({"--format", "text", "turan", "eta", "-r", "3", "-s", "3"}).out, "2/9\n");
  auto closed = run({"--format", "text", "turan", "closed-form", "-s", "4", "-T", "3", "-r", "4"});
  EXPECT_EQ(closed.code, ExitCode::kOk);
  EXPECT_EQ(closed.out, "81\n");
  auto graph = run({"turan", "graph", "-s", "2", "-T", "1"});
  EXPECT_EQ(graph.out, "vertices=2\n0 1\n");
  auto erdos = run({"--format", "text", "turan", "erdos", "-l", "5", "-s", "2", "-r", "2"});
  EXPECT_EQ(erdos.code, ExitCode::kOk);
  EXPECT_EQ(erdos.out, "6 6 attained\n");
  EXPECT_EQ(run({"turan", "erdos", "-l", "9", "-s", "2", "-r", "2"}).code, ExitCode::kBudgetExceeded);
  EXPECT_EQ(run({"turan", "eta", "-r", "3", "-s", "2"}).code, ExitCode::kUsageError);
}

TEST_F(CliTest, Blowup) {
  run({"turan", "graph", "-s", "3", "-T", "2", "-o", path("k32.txt")});
  auto found = run({"--format", "text", "blowup", "--graph", path("k32.txt"), "-a", "3", "-t", "2"});
  EXPECT_EQ(found.code, ExitCode::kOk);
  EXPECT_EQ(found.out, "0 1 | 2 3 | 4 5\n");
  const auto c5 = file("c5.txt", "vertices=5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  auto absent = run({"--format", "text", "blowup", "--graph", c5, "-a", "2", "-t", "2"});
  EXPECT_EQ(absent.code, ExitCode::kPropertyFails);
  EXPECT_EQ(absent.out, "absent\n");
}

TEST_F(CliTest, Experiments) {
  run({"turan", "graph", "-s", "3", "-T", "3", "-o", path("k33.txt")});
  auto exact = run({"--format", "text", "experiment", "dense-subset", "--graph", path("k33.txt"), "-l", "4", "-r", "2",
                    "--threshold", "1/2"});
  EXPECT_EQ(exact.code, ExitCode::kOk);
  EXPECT_EQ(exact.out, "1/1\n");  // every 4-subset of K_3(3) has at least 3 of 6 pairs adjacent
  auto no_seed = run({"experiment", "dense-subset", "--graph", path("k33.txt"), "-l", "4", "-r", "2", "--threshold",
                      "1/2", "--samples", "100"});
  EXPECT_EQ(no_seed.code, ExitCode::kUsageError);
  EXPECT_NE(no_seed.err.find("--seed"), std::string::npos);

  run({"construct", "-n", "4", "-k", "2", "-o", path("c.txt")});
  auto p = run({"--format", "text", "experiment", "union-prob", "--family", path("c.txt"), "-t", "2", "--threshold", "2"});
  EXPECT_EQ(p.out, "2/3\n");
  auto s1 = run({"--no-meta", "--seed", "5", "experiment", "union-prob", "--family", path("c.txt"), "-t", "2",
                 "--threshold", "2", "--trials", "1000"});
  EXPECT_EQ(s1.code, ExitCode::kOk);
  EXPECT_NE(s1.out.find("\"seed\":5"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"construct", "-n", "4"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"construct", "-n", "4", "-k", "5"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"--format", "xml", "bounds", "trivial", "-n", "3", "-k", "2"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"check", "--family", file("bad.txt", "n=2\n3\n"), "-k", "1"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"check", "--family", path("missing.txt"), "-k", "1"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"bounds", "lemma4", "-n", "10", "-k", "2", "-m", "x", "--delta", "1/6", "-t", "3"}).code,
            ExitCode::kUsageError);
  EXPECT_EQ(run({"--help"}).code, ExitCode::kOk);
}

TEST_F(CliTest, ConfigFileSuppliesGlobals) {
  const auto cfg = file("genset.ini", "format=text\nno-meta=true\n");
  auto r = run({"--config", cfg, "bounds", "trivial", "-n", "3", "-k", "2"});
  EXPECT_EQ(r.code, ExitCode::kOk);
  EXPECT_EQ(r.out, "4\n");
  const auto caps = file("caps.ini", "graph-m=3\n");
  run({"construct", "-n", "4", "-k", "2", "-o", path("c.txt")});
  EXPECT_EQ(run({"--config", caps, "graph", "--family", path("c.txt")}).code, ExitCode::kBudgetExceeded);
}

TEST_F(CliTest, ThreadsFromEnvironment) {
  ::setenv("GENSET_THREADS", "1", 1);
  auto r = run({"bounds", "trivial", "-n", "3", "-k", "2"});
  ::unsetenv("GENSET_THREADS");
  EXPECT_NE(r.out.find("\"threads\":1"), std::string::npos);
  auto flag = run({"--threads", "1", "bounds", "trivial", "-n", "3", "-k", "2"});
  EXPECT_NE(flag.out.find("\"threads\":1"), std::string::npos);
  genset::set_threads(0);
}

// Every structured-output invocation repeats byte for byte with --no-meta and a fixed seed.
TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  run({"construct", "-n", "6", "-k", "2", "-o", path("c.txt")});
  run({"turan", "graph", "-s", "3", "-T", "3", "-o", path("k33.txt")});
  const std::vector<std::vector<std::string>> cases = {
      {"construct", "-n", "8", "-k", "3"},
      {"check", "--family", path("c.txt"), "-k", "2"},
      {"check", "--family", path("c.txt"), "-k", "2", "--decompose", "1,2,4,6"},
      {"search-min", "--n-max", "4", "--k-max", "3"},
      {"graph", "--family", path("c.txt"), "--cliques", "3", "--density", "2"},
      {"turan", "erdos", "-l", "6", "-s", "3", "-r", "3"},
      {"blowup", "--graph", path("k33.txt"), "-a", "3", "-t", "2"},
      {"bounds", "union-check", "--family", path("c.txt"), "-k", "2", "--delta", "1/12", "-t", "2", "--trials", "5000"},
      {"bounds", "table", "--n-max", "10", "--k-max", "3"},
      {"experiment", "dense-subset", "--graph", path("k33.txt"), "-l", "5", "-r", "3", "--threshold", "1/5",
       "--samples", "3000"},
      {"experiment", "union-prob", "--family", path("c.txt"), "-t", "3", "--threshold", "3", "--trials", "3000"},
  };
  for (const auto& args : cases) {
    std::vector<std::string> full = {"--no-meta", "--seed", "12345"};
    full.insert(full.end(), args.begin(), args.end());
    auto a = run(full);
    auto b = run(full);
    EXPECT_EQ(a.code, b.code) << args[0];
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty()) << args[0];
  }
}
