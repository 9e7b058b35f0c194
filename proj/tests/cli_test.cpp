#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shrinker::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("shrinker_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SphereCsv) {
  const auto r = run({"spectrum", "sphere", "--n", "3", "--count", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST_F(Cli, CylinderJson) {
  const auto r = run({"spectrum", "cylinder", "--k", "1", "--n", "2", "--count", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][1]["mult"], 3);
  EXPECT_EQ(j["min_x2"], 1.0);
}

TEST_F(Cli, DirichletSpectrum) {
  const auto r = run({"spectrum", "dirichlet-1d", "--bounds", "-6", "6", "--grid", "6000", "--count", "4"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "dirichlet");
  EXPECT_LE(j["entries"][0]["lambda"].get<double>(), 1e-6);
}

TEST_F(Cli, SphereYangIsSharp) {
  run({"spectrum", "sphere", "--n", "2", "--count", "40", "--out", path("s.json")});
  const auto r = run({"yang", path("s.json"), "--n", "2", "--k-max", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 31u);
  for (const auto& rep : j) EXPECT_LE(std::abs(rep["relative_gap"].get<double>()), 1e-9);
}

TEST_F(Cli, OrnsteinUhlenbeckYang) {
  run({"spectrum", "euclidean-ou", "--n", "2", "--count", "10", "--out", path("ou.json")});
  const auto r = run({"yang", path("ou.json"), "--n", "2", "--min-x2", "0", "--k-max", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, YangCsvInput) {
  run({"spectrum", "sphere", "--n", "3", "--count", "6", "--format", "csv", "--out", path("s.csv")});
  EXPECT_EQ(run({"yang", path("s.csv"), "--n", "3", "--min-x2", "3", "--k-max", "5", "--csv-kind", "closed"}).code, 0);
}

TEST_F(Cli, TruncatedFileIsInsufficientData) {
  const auto f = write("short.json",
                       R"({"kind":"closed","n":2,"entries":[{"lambda":0,"mult":1},{"lambda":1,"mult":1}],"min_x2":2})");
  EXPECT_EQ(run({"yang", f, "--n", "2", "--k-max", "5"}).code, 4);
}

TEST_F(Cli, ViolationIsAssertionFailure) {
  const auto f = write("bad.json",
                       R"({"kind":"closed","n":2,"entries":[{"lambda":0,"mult":1},{"lambda":100,"mult":1}]})");
  EXPECT_EQ(run({"yang", f, "--n", "2", "--min-x2", "2", "--k-max", "0"}).code, 1);
}

TEST_F(Cli, ParseErrors) {
  EXPECT_EQ(run({"yang", write("broken.json", "{"), "--n", "2", "--min-x2", "0", "--k-max", "1"}).code, 3);
  EXPECT_EQ(run({"yang", path("missing.json"), "--n", "2", "--min-x2", "0", "--k-max", "1"}).code, 3);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"spectrum", "torus", "--count", "3"}).code, 2);
  EXPECT_EQ(run({"spectrum", "sphere", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"bound", "--theorem", "9.9", "--n", "3", "--k-max", "3"}).code, 2);
}

TEST_F(Cli, LowerOrder) {
  run({"spectrum", "dirichlet-1d", "--bounds", "-6", "6", "--grid", "2000", "--count", "3", "--out", path("d.json")});
  const auto r = run({"lower-order", path("d.json"), "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["satisfied"].get<bool>());
}

TEST_F(Cli, BoundDominatesSphere) {
  run({"spectrum", "sphere", "--n", "3", "--count", "12", "--out", path("s.json")});
  const auto r = run({"bound", "--theorem", "1.2", "--n", "3", "--min-x2", "3", "--k-max", "100", "--check", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).size(), 100u);
}

TEST_F(Cli, ShiftedGrowthBound) {
  const auto r = run({"bound", "--theorem", "4.4", "--n", "2", "--mu1", "1", "--k-max", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(json::parse(r.out)[3]["bound_value"].get<double>(), 12.0);
}

TEST_F(Cli, Table1Formats) {
  const auto csv = run({"table1"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("k,a1,a2_next,a3_next", 0), 0u);
  const auto md = run({"table1", "--format", "md"});
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| a3(k+1) | 2.63 |"), std::string::npos);
}

TEST_F(Cli, DirichletProblemFile) {
  const auto f = write("p.json", R"({"dim":1,"bounds":[[-1,1]],"grid":199,"count":3})");
  const auto r = run({"dirichlet", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["order_estimates"].size(), 3u);
  for (const auto& p : j["order_estimates"]) EXPECT_NEAR(p.get<double>(), 2.0, 0.1);
}

TEST_F(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"spectrum", "dirichlet-rect", "--bounds", "-5", "5", "-5", "5",
                                      "--grid", "200", "--count", "6"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, BoundAliases) {
  const auto numeric = run({"bound", "--theorem", "1.2", "--n", "3", "--min-x2", "3", "--k-max", "5"});
  const auto named = run({"bound", "--theorem", "closed", "--n", "3", "--min-x2", "3", "--k-max", "5"});
  EXPECT_EQ(numeric.code, 0);
  EXPECT_EQ(numeric.out, named.out);
}
