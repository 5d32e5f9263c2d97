#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace toricd::cli {
namespace {

using json = nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "toricd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string plane() { return testing::fixture_dir() + "/plane.json"; }
std::string prism() { return testing::fixture_dir() + "/prism.json"; }

TEST(Parse, MatrixFormats) {
  EXPECT_EQ(parse_matrix("{\"columns\": [[1,1],[1,2],[2,0],[2,1]]}"), testing::plane_fixture());
  EXPECT_EQ(parse_matrix("1 1 2 2\n1 2 0 1\n"), testing::plane_fixture());
  EXPECT_EQ(parse_matrix("1 1 2 2; 1 2 0 1"), testing::plane_fixture());
  EXPECT_THROW(parse_matrix("1 2\n3"), ToricError);
  EXPECT_THROW(parse_matrix("{\"columns\": [[1,"), ToricError);
  EXPECT_THROW(parse_matrix(""), ToricError);
}

TEST(Parse, Vectors) {
  RatVector v = parse_vector("1/2,-3");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], Rational(1, 2));
  EXPECT_EQ(v[1], -3);
  EXPECT_THROW(parse_vector("1/0"), ToricError);
  EXPECT_THROW(parse_vector("a,b"), ToricError);
}

TEST(Commands, ETau) {
  CliRun r = run_cli({"etau", "--matrix", plane(), "--alpha", "1,1", "--face", "sigma3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["members"], json::array({"0", "(1,0)"}));
  EXPECT_EQ(j["full"], true);
  EXPECT_EQ(j["certification"]["etau"], "exact");
}

TEST(Commands, Equiv) {
  CliRun r = run_cli({"equiv", "--matrix", plane(), "--alpha", "0,0", "--beta", "1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["equivalent"], false);
}

TEST(Commands, Member) {
  CliRun r = run_cli({"member", "1,0", "--matrix", plane()});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["member"], false);
  EXPECT_EQ(j["obstruction"], "no representation");
}

TEST(Commands, AnalyzePlane) {
  CliRun r = run_cli({"analyze", "--matrix", plane()});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["simple"], false);
  EXPECT_EQ(j["prim_count"], 2);
  EXPECT_EQ(j["certification"]["simple"], "exact");
}

TEST(Commands, AnalyzePrism) {
  CliRun r = run_cli({"analyze", "--matrix", prism()});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["scored"], "window");
  EXPECT_EQ(j["simple"], false);
  EXPECT_EQ(j["c2"], "fails");
}

TEST(Commands, AnalyzeTrivial) {
  CliRun r = run_cli({"analyze", "--inline", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["simple"], true);
  EXPECT_EQ(j["hole_count"], 0);
}

TEST(Commands, OutputIsByteStable) {
  CliRun a = run_cli({"classify", "--matrix", plane(), "--alpha", "1/2,0"});
  CliRun b = run_cli({"classify", "--matrix", plane(), "--alpha", "1/2,0"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  EXPECT_EQ(j["class_count"], 8);
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Commands, TextMatrixFile) {
  CliRun r = run_cli({"c2", "--matrix", testing::fixture_dir() + "/square.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["c2"], "holds");
}

TEST(Commands, TextFormat) {
  CliRun r = run_cli({"c0", "--matrix", plane(), "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c0: false"), std::string::npos);
}

TEST(Commands, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"facets"},
      {"signature", "--alpha", "0,1/2"},
      {"holes"},
      {"omega", "--degree", "1,0"},
      {"lambda", "--alpha", "0,0", "--degree", "2,0"},
      {"ann", "--alpha", "0,0", "--degree", "0,0"},
      {"prim"},
      {"simple"},
      {"c2"},
      {"classify", "--alpha", "0,0", "--window", "8"},
  };
  for (auto args : cmds) {
    args.push_back("--matrix");
    args.push_back(plane());
    CliRun r = run_cli(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(json::parse(r.out)) << args[0];
    EXPECT_TRUE(json::parse(r.out).contains("certification")) << args[0];
  }
}

TEST(ExitCodes, InvalidInput) {
  EXPECT_EQ(run_cli({"analyze", "--inline", "2 0; 0 1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"analyze", "--inline", "1 -1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"analyze", "--inline", "1 2; 0 0"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"analyze", "--matrix", "/nonexistent/file"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"etau", "--matrix", plane(), "--alpha", "1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"etau", "--matrix", plane(), "--alpha", "1,1", "--face", "nope"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"nonsense"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({}).code, kInvalidInput);
}

TEST(ExitCodes, RequireCertified) {
  EXPECT_EQ(run_cli({"holes", "--matrix", plane(), "--require-certified"}).code, kUncertified);
  EXPECT_EQ(run_cli({"c0", "--matrix", plane(), "--require-certified"}).code, kOk);
}

}  // namespace
}  // namespace toricd::cli
