#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "commands.hpp"

using namespace soficlab::cli;

namespace {

RunConfig config(std::string command, Json params) {
  RunConfig c;
  c.command = std::move(command);
  c.params = std::move(params);
  return c;
}

}  // namespace

TEST(Cli, PrimesExample) {
  const auto r = run_command(config("primes", {{"q", {7, 11}}, {"gamma", {1, 1}}}));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["results"]["p"], 37);
  EXPECT_TRUE(r.report["pass"].get<bool>());
  EXPECT_EQ(r.report["version"], std::string(tool_version()));
  EXPECT_EQ(r.report["seed"], 1);
}

TEST(Cli, RigidityExample) {
  const auto r = run_command(config("rigidity", {{"group", "sym3"}, {"check", "biregular"}}));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["results"]["centralizer_order"], 6);
  EXPECT_EQ(r.report["results"]["double_centralizer"], "closes");
  EXPECT_EQ(r.report["results"]["flip_swap"], true);
}

TEST(Cli, SchreierExample) {
  const auto r = run_command(config("schreier", {{"graph", "regular:alt4"}, {"mode", "exact-autos"}}));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["results"]["automorphisms"]["count"], 12);
  EXPECT_EQ(r.report["results"]["automorphisms"]["pairwise_distance"], "1");
  EXPECT_EQ(r.plot_csv, "numerator,denominator,count\n1,1,66\n");
}

TEST(Cli, VerifyZ6Felgner) {
  const auto r = run_command(config("verify", {{"corpus", {"z6"}}, {"sentences", {"felgner"}}}));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["results"]["rows"][0]["nonabelian_simple"], false);
}

TEST(Cli, VerifyDefaultCorpusPasses) {
  const auto r = run_command(config("verify", Json::object()));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["results"]["rows"].size(), 24u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_command(config("verify", {{"corpus", {"nosuch7"}}})).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("primes", {{"q", {8}}})).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("rigidity", {{"group", "sym3"}, {"check", "bogus"}})).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("stability", {{"group", "z2"}})).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("frobnicate", Json::object())).exit_code, kExitUsage);
}

TEST(Cli, StabilitySweepAndFile) {
  const auto sweep = run_command(config("stability", {{"group", "z2"}, {"degree", 4}}));
  EXPECT_EQ(sweep.exit_code, kExitPass);
  EXPECT_EQ(sweep.report["results"]["maps"], 24);
  EXPECT_EQ(sweep.report["results"]["homs"], 10);

  const std::string path = testing::TempDir() + "z3.hom";
  std::ofstream(path) << "group: z3\ndegree: 3\n0 -> ()\n1 -> (1 2 3)\n2 -> (1 2)\n";
  const auto file = run_command(config("stability", {{"input", path}}));
  EXPECT_EQ(file.exit_code, kExitPass);
  EXPECT_EQ(file.report["results"]["defect"]["value"], "1");
  EXPECT_EQ(file.report["results"]["nearest"]["distance"], "2/3");
  std::remove(path.c_str());
}

TEST(Cli, ReportsAreDeterministic) {
  const auto params = Json{{"graph", "regular:z6"}, {"mode", "local-search"}};
  auto c = config("schreier", params);
  c.seed = 7;
  EXPECT_EQ(render(run_command(c).report), render(run_command(c).report));
  c.timings = true;
  EXPECT_TRUE(run_command(c).report.contains("wall_seconds"));
}

TEST(Cli, YamlConfig) {
  const auto j = yaml_to_json("q: [7, 11]\ngamma: 1\ngroup: {kind: alt, n: 5}\nwindow: \"1/2\"\n");
  EXPECT_EQ(j["q"], Json::array({7, 11}));
  EXPECT_EQ(j["gamma"], 1);
  EXPECT_EQ(j["group"]["kind"], "alt");
  EXPECT_EQ(j["window"], "1/2");
  EXPECT_THROW(yaml_to_json("a: [1, 2"), soficlab::ParseError);
}
