#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "vir/cli.hpp"

using namespace vir;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vir");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(VIR_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::vector<std::string> verdicts_from_text(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto open = line.find("  ["), close = line.find(']');
    if (open == 0 && close != std::string::npos) out.push_back(line.substr(3, close - 3));
  }
  return out;
}

}  // namespace

TEST(Cli, SingularLatex) {
  const auto r = run_cli({"singular", "--r", "1", "--s", "2", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "L_{-1}^2 - t L_{-2}\n");
}

TEST(Cli, TheoremMainJson) {
  const auto r = run_cli({"theorem-main", "--max-level", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.at("records").size(), 1u);
  EXPECT_EQ(j.at("records")[0], Json::parse(R"({"pair":[1,1],"A":"2","R":"2","status":"pass"})"));
  EXPECT_EQ(j.at("status"), "pass");
}

TEST(Cli, KacDetPasses) {
  const auto r = run_cli({"kac-det", "--level", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("kac-det: PASS", 0), 0u);
  EXPECT_TRUE(kac_det_check(3).pass);
  EXPECT_EQ(verdicts_from_text(r.out), (std::vector<std::string>{"pass", "pass", "pass"}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"kac-det", "--level", "x"}).code, 2);
  EXPECT_EQ(run_cli({"kac-det", "--level", "0"}).code, 2);
  EXPECT_EQ(run_cli({"norm", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_cli({"singular", "--r", "2"}).code, 2);
  EXPECT_EQ(run_cli({"agt-check", "--samples", "0"}).code, 2);
  EXPECT_EQ(run_cli({"kac-det", "--level", "3", "--unknown"}).code, 2);
}

TEST(Cli, TimeBudget) {
  const auto r = run_cli({"kac-det", "--level", "14"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("time budget"), std::string::npos);
  EXPECT_EQ(run_cli({"kac-det", "--level", "4", "--time-budget-secs", "0.0001"}).code, 2);
  EXPECT_EQ(run_cli({"kac-det", "--level", "2", "--time-budget-secs", "5"}).code, 0);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agt-check"), std::string::npos);
}

TEST(Cli, TextAndJsonVerdictsAgree) {
  for (const std::vector<std::string>& args : {std::vector<std::string>{"norm", "--max-level", "3"},
                                              std::vector<std::string>{"agt-check", "--max-level", "2", "--samples", "3"},
                                              std::vector<std::string>{"kac-matrix", "--level", "2"},
                                              std::vector<std::string>{"bosonize", "--r", "1", "--s", "2"}}) {
    auto text_args = args, json_args = args;
    json_args.push_back("--format");
    json_args.push_back("json");
    const auto t = run_cli(text_args), j = run_cli(json_args);
    EXPECT_EQ(t.code, j.code);
    std::vector<std::string> from_json;
    const Json doc = Json::parse(j.out);
    for (const auto& rec : doc.at("records")) from_json.push_back(rec.at("status"));
    EXPECT_EQ(verdicts_from_text(t.out), from_json) << args[0];
  }
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run_cli({"proportionality", "--max-level", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(to_json(report_from_json(j)), j);
}

TEST(Cli, WritesOutFile) {
  const std::string path = ::testing::TempDir() + "vir_cli_out.json";
  const auto r = run_cli({"norm", "--r", "1", "--s", "1", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const Json j = Json::parse(f);
  EXPECT_EQ(j.at("records")[0].at("A"), "2");
}

TEST(Cli, FailuresExitOne) {
  cli::RunConfig cfg;
  cfg.command = "norm";
  cfg.r = 1;
  cfg.s = 1;
  Report rep = cli::execute(cfg);
  EXPECT_TRUE(rep.pass());
  rep.add({{"injected", true}}, Status::Fail);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(to_json(rep).at("status"), "fail");
}

TEST(Cli, EveryCommandRunsSmall) {
  const std::vector<std::vector<std::string>> runs{
      {"kac-matrix", "--level", "3"},        {"kac-det", "--level", "2"},
      {"singular", "--max-level", "3"},      {"norm", "--max-level", "2"},
      {"theorem-main", "--max-level", "3"},  {"jack", "--level", "3"},
      {"jack-checks", "--max-level", "3"},   {"bosonize", "--r", "2", "--s", "1"},
      {"proportionality", "--max-level", "2"}, {"nekrasov", "--level", "2"},
      {"agt-check", "--max-level", "2", "--samples", "2"}, {"recursion-check", "--max-level", "2", "--samples", "2"}};
  for (const auto& args : runs) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << args[0] << "\n" << r.out << r.err;
  }
}

TEST(Cli, DeterministicJson) {
  const std::string args = "agt-check --max-level 3 --samples 4 --seed 42 --format json";
  const std::string a = run_binary(args), b = run_binary(args);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_NE(a, run_binary("agt-check --max-level 3 --samples 4 --seed 43 --format json"));
}

TEST(Cli, BinaryMatchesInProcess) {
  EXPECT_EQ(run_binary("theorem-main --max-level 2 --format json"), run_cli({"theorem-main", "--max-level", "2", "--format", "json"}).out);
}
