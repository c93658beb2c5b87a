#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ezeta/expsum_io.hpp"
#include "ezeta_cli/cli.hpp"
#include "ezeta_cli/run_config.hpp"

using namespace ezeta::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliEval, DirectAndThetaAgree) {
  const CliRun r = run_cli({"eval", "--form", "1,0,1", "--s", "2,0", "--method", "direct,theta"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "method,re,im,err_estimate,X");
  double re[2], err[2];
  for (int i = 0; i < 2; ++i) {
    std::istringstream in(rows[static_cast<std::size_t>(i) + 1]);
    std::string method, f;
    std::getline(in, method, ',');
    std::getline(in, f, ',');
    re[i] = std::stod(f);
    std::getline(in, f, ',');
    std::getline(in, f, ',');
    err[i] = std::stod(f);
  }
  EXPECT_LE(std::abs(re[0] - re[1]), err[0] + err[1]);
}

TEST(CliEval, IndefiniteFormExitsOne) {
  const CliRun r = run_cli({"eval", "--form", "1,0,-1", "--s", "2,0"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.err.find("NotPositiveDefinite"), std::string::npos);
}

TEST(CliEval, ApproxAutoCutoff) {
  const CliRun r = run_cli({"eval", "--form", "1,0,1", "--s", "0.5,20", "--method", "approx", "--X", "auto"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find(",8000\n"), std::string::npos);
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(run_cli({"eval", "--form", "1,0", "--s", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"eval", "--form", "1,0,1", "--s", "2", "--method", "magic"}).code, kUsageError);
  EXPECT_EQ(run_cli({"eval", "--s", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
}

TEST(CliZeros, FourZerosUpToFifteen) {
  const CliRun r = run_cli({"zeros", "--form", "1,0,1", "--from", "5", "--to", "15", "--step", "0.01"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "gamma,t_lo,t_hi,w_residual");
}

TEST(CliZeros, ReversedRangeIsUsageError) {
  EXPECT_EQ(run_cli({"zeros", "--from", "9", "--to", "5"}).code, kUsageError);
}

TEST(CliZeros, GapLawTable) {
  const CliRun r = run_cli({"zeros", "--from", "10", "--to", "60", "--gaps", "--laws", "0.5:1,0.4286:1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto pos = r.out.find("law,exponent,constant,log_power");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NE(r.out.find("\n0.5:1,0.5,1,0,", pos), std::string::npos);
  EXPECT_NE(r.out.find("\n0.4286:1,0.4286", pos), std::string::npos);
  EXPECT_EQ(run_cli({"zeros", "--from", "10", "--to", "20", "--gaps", "--laws", "0.5"}).code, kUsageError);
}

TEST(CliExpsum, ScenarioFileReport) {
  const auto path = temp_file("ezeta_s1.json", ezeta::scenario_to_json(ezeta::desk_scenario(0)));
  const CliRun r = run_cli({"expsum", "--scenario", path.string(), "--m-max", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["reorder_identity"]["equal"].get<bool>());
  EXPECT_EQ(doc["reorder_identity"]["per_m"].size(), 3u);
  EXPECT_EQ(doc["reorder_identity"]["per_m"][0]["tolerance"].get<double>(), 1e-10);
  for (const auto& w : doc["asymptotic_windows"]) EXPECT_EQ(w["constant"].get<double>(), 50.0);
  EXPECT_TRUE(doc.contains("bound_report"));
  EXPECT_TRUE(doc.contains("weyl_step"));
}

TEST(CliExpsum, CoprimalityViolationExitsOne) {
  std::string text = ezeta::scenario_to_json(ezeta::desk_scenario(2));
  auto doc = nlohmann::json::parse(text);
  doc["h"] = 2;
  doc["k"] = 4;
  doc.erase("r");
  const auto path = temp_file("ezeta_bad.json", doc.dump());
  const CliRun r = run_cli({"expsum", "--scenario", path.string()});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.err.find("coprimality"), std::string::npos);
}

TEST(CliExpsum, LemmaSuite) {
  const CliRun r = run_cli({"expsum", "--suite", "lemmas", "--trials", "1000", "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["weyl"]["violations_lambda1"].get<int>(), 0);
  EXPECT_EQ(doc["seed"].get<int>(), 7);
  EXPECT_TRUE(doc["b_process"]["pass"].get<bool>());
  EXPECT_TRUE(doc["van_der_corput"]["pass"].get<bool>());
}

TEST(CliExpsum, DeterministicOutput) {
  const std::vector<std::string> args = {"expsum", "--desk", "2", "--m-max", "2"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const std::vector<std::string> suite = {"expsum", "--suite", "lemmas", "--trials", "200", "--seed", "3"};
  EXPECT_EQ(run_cli(suite).out, run_cli(suite).out);
  const CliRun csv = run_cli({"expsum", "--desk", "0", "--csv"});
  EXPECT_EQ(lines(csv.out).size(), 2u);
}

TEST(CliExpsum, EmitScenarioRoundTrips) {
  const CliRun r = run_cli({"expsum", "--desk", "4", "--emit-scenario"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(ezeta::scenario_from_json(r.out).k, ezeta::desk_scenario(4).k);
  EXPECT_EQ(run_cli({"expsum"}).code, kUsageError);
  EXPECT_EQ(run_cli({"expsum", "--suite", "other"}).code, kUsageError);
}

TEST(CliConfig, FileAndOutputPath) {
  const auto out_path = std::filesystem::temp_directory_path() / "ezeta_out.csv";
  std::filesystem::remove(out_path);
  const auto cfg = temp_file("ezeta_cfg.json", R"({"direct_n_max": 1000, "output": ")" + out_path.string() + "\"}");
  const CliRun r = run_cli({"--config", cfg.string(), "eval", "--form", "1,0,1", "--s", "2", "--method", "direct"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("direct,"), std::string::npos);
}

TEST(CliConfig, EnvironmentVariableAndValidation) {
  const auto bad = temp_file("ezeta_cfg_bad.json", R"({"quad_tol": -1})");
  ::setenv("EZETA_CONFIG", bad.c_str(), 1);
  const CliRun r = run_cli({"eval", "--form", "1,0,1", "--s", "2"});
  ::unsetenv("EZETA_CONFIG");
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("quad_tol"), std::string::npos);
  EXPECT_THROW(RunConfig::from_json(R"({"mystery": 1})"), ConfigError);
  EXPECT_EQ(RunConfig::from_json(R"({"seed": 11})").seed, 11u);
}
