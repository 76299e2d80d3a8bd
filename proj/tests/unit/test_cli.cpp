// Copyright 2026 The qmur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "cli/verify.hpp"
#include "qmur/serialize.hpp"

namespace qmur::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& text) { return parse_run_config(text, "test.json"); }

std::string config_error(const std::string& text) {
  try {
    config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(RunConfigParse, DefaultsToSimulate) {
  const RunConfig cfg = config("{}");
  EXPECT_EQ(cfg.command, "simulate");
  EXPECT_EQ(cfg.scheme, "vienna");
  EXPECT_EQ(cfg.seed, 1U);
}

TEST(RunConfigParse, UnknownKeyIsNamed) {
  const std::string msg = config_error(R"({"command":"verify","sample":10})");
  EXPECT_NE(msg.find("field 'sample'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("unknown key"), std::string::npos) << msg;
}

TEST(RunConfigParse, SyntaxErrorHasLineAndColumn) {
  const std::string msg = config_error("{\n  \"command\": \"verify\",\n  \"samples\": ]\n}");
  EXPECT_EQ(msg.rfind("test.json:3:", 0), 0U) << msg;
}

TEST(RunConfigParse, IllTypedFieldIsNamed) {
  const std::string msg = config_error(R"({"shots":"many"})");
  EXPECT_NE(msg.find("field 'shots'"), std::string::npos) << msg;
  EXPECT_NE(config_error(R"({"shots":-5})").find("shots"), std::string::npos);
  EXPECT_NE(config_error(R"({"format":"xml"})").find("format"), std::string::npos);
  EXPECT_FALSE(config_error("[1,2]").empty());
}

TEST(RunConfigParse, SweepAsStringOrObject) {
  const RunConfig a = config(R"({"command":"experiment","kind":"vienna","sweep":"0:90:15"})");
  const RunConfig b = config(
      R"({"command":"experiment","kind":"vienna","sweep":{"start":0,"stop":90,"step":15}})");
  EXPECT_EQ(a.sweep->values(), b.sweep->values());
  EXPECT_EQ(a.sweep->values().size(), 7U);
}

TEST(SweepRange, InclusiveStopAndErrors) {
  EXPECT_EQ(SweepRange::parse("0:1:0.1").values().size(), 11U);
  EXPECT_EQ(SweepRange::parse("30").values(), std::vector<double>{30.0});
  EXPECT_THROW(SweepRange::parse("0:1:0").values(), ConfigError);
  EXPECT_THROW(SweepRange::parse("1:0:1").values(), ConfigError);
  EXPECT_THROW(SweepRange::parse("0:1"), ConfigError);
  EXPECT_THROW(SweepRange::parse("a:1:1"), ConfigError);
}

TEST(RunConfigValidate, RejectsBadCombinations) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "nope";
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.command = "optimize";
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.a = axes::i;
  cfg.b = BlochVector{0, 2, 0};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.command = "simulate";
  cfg.scheme = "custom";
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Run, ExitCodes) {
  RunConfig ok;
  ok.command = "optimize";
  ok.angle_deg = 90.0;
  EXPECT_EQ(invoke(ok).code, 0);

  RunConfig usage;
  usage.command = "verify";
  usage.suite = "bogus";
  const Outcome u = invoke(usage);
  EXPECT_EQ(u.code, 2);
  EXPECT_NE(u.err.find("suite"), std::string::npos);

  RunConfig io = ok;
  io.output = "/nonexistent-dir/out.json";
  EXPECT_EQ(invoke(io).code, 3);

  EXPECT_THROW(load_run_config("/nonexistent-dir/cfg.json"), IoError);
}

TEST(Verify, TallyCountsViolationsBeyondTolerance) {
  PropertyTally t{"p", 1e-9};
  t.record(0.5, [] { return nlohmann::json(1); });
  t.record(-1e-10, [] { return nlohmann::json(2); });
  t.record(-1e-6, [] { return nlohmann::json(3); });
  t.record(-1e-3, [] { return nlohmann::json(4); });
  EXPECT_EQ(t.checks, 4U);
  EXPECT_EQ(t.violations, 2U);
  EXPECT_EQ(t.first_violation, nlohmann::json(3));
  EXPECT_EQ(t.worst_case, nlohmann::json(4));
  EXPECT_EQ(t.min_margin, -1e-3);
  EXPECT_EQ(t.max_margin, 0.5);
}

TEST(Verify, AllSuitesCleanOnSmallSample) {
  const auto results = run_suites("all", 2000, 7);
  ASSERT_EQ(results.size(), 4U);
  for (const SuiteResult& s : results) {
    EXPECT_EQ(s.violations(), 0U) << s.suite;
    for (const PropertyTally& p : s.properties) EXPECT_GT(p.checks, 0U) << p.name;
  }
}

TEST(Verify, OutputIsByteIdenticalForSameSeed) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.samples = 500;
  cfg.seed = 42;
  const Outcome a = invoke(cfg);
  const Outcome b = invoke(cfg);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  cfg.seed = 43;
  EXPECT_NE(invoke(cfg).out, a.out);
}

TEST(Optimize, OrthogonalTargets) {
  RunConfig cfg;
  cfg.command = "optimize";
  cfg.angle_deg = 90.0;
  const Outcome o = invoke(cfg);
  ASSERT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  const OptimalPair p = j.get<OptimalPair>();
  EXPECT_NEAR(p.achieved, 4 - 2 * std::sqrt(2.0), 1e-12);
  // c = a/sqrt2, d = b/sqrt2 for orthogonal unit targets.
  EXPECT_NEAR(p.c.x, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p.c.y, 0.0, 1e-12);
  EXPECT_NEAR(p.d.x, 0.0, 1e-12);
  EXPECT_NEAR(p.d.y, 1 / std::sqrt(2.0), 1e-12);
}

TEST(Optimize, ExplicitVectorsAndCollinear) {
  RunConfig cfg;
  cfg.command = "optimize";
  cfg.a = axes::k;
  cfg.b = -axes::k;
  const Outcome o = invoke(cfg);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out).at("achieved").get<double>(), 0.0);
}

TEST(Experiment, ViennaCsvColumnsAndValues) {
  RunConfig cfg = config(R"({"command":"experiment","kind":"vienna","sweep":"0:90:45",
                             "format":"csv"})");
  const Outcome o = invoke(cfg);
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("alpha,phi,", 0), 0U) << header;
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Experiment, TorontoJsonRoundTripsRows) {
  RunConfig cfg = config(R"({"command":"experiment","kind":"toronto","sweep":"0:90:5"})");
  const Outcome o = invoke(cfg);
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  const auto rows = j.at("rows").get<std::vector<SweepRow>>();
  ASSERT_EQ(rows.size(), 19U);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].slack, -1e-12);
    if (rows[i].lhs < rows[best].lhs) best = i;
  }
  EXPECT_EQ(rows[best].parameter_deg, 45.0);
  EXPECT_NEAR(rows[best].lhs, 2 * (2 - std::sqrt(2.0)), 1e-12);
}

TEST(Simulate, ViennaReportShape) {
  RunConfig cfg = config(R"({"shots":20000,"resamples":200,"seed":3})");
  const Outcome o = invoke(cfg);
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j.at("comparisons").size(), 2U);
  for (const auto& c : j.at("comparisons")) {
    const auto& s = c.at("analysis").at("states").at(0);
    EXPECT_TRUE(s.at("ci_contains_zero").get<bool>());
    EXPECT_EQ(s.at("analytic").get<double>(), 0.0);
    EXPECT_GT(s.at("eps_no").get<double>(), 0.7);
  }
  EXPECT_EQ(invoke(cfg).out, o.out);
}

TEST(Simulate, CustomSchemeFromFile) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto cfg_path = dir / "qmur_test_cfg.json";
  const auto out_path = dir / "qmur_test_out.json";
  {
    std::ofstream f(cfg_path);
    f << R"({"scheme":"custom","approx":{"e0":1,"e":[0,0,0.6]},"reference":{"e0":1,"e":[0,0,0]},
             "states":[[0,0,1]],"shots":100000,"seed":5,"output":")"
      << out_path.string() << "\"}";
  }
  const Outcome o = invoke(load_run_config(cfg_path.string()));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(out_path);
  const auto j = nlohmann::json::parse(in);
  const auto& s = j.at("comparisons").at(0).at("analysis").at("states").at(0);
  EXPECT_NEAR(s.at("analytic").get<double>(), 1.2, 1e-15);
  EXPECT_TRUE(s.at("ci_contains_analytic").get<bool>());
  std::filesystem::remove(cfg_path);
  std::filesystem::remove(out_path);
}

}  // namespace
}  // namespace qmur::cli
