// Copyright 2026 The GIC Region Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gic/scenario.h"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

namespace gic {
namespace {

ErrorCode CodeOf(std::string_view text) {
  try {
    ParseScenario(text);
  } catch (const GicError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(ScenarioTest, DefaultsAreTheSymmetricScenario) {
  const Scenario sc = ParseScenario("{}");
  EXPECT_EQ(sc.params.a, 0.25);
  EXPECT_EQ(sc.params.p2, 2.0);
  EXPECT_EQ(sc.mu_grid.size(), 33u);
  EXPECT_EQ(sc.deltas.size(), 4u);
  EXPECT_EQ(sc.optimizer.outer_grid, 64);
  EXPECT_EQ(sc.band, PublicBand::kInterleaved);
  EXPECT_EQ(sc.seed, 1u);
  EXPECT_FALSE(sc.plot);
  const PowerSplit ps = sc.LayerSplit();
  EXPECT_EQ(ps.pv1, 1.0);
  EXPECT_EQ(ps.pu2, 1.0);
}

TEST(ScenarioTest, ParsesEveryField) {
  const Scenario sc = ParseScenario(R"({
    "channel": {"a": 0.3, "b": 0.6, "p1": 3, "p2": 1.5, "sigma2": 2},
    "mu_grid": [0.5, 1, 2],
    "optimizer": {"all_private_grid": 128, "outer_grid": 32,
                  "refine_rounds": 4},
    "layers": {"deltas": [0.2, 0.1],
               "split": {"pu1": 1, "pv1": 2, "pu2": 0.5, "pv2": 1},
               "band": "stacked"},
    "validate": {"instances": 7},
    "seed": 99,
    "out_dir": "elsewhere",
    "plot": true
  })");
  EXPECT_EQ(sc.params.b, 0.6);
  EXPECT_EQ(sc.params.sigma2, 2.0);
  EXPECT_EQ(sc.mu_grid, (std::vector<double>{0.5, 1.0, 2.0}));
  EXPECT_EQ(sc.optimizer.all_private_grid, 128);
  EXPECT_EQ(sc.optimizer.refine_rounds, 4);
  EXPECT_EQ(sc.deltas, (std::vector<double>{0.2, 0.1}));
  EXPECT_EQ(sc.LayerSplit().pv1, 2.0);
  EXPECT_EQ(sc.band, PublicBand::kStacked);
  EXPECT_EQ(sc.validate_instances, 7);
  EXPECT_EQ(sc.seed, 99u);
  EXPECT_EQ(sc.out_dir, "elsewhere");
  EXPECT_TRUE(sc.plot);
}

TEST(ScenarioTest, RejectsBadDocuments) {
  EXPECT_EQ(CodeOf("not json"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf("[1, 2]"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"mu_grid": [1, 0.5]})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"mu_grid": []})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"channel": {"a": "x"}})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"optimizer": {"outer_grid": 0}})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"layers": {"band": "diagonal"}})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"layers": {"split": {"pu1": 1, "pv1": 0.5,
                                             "pu2": 1, "pv2": 1}}})"),
            ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"plot": "yes"})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"seed": -1})"), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf(R"({"channel": {"a": 1.0}})"), ErrorCode::kNonWeakRegime);
}

TEST(ScenarioTest, MissingFile) {
  try {
    LoadScenario("/nonexistent/scenario.json");
    FAIL() << "expected an error";
  } catch (const GicError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
    EXPECT_NE(std::string(e.what()).find("config not found"),
              std::string::npos);
  }
}

TEST(ScenarioTest, LoadsFromDisk) {
  const auto path =
      std::filesystem::temp_directory_path() / "gic_scenario_test.json";
  std::ofstream(path) << R"({"channel": {"a": 0.1, "b": 0.2}})";
  const Scenario sc = LoadScenario(path.string());
  EXPECT_EQ(sc.params.a, 0.1);
  std::filesystem::remove(path);
}

TEST(ParseMuListTest, CommaSeparated) {
  EXPECT_EQ(ParseMuList("0.5,1,2e0"), (std::vector<double>{0.5, 1.0, 2.0}));
  EXPECT_THROW(ParseMuList("1,x"), GicError);
  EXPECT_THROW(ParseMuList("2,1"), GicError);
  EXPECT_THROW(ParseMuList(""), GicError);
  EXPECT_THROW(ParseMuList("1,,2"), GicError);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.5), "0.5");
  EXPECT_EQ(FormatDouble(2.0), "2");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(FormatDouble(x)), x);
}

}  // namespace
}  // namespace gic
