// Copyright 2026 The leakaudit Authors
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

#include "commands.h"

#include <filesystem>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "leakaudit/io/score_file.h"

namespace leakaudit::cli {
namespace {

using ::testing::ElementsAre;

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(CommandsTest, ParseDoubleList) {
  EXPECT_THAT(ParseDoubleList("0, 0.5,1,2").value(), ElementsAre(0.0, 0.5, 1.0, 2.0));
  EXPECT_FALSE(ParseDoubleList("1,x").ok());
  EXPECT_FALSE(ParseDoubleList("").ok());
  EXPECT_FALSE(ParseDoubleList("1,inf").ok());
}

TEST(CommandsTest, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(absl::OkStatus()), 0);
  EXPECT_EQ(ExitCodeFor(absl::InvalidArgumentError("x")), 1);
  EXPECT_EQ(ExitCodeFor(absl::NotFoundError("x")), 1);
  EXPECT_EQ(ExitCodeFor(absl::InternalError("x")), 2);
}

TEST(CommandsTest, BuildWorldPresets) {
  SimulateArgs args;
  EXPECT_EQ(BuildWorld(args).value().p_gen, DefaultWorld().p_gen);
  args.preset = "custom";
  EXPECT_FALSE(BuildWorld(args).ok());
  args.p_data = "0.5,0.5";
  args.p_gen = "0.4,0.6";
  args.separation = 1.5;
  args.audit_size = 300;
  const CategoricalWorld w = BuildWorld(args).value();
  EXPECT_EQ(w.p_gen, (std::vector<double>{0.4, 0.6}));
  EXPECT_EQ(w.loss_separation, 1.5);
  EXPECT_EQ(w.audit_size, 300);
  args.p_gen = "0.4,0.5";
  EXPECT_FALSE(BuildWorld(args).ok());
  args.preset = "nope";
  EXPECT_FALSE(BuildWorld(args).ok());
}

TEST(CommandsTest, AuditDocumentEchoesConfig) {
  CategoricalWorld world = DefaultWorld();
  world.loss_separation = 2.0;
  const WorldSample s = MakeWorldSample(world, 5).value();
  AuditArgs args;
  args.baseline_path = TempPath("cmd_base.jsonl");
  args.mia_path = TempPath("cmd_mia.csv");
  ASSERT_TRUE(WriteScores(args.baseline_path, s.baseline_records).ok());
  ASSERT_TRUE(WriteScores(args.mia_path, s.mia_records, ScoreFormat::kCsv).ok());
  args.config.gamma = 1e-4;
  args.plot_dir = TempPath("cmd_plots");
  const ResultDocument doc = RunAudit(args).value();
  EXPECT_EQ(doc.kind, "audit");
  EXPECT_EQ(doc.config["gamma"], 1e-4);
  EXPECT_EQ(doc.config["mia_file"], args.mia_path);
  const AuditResult direct =
      Measure(s.baseline_records, s.mia_records, args.config).value();
  EXPECT_EQ(doc.payload.get<AuditResult>(), direct);
  EXPECT_TRUE(std::filesystem::exists(*args.plot_dir + "/precision_recall.svg"));
  EXPECT_TRUE(std::filesystem::exists(*args.plot_dir + "/bound_vs_recall.svg"));
}

TEST(CommandsTest, O1Document) {
  CategoricalWorld world = DefaultWorld();
  world.loss_separation = 3.0;
  const WorldSample s = MakeWorldSample(world, 6).value();
  O1Args args;
  args.scores_path = TempPath("cmd_loss.jsonl");
  ASSERT_TRUE(WriteScores(args.scores_path, s.loss_records).ok());
  const ResultDocument doc = RunO1(args).value();
  EXPECT_EQ(doc.kind, "o1");
  EXPECT_EQ(doc.payload.get<O1Result>(), O1Measure(s.loss_records).value());
}

TEST(CommandsTest, SimulateDocument) {
  SimulateArgs args;
  args.trials = 100;
  args.audit_size = 400;
  args.seed = 3;
  args.sweep = "0,2";
  args.sweep_trials = 10;
  const ResultDocument doc = RunSimulate(args).value();
  EXPECT_EQ(doc.kind, "simulate");
  EXPECT_EQ(doc.seed, 3u);
  EXPECT_EQ(doc.payload["validity"]["trials"], 100);
  EXPECT_EQ(doc.payload["sweep"].size(), 2u);
}

TEST(CommandsTest, ValidateBoundsPasses) {
  ValidateArgs args;
  args.trials = 100;
  args.seed = 1;
  ResultDocument doc;
  ASSERT_TRUE(RunValidateBounds(args, doc).ok());
  EXPECT_EQ(doc.kind, "validate-bounds");
}

}  // namespace
}  // namespace leakaudit::cli
