/*
 * Copyright 2026 The edgeood Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "edge/cli/commands.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "edge/cli/manifest.h"
#include "edge/core/config_reader.h"
#include "edge/core/csv.h"
#include "edge/core/dataset.h"
#include "edge/experiment/pipeline.h"
#include "edge/metrics/detection.h"
#include "edge/model/checkpoint.h"
#include "edge/model/trainer.h"
#include "edge/scoring/scoring.h"
#include "edge/synth/synth.h"
#include "table3_fixture.h"
#include "test_util.h"

namespace edge::cli {
namespace {

using testing::HasSubstr;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json Error() const { return nlohmann::json::parse(err); }
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

synth::SynthSpec TinySpec() {
  synth::SynthSpec s;
  s.num_classes = 4;
  s.dim = 5;
  s.n_train = 160;
  s.n_test = 80;
  s.n_oe = 70;
  s.n_ood = 60;
  s.seed = 3;
  return s;
}

model::EdgeConfig TinyConfig() {
  model::EdgeConfig c;
  c.epochs = 3;
  c.transform_epoch = 1;
  c.batch_size = 32;
  c.k = 4;
  c.hidden_dim = 6;
  return c;
}

class CliTest : public testing::Test {
 protected:
  CliTest() : dir_("cli") {
    WriteJsonFile(dir_ / "spec.json", synth::ToJson(TinySpec()));
    WriteJsonFile(dir_ / "cfg.json", model::ToJson(TinyConfig()));
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void Synth() {
    const Result r = Invoke({"synth", "--config", Path("spec.json"), "--out", Path("data")});
    ASSERT_EQ(r.code, 0) << r.err;
  }

  test::TempDir dir_;
};

TEST_F(CliTest, SynthWritesDatasetsAndManifest) {
  Synth();
  for (const char* name : {"id_train", "id_test", "oe", "ood"}) {
    EXPECT_TRUE(std::filesystem::exists(dir_ / "data" / name / "features.csv")) << name;
  }
  const MultiLabelDataset train = ReadDataset(dir_ / "data" / "id_train");
  EXPECT_EQ(train, synth::Generate(TinySpec()).train);
  const nlohmann::json m = ReadJsonFile(dir_ / "data" / "manifest.json");
  EXPECT_EQ(m["command"], "synth");
  EXPECT_EQ(m["seed"], 3);
  EXPECT_EQ(m["config"], synth::ToJson(TinySpec()));
  EXPECT_EQ(m["tool_version"], kToolVersion);
  EXPECT_TRUE(m["wall_clock_seconds"].is_number());
  for (const auto& f : m["outputs"]) {
    EXPECT_TRUE(std::filesystem::exists(dir_ / "data" / f.get<std::string>())) << f;
  }
}

TEST_F(CliTest, SynthIsByteIdenticalOnRerun) {
  Synth();
  ASSERT_EQ(Invoke({"synth", "--config", Path("spec.json"), "--out", Path("again")}).code, 0);
  for (const char* f : {"id_train/features.csv", "id_train/labels.csv", "oe/features.csv",
                        "ood/meta.json", "spec.json"}) {
    EXPECT_EQ(test::ReadFileBytes(dir_ / "data" / f), test::ReadFileBytes(dir_ / "again" / f))
        << f;
  }
  ASSERT_EQ(Invoke({"synth", "--config", Path("spec.json"), "--seed", "4", "--out",
                 Path("other")}).code, 0);
  EXPECT_NE(test::ReadFileBytes(dir_ / "data/id_train/features.csv"),
            test::ReadFileBytes(dir_ / "other/id_train/features.csv"));
}

TEST_F(CliTest, SynthMissingFieldIsANamedConfigError) {
  nlohmann::json spec = synth::ToJson(TinySpec());
  spec.erase("noise_sigma");
  WriteJsonFile(dir_ / "bad.json", spec);
  const Result r = Invoke({"synth", "--config", Path("bad.json"), "--out", Path("x")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.Error()["error"]["kind"], "config");
  EXPECT_THAT(r.Error()["error"]["message"].get<std::string>(), HasSubstr("noise_sigma"));
  EXPECT_THAT(r.Error()["error"]["message"].get<std::string>(), HasSubstr("bad.json"));
}

TEST_F(CliTest, TrainIsDeterministicAndMatchesLibrary) {
  Synth();
  const std::vector<std::string> args = {"train", "--config", Path("cfg.json"), "--id",
                                         Path("data/id_train"), "--oe", Path("data/oe")};
  auto with_out = [&](const std::string& out) {
    std::vector<std::string> a = args;
    a.push_back("--out");
    a.push_back(Path(out));
    return a;
  };
  ASSERT_EQ(Invoke(with_out("t1")).code, 0);
  ASSERT_EQ(Invoke(with_out("t2")).code, 0);
  EXPECT_EQ(test::ReadFileBytes(dir_ / "t1/checkpoint.json"),
            test::ReadFileBytes(dir_ / "t2/checkpoint.json"));
  EXPECT_EQ(test::ReadFileBytes(dir_ / "t1/history.csv"),
            test::ReadFileBytes(dir_ / "t2/history.csv"));
  const model::Checkpoint c = model::LoadCheckpoint(dir_ / "t1/checkpoint.json");
  const synth::SynthData data = synth::Generate(TinySpec());
  EXPECT_EQ(c.model, model::TrainEdge(data.train, data.oe, TinyConfig()).model);
  EXPECT_EQ(c.config, TinyConfig());
}

TEST_F(CliTest, TrainZeroWeightsEqualsBceRun) {
  Synth();
  model::EdgeConfig zero = TinyConfig();
  zero.alpha = 0.0;
  zero.beta = 0.0;
  WriteJsonFile(dir_ / "zero.json", model::ToJson(zero));
  ASSERT_EQ(Invoke({"train", "--config", Path("zero.json"), "--id", Path("data/id_train"),
                 "--oe", Path("data/oe"), "--out", Path("edge")}).code, 0);
  ASSERT_EQ(Invoke({"train", "--config", Path("zero.json"), "--id", Path("data/id_train"),
                 "--out", Path("bce")}).code, 0);
  EXPECT_EQ(model::LoadCheckpoint(dir_ / "edge/checkpoint.json").model,
            model::LoadCheckpoint(dir_ / "bce/checkpoint.json").model);
  const Result bad = Invoke({"train", "--config", Path("cfg.json"), "--id",
                          Path("data/id_train"), "--out", Path("bad")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.Error()["error"]["kind"], "parameter");
}

TEST_F(CliTest, TrainWithTransformAtLastEpochNeverUsesGap) {
  Synth();
  model::EdgeConfig c = TinyConfig();
  c.transform_epoch = c.epochs;
  WriteJsonFile(dir_ / "late.json", model::ToJson(c));
  ASSERT_EQ(Invoke({"train", "--config", Path("late.json"), "--id", Path("data/id_train"),
                 "--oe", Path("data/oe"), "--out", Path("late")}).code, 0);
  const CsvTable h = ReadCsv(dir_ / "late/history.csv");
  ASSERT_EQ(h.rows.size(), c.epochs);
  for (const auto& row : h.rows) {
    EXPECT_EQ(ParseDouble(row[6]), 0.0);
    EXPECT_NEAR(ParseDouble(row[5]), ParseDouble(row[2]) + c.alpha * ParseDouble(row[3]), 1e-12);
  }
}

TEST_F(CliTest, ScoreExportsEveryKind) {
  Synth();
  ASSERT_EQ(Invoke({"train", "--config", Path("cfg.json"), "--id", Path("data/id_train"),
                 "--oe", Path("data/oe"), "--out", Path("t")}).code, 0);
  const Result r = Invoke({"score", "--checkpoint", Path("t/checkpoint.json"), "--dataset",
                        Path("data/id_test"), "--bins", "7", "--out", Path("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto joint = scoring::ReadScoresCsv(dir_ / "s/scores_JointEnergy.csv").values;
  const auto max = scoring::ReadScoresCsv(dir_ / "s/scores_MaxEnergy.csv").values;
  ASSERT_EQ(joint.size(), 80);
  for (std::size_t i = 0; i < joint.size(); ++i) EXPECT_GE(joint[i], max[i]);
  EXPECT_EQ(ReadCsv(dir_ / "s/histogram_MSP.csv").rows.size(), 7);

  const model::Checkpoint c = model::LoadCheckpoint(dir_ / "t/checkpoint.json");
  const MultiLabelDataset test = ReadDataset(dir_ / "data/id_test");
  EXPECT_EQ(joint, experiment::ScoreRows(c.model, test, scoring::ScoreKind::kJointEnergy));

  const Result one = Invoke({"score", "--checkpoint", Path("t/checkpoint.json"), "--dataset",
                          Path("data/id_test"), "--scores", "MaxLogit", "--out", Path("one")});
  ASSERT_EQ(one.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "one/scores_MaxLogit.csv"));
  EXPECT_FALSE(std::filesystem::exists(dir_ / "one/scores_MSP.csv"));
  const Result bad = Invoke({"score", "--checkpoint", Path("t/checkpoint.json"), "--dataset",
                          Path("data/id_test"), "--scores", "Energy", "--out", Path("bad")});
  EXPECT_EQ(bad.Error()["error"]["kind"], "parameter");
}

TEST_F(CliTest, ScoreOfZeroModelIsConstant) {
  Synth();
  model::SaveCheckpoint(dir_ / "zero.json", {model::MlpModel(5, 3, 4), std::nullopt});
  ASSERT_EQ(Invoke({"score", "--checkpoint", Path("zero.json"), "--dataset", Path("data/ood"),
                 "--scores", "JointEnergy", "--out", Path("s")}).code, 0);
  for (const double v : scoring::ReadScoresCsv(dir_ / "s/scores_JointEnergy.csv").values) {
    EXPECT_NEAR(v, 4.0 * std::log(2.0), 1e-15);
  }
}

TEST_F(CliTest, EvalMatchesMetricsAndTailCurve) {
  scoring::WriteScoresCsv(dir_ / "id.csv", {{5, 6, 7, 8}, scoring::ScoreKind::kJointEnergy, ""});
  scoring::WriteScoresCsv(dir_ / "ood.csv", {{1, 2, 3}, scoring::ScoreKind::kJointEnergy, ""});
  WriteLabelCsv(dir_ / "labels.csv", LabelMatrix::FromRows({{1, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const Result r = Invoke({"eval", "--id-scores", Path("id.csv"), "--ood-scores", Path("ood.csv"),
                        "--labels", Path("labels.csv"), "--steps", "2", "--out", Path("e")});
  ASSERT_EQ(r.code, 0) << r.err;
  const nlohmann::json report = ReadJsonFile(dir_ / "e/report.json");
  EXPECT_EQ(report["auroc"], 1.0);
  EXPECT_EQ(report["fpr95"], 0.0);
  EXPECT_EQ(report["tail_curve"][0]["auroc"], report["auroc"]);
  EXPECT_EQ(report["tail_curve"][0]["fpr95"], report["fpr95"]);
  // Class 0 is the head class; removing it leaves only the third sample.
  EXPECT_EQ(report["tail_curve"][1]["remaining_id_samples"], 1);
  EXPECT_EQ(ReadCsv(dir_ / "e/tail_curve.csv").rows.size(), 2);
  const nlohmann::json m = ReadJsonFile(dir_ / "e/manifest.json");
  EXPECT_EQ(m["config"]["class_counts_from"], "test_labels");

  const std::vector<double> id = {0.5, 2, 2, 9}, ood = {2, 3, 0};
  scoring::WriteScoresCsv(dir_ / "id2.csv", {id, scoring::ScoreKind::kMsp, ""});
  scoring::WriteScoresCsv(dir_ / "ood2.csv", {ood, scoring::ScoreKind::kMsp, ""});
  ASSERT_EQ(Invoke({"eval", "--id-scores", Path("id2.csv"), "--ood-scores", Path("ood2.csv"),
                 "--kind", "MSP", "--tpr", "0.5", "--out", Path("e2")}).code, 0);
  const nlohmann::json r2 = ReadJsonFile(dir_ / "e2/report.json");
  EXPECT_EQ(r2["auroc"], metrics::Auroc(id, ood));
  EXPECT_EQ(r2["fpr95"], metrics::FprAtTpr(id, ood, 0.5));
  EXPECT_EQ(r2["aupr"], metrics::Aupr(id, ood));
  EXPECT_FALSE(r2.contains("tail_curve"));
}

TEST_F(CliTest, SelectOeFromPublishedDistances) {
  nlohmann::json d = nlohmann::json::object();
  for (const auto& c : test::PascalDistances()) d[c.name] = c.mean;
  WriteJsonFile(dir_ / "d.json", d);
  const Result r = Invoke({"select-oe", "--distances", Path("d.json"), "--out", Path("sel")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadJsonFile(dir_ / "sel/dilation.json")["selected"], test::kPascalExpectedOe);
}

TEST_F(CliTest, SelectOeSelfCandidateWins) {
  Synth();
  const Result r = Invoke({"select-oe", "--id", Path("data/id_train"), "--candidates",
                        Path("data/oe") + "," + Path("data/id_train"), "--batch-size", "32",
                        "--batches", "3", "--out", Path("sel")});
  ASSERT_EQ(r.code, 0) << r.err;
  const nlohmann::json j = ReadJsonFile(dir_ / "sel/dilation.json");
  EXPECT_EQ(j["selected"], "id_train");
  EXPECT_EQ(j["reports"][1]["mean_distance"], 0.0);
  EXPECT_GT(j["reports"][0]["mean_distance"].get<double>(), 0.0);
  EXPECT_EQ(j["reports"][0]["distances"].size(), 3);
  const Result both = Invoke({"select-oe", "--out", Path("x")});
  EXPECT_EQ(both.Error()["error"]["kind"], "parameter");
}

TEST_F(CliTest, SweepCellsAndSummary) {
  Synth();
  WriteJsonFile(dir_ / "grid.json", {{"alpha", {0.0, 0.5}}, {"beta", {0.01}}});
  const Result r = Invoke({"sweep", "--config", Path("cfg.json"), "--grid", Path("grid.json"),
                        "--id", Path("data/id_train"), "--oe", Path("data/oe"), "--test",
                        Path("data/id_test"), "--ood", Path("data/ood"), "--out", Path("sw")});
  ASSERT_EQ(r.code, 0) << r.err;
  const CsvTable summary = ReadCsv(dir_ / "sw/summary.csv");
  EXPECT_THAT(summary.header, testing::ElementsAre("cell", "alpha", "beta", "validation_auroc",
                                                   "fpr95", "auroc", "aupr", "map"));
  ASSERT_EQ(summary.rows.size(), 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const nlohmann::json cell =
        ReadJsonFile(dir_ / "sw" / summary.rows[i][0] / "report.json");
    EXPECT_EQ(ParseDouble(summary.rows[i][1]), cell["config"]["alpha"].get<double>());
    EXPECT_EQ(ParseDouble(summary.rows[i][3]), cell["validation_auroc"].get<double>());
    EXPECT_EQ(ParseDouble(summary.rows[i][5]), cell["test"]["auroc"].get<double>());
    // Cells differ only in the swept keys.
    nlohmann::json expected = model::ToJson(TinyConfig());
    expected["alpha"] = i == 0 ? 0.0 : 0.5;
    expected["beta"] = 0.01;
    EXPECT_EQ(cell["config"], expected);
  }
  const nlohmann::json best = ReadJsonFile(dir_ / "sw/best.json");
  EXPECT_TRUE(best["cell"] == "cell_000" || best["cell"] == "cell_001");
}

TEST_F(CliTest, SweepOneCellEqualsSingleTraining) {
  Synth();
  WriteJsonFile(dir_ / "grid.json", {{"alpha", {0.1}}});
  ASSERT_EQ(Invoke({"sweep", "--config", Path("cfg.json"), "--grid", Path("grid.json"), "--id",
                 Path("data/id_train"), "--oe", Path("data/oe"), "--out", Path("sw")}).code,
            0);
  const synth::SynthData data = synth::Generate(TinySpec());
  const experiment::ValidationSplit split =
      experiment::SplitForValidation(data.train, data.oe, 0.2, TinyConfig().seed);
  EXPECT_EQ(model::LoadCheckpoint(dir_ / "sw/cell_000/checkpoint.json").model,
            model::TrainEdge(split.id_fit, split.oe_fit, TinyConfig()).model);
}

TEST_F(CliTest, UsageAndIoErrors) {
  Result r = Invoke({"bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.Error()["error"]["kind"], "usage");
  r = Invoke({"train", "--out", Path("x")});
  EXPECT_EQ(r.code, 2);
  r = Invoke({"train", "--id", Path("missing"), "--out", Path("x")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.Error()["error"]["kind"], "io");
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({"--version"}).out, std::string(kToolVersion) + "\n");
}

}  // namespace
}  // namespace edge::cli
