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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edge/cli/manifest.h"
#include "edge/core/config_reader.h"
#include "edge/core/csv.h"
#include "edge/core/dataset.h"
#include "edge/core/random.h"
#include "edge/experiment/pipeline.h"
#include "edge/metrics/detection.h"
#include "edge/metrics/tail_curve.h"
#include "edge/model/checkpoint.h"
#include "edge/model/config.h"
#include "edge/model/trainer.h"
#include "edge/oesel/oesel.h"
#include "edge/scoring/scoring.h"
#include "edge/synth/synth.h"

namespace edge::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Fraction of the ID train and OE sets held out for sweep validation.
constexpr double kHoldoutFraction = 0.2;
// Stream for the untrained feature model of select-oe.
constexpr std::uint64_t kFeatureModelStream = 30;

struct Args {
  std::string out;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string id;
  std::string oe;
  std::string dataset;
  std::string checkpoint;
  std::string scores;
  std::size_t bins = 50;
  std::string id_scores;
  std::string ood_scores;
  std::string labels;
  std::string train;
  std::string kind = "JointEnergy";
  double tpr = 0.95;
  std::size_t steps = 10;
  std::vector<std::string> candidates;
  std::string distances;
  std::size_t d1 = 16;
  std::size_t k_svd = 0;
  std::size_t batches = 16;
  std::size_t batch_size = 64;
  std::string grid;
  std::string test;
  std::string ood;
};

// Runs `body`, prefixing any library error with the file it concerns.
template <typename T>
T WithPath(const std::string& path, const std::function<T()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    const std::string message = e.what();
    if (message.find(path) != std::string::npos) throw;
    throw Error(e.kind(), path + ": " + message);
  }
}

MultiLabelDataset LoadDataset(const std::string& dir) {
  return WithPath<MultiLabelDataset>(dir, [&] { return ReadDataset(dir); });
}

json LoadJson(const std::string& path) {
  return WithPath<json>(path, [&] { return ReadJsonFile(path); });
}

model::EdgeConfig LoadEdgeConfig(const Args& a) {
  model::EdgeConfig config;
  if (!a.config.empty()) {
    config = WithPath<model::EdgeConfig>(
        a.config, [&] { return model::EdgeConfigFromJson(LoadJson(a.config)); });
  }
  if (a.seed) config.seed = *a.seed;
  config.Validate();
  return config;
}

void MakeOutputDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// Directory name used as a candidate label; tolerates a trailing slash.
std::string DirLabel(const std::string& dir) {
  fs::path p(dir);
  if (p.filename().empty()) p = p.parent_path();
  return p.filename().string();
}

std::vector<std::string> DatasetFiles(const MultiLabelDataset& ds, const std::string& dir) {
  std::vector<std::string> files = {dir + "/features.csv"};
  if (ds.labeled()) files.push_back(dir + "/labels.csv");
  files.push_back(dir + "/meta.json");
  return files;
}

json RunSynth(const Args& a) {
  const auto start = Clock::now();
  synth::SynthSpec spec;
  if (!a.config.empty()) {
    spec = WithPath<synth::SynthSpec>(
        a.config, [&] { return synth::SynthSpecFromJson(LoadJson(a.config)); });
  }
  if (a.seed) spec.seed = *a.seed;
  spec.Validate();
  const synth::SynthData data = synth::Generate(spec);
  const std::vector<std::string> problems = synth::CheckInvariants(spec, data);
  if (!problems.empty()) {
    std::string message = "generated data failed checks:";
    for (const std::string& p : problems) message += " " + p + ";";
    throw GenerationError(message);
  }

  const fs::path out(a.out);
  MakeOutputDir(out);
  RunManifest manifest{"synth", synth::ToJson(spec), spec.seed, {}, {}, 0.0};
  if (!a.config.empty()) manifest.inputs["spec"] = a.config;
  const json extra = {{"spec", synth::ToJson(spec)}};
  for (const MultiLabelDataset* ds : {&data.train, &data.test, &data.oe, &data.ood}) {
    WriteDataset(*ds, out / ds->name(), spec.seed, extra);
    for (const std::string& f : DatasetFiles(*ds, ds->name())) manifest.outputs.push_back(f);
  }
  WriteJsonFile(out / "spec.json", synth::ToJson(spec));
  manifest.outputs.push_back("spec.json");
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "synth"}, {"out", a.out}};
}

json RunTrain(const Args& a) {
  const auto start = Clock::now();
  const model::EdgeConfig config = LoadEdgeConfig(a);
  const MultiLabelDataset id = LoadDataset(a.id);
  model::TrainResult result;
  RunManifest manifest{"train", model::ToJson(config), config.seed, {{"id", a.id}}, {}, 0.0};
  if (a.oe.empty()) {
    if (config.alpha != 0.0 || config.beta != 0.0) {
      throw ParameterError("alpha and beta must be 0 when no --oe set is given");
    }
    result = model::TrainBce(id, config);
    manifest.config["objective"] = "bce";
  } else {
    const MultiLabelDataset oe = LoadDataset(a.oe);
    result = model::TrainEdge(id, oe, config);
    manifest.inputs["oe"] = a.oe;
    manifest.config["objective"] = "edge";
  }
  if (!a.config.empty()) manifest.inputs["config"] = a.config;

  const fs::path out(a.out);
  MakeOutputDir(out);
  model::SaveCheckpoint(out / "checkpoint.json", {result.model, config});
  model::WriteHistoryCsv(out / "history.csv", result.history);
  manifest.outputs = {"checkpoint.json", "history.csv"};
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "train"},
          {"out", a.out},
          {"final_loss", result.history.epochs.back().total}};
}

json RunScore(const Args& a) {
  const auto start = Clock::now();
  std::vector<scoring::ScoreKind> kinds;
  if (a.scores.empty()) {
    kinds = scoring::AllScoreKinds();
  } else {
    for (const std::string& name : SplitList(a.scores)) {
      kinds.push_back(scoring::ParseScoreKind(name));
    }
  }
  const model::Checkpoint checkpoint = WithPath<model::Checkpoint>(
      a.checkpoint, [&] { return model::LoadCheckpoint(a.checkpoint); });
  const MultiLabelDataset ds = LoadDataset(a.dataset);
  const Matrix logits = model::Forward(checkpoint.model, ds.features()).logits;

  const auto joint = scoring::ScoreDataset(logits, scoring::ScoreKind::kJointEnergy);
  const auto max = scoring::ScoreDataset(logits, scoring::ScoreKind::kMaxEnergy);
  for (std::size_t r = 0; r < joint.values.size(); ++r) {
    if (!(joint.values[r] >= max.values[r])) {
      throw NumericError("row " + std::to_string(r) + ": JointEnergy " +
                         FormatDouble(joint.values[r]) + " below MaxEnergy " +
                         FormatDouble(max.values[r]));
    }
  }

  const fs::path out(a.out);
  MakeOutputDir(out);
  json kind_names = json::array();
  RunManifest manifest{"score", {}, 0, {{"checkpoint", a.checkpoint}, {"dataset", a.dataset}},
                       {}, 0.0};
  for (const scoring::ScoreKind kind : kinds) {
    const std::string name(scoring::ScoreKindName(kind));
    kind_names.push_back(name);
    const scoring::ScoreVector s = scoring::ScoreDataset(logits, kind, ds.name());
    WriteScoresCsv(out / ("scores_" + name + ".csv"), s);
    manifest.outputs.push_back("scores_" + name + ".csv");
    if (!s.values.empty()) {
      WriteHistogramCsv(out / ("histogram_" + name + ".csv"),
                        scoring::ScoreHistogram(s.values, a.bins));
      manifest.outputs.push_back("histogram_" + name + ".csv");
    }
  }
  manifest.config = {{"scores", kind_names}, {"bins", a.bins}};
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "score"}, {"out", a.out}, {"rows", ds.size()}};
}

json RunEval(const Args& a) {
  const auto start = Clock::now();
  const scoring::ScoreKind kind = scoring::ParseScoreKind(a.kind);
  const auto id = WithPath<scoring::ScoreVector>(
      a.id_scores, [&] { return scoring::ReadScoresCsv(a.id_scores); });
  const auto ood = WithPath<scoring::ScoreVector>(
      a.ood_scores, [&] { return scoring::ReadScoresCsv(a.ood_scores); });
  const metrics::DetectionReport report =
      metrics::EvaluateDetection(id.values, ood.values, kind, a.tpr);
  json j = metrics::ToJson(report);
  RunManifest manifest{"eval",
                       {{"kind", a.kind}, {"tpr", a.tpr}, {"steps", a.steps}},
                       0,
                       {{"id_scores", a.id_scores}, {"ood_scores", a.ood_scores}},
                       {"report.json"},
                       0.0};

  const fs::path out(a.out);
  std::optional<metrics::TailCurve> tail;
  if (!a.labels.empty()) {
    const std::string labels_path =
        fs::is_directory(a.labels) ? (fs::path(a.labels) / "labels.csv").string() : a.labels;
    const LabelMatrix labels =
        WithPath<LabelMatrix>(labels_path, [&] { return ReadLabelCsv(labels_path); });
    std::vector<std::int64_t> counts;
    if (a.train.empty()) {
      counts = labels.ColumnSums();
      manifest.config["class_counts_from"] = "test_labels";
    } else {
      counts = LoadDataset(a.train).RequireLabels().ColumnSums();
      manifest.config["class_counts_from"] = "train";
      manifest.inputs["train"] = a.train;
    }
    tail = metrics::ComputeTailCurve(counts, labels, id.values, ood.values, a.steps, a.tpr);
    j["tail_curve"] = metrics::ToJson(*tail)["points"];
    manifest.inputs["labels"] = labels_path;
    manifest.outputs.push_back("tail_curve.csv");
  } else if (!a.train.empty()) {
    throw ParameterError("--train only applies together with --labels");
  }

  MakeOutputDir(out);
  WriteJsonFile(out / "report.json", j);
  if (tail) metrics::WriteTailCurveCsv(out / "tail_curve.csv", *tail);
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "eval"},
          {"out", a.out},
          {"fpr95", report.fpr95},
          {"auroc", report.auroc},
          {"aupr", report.aupr}};
}

std::vector<oesel::CandidateDistance> ParseDistances(const json& j) {
  std::vector<oesel::CandidateDistance> out;
  if (!j.is_object()) throw ConfigError("distances: expected an object of name -> distance");
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number()) {
      throw ConfigError("distances: value for '" + name + "' is not a number");
    }
    out.push_back({name, value.get<double>()});
  }
  return out;
}

json RunSelectOe(const Args& a) {
  const auto start = Clock::now();
  if (a.distances.empty() == a.candidates.empty()) {
    throw ParameterError("give exactly one of --candidates or --distances");
  }
  const fs::path out(a.out);
  RunManifest manifest{"select-oe", {}, a.seed.value_or(0), {}, {"dilation.json"}, 0.0};
  json report;
  if (!a.distances.empty()) {
    const auto candidates = WithPath<std::vector<oesel::CandidateDistance>>(
        a.distances, [&] { return ParseDistances(LoadJson(a.distances)); });
    json list = json::array();
    for (const auto& c : candidates) list.push_back({{"candidate", c.name}, {"mean_distance", c.mean}});
    report = {{"candidates", list}, {"selected", oesel::SelectOe(candidates)}};
    manifest.config = {{"mode", "precomputed"}};
    manifest.inputs["distances"] = a.distances;
  } else {
    const MultiLabelDataset id = LoadDataset(a.id);
    model::MlpModel feature_model;
    oesel::DilationOptions options;
    options.batch_size = a.batch_size;
    options.num_batches = a.batches;
    options.k_svd = a.k_svd;
    options.seed = a.seed.value_or(0);
    if (!a.checkpoint.empty()) {
      feature_model = WithPath<model::Checkpoint>(
          a.checkpoint, [&] { return model::LoadCheckpoint(a.checkpoint); }).model;
      options.feature_model = "checkpoint";
      manifest.inputs["checkpoint"] = a.checkpoint;
    } else {
      if (a.d1 == 0) throw ParameterError("--d1 must be >= 1");
      Rng rng(DeriveSeed(options.seed, kFeatureModelStream));
      const std::size_t classes = id.labeled() ? id.labels()->cols() : 1;
      feature_model = model::MlpModel::Initialize(id.dim(), a.d1, classes, rng);
      options.feature_model = "untrained";
    }
    manifest.inputs["id"] = a.id;
    std::vector<oesel::DilationReport> reports;
    json list = json::array();
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      const MultiLabelDataset loaded = LoadDataset(a.candidates[i]);
      const MultiLabelDataset candidate(DirLabel(a.candidates[i]), loaded.features());
      reports.push_back(oesel::MeanDilation(id, candidate, feature_model, options));
      list.push_back(oesel::ToJson(reports.back()));
      manifest.inputs["candidate_" + std::to_string(i)] = a.candidates[i];
    }
    report = {{"reports", list}, {"selected", oesel::SelectOe(reports)}};
    manifest.config = {{"mode", "features"},
                       {"k_svd", a.k_svd},
                       {"batch_size", a.batch_size},
                       {"num_batches", a.batches},
                       {"d1", a.checkpoint.empty() ? a.d1 : feature_model.hidden_dim()},
                       {"feature_model", options.feature_model}};
  }
  MakeOutputDir(out);
  WriteJsonFile(out / "dilation.json", report);
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "select-oe"}, {"out", a.out}, {"selected", report["selected"]}};
}

std::string CellName(std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return "cell_" + digits;
}

json RunSweep(const Args& a) {
  const auto start = Clock::now();
  const model::EdgeConfig base = LoadEdgeConfig(a);
  const json grid_json = LoadJson(a.grid);
  const std::vector<experiment::GridAxis> axes = WithPath<std::vector<experiment::GridAxis>>(
      a.grid, [&] { return experiment::GridFromJson(grid_json); });
  const std::vector<model::EdgeConfig> configs = experiment::ExpandGrid(base, axes);
  const scoring::ScoreKind kind = scoring::ParseScoreKind(a.kind);
  if (a.test.empty() != a.ood.empty()) {
    throw ParameterError("--test and --ood must be given together");
  }
  const MultiLabelDataset id = LoadDataset(a.id);
  const MultiLabelDataset oe = LoadDataset(a.oe);
  std::optional<MultiLabelDataset> test, ood;
  if (!a.test.empty()) {
    test = LoadDataset(a.test);
    ood = LoadDataset(a.ood);
  }

  const experiment::ValidationSplit split =
      experiment::SplitForValidation(id, oe, kHoldoutFraction, base.seed);
  const experiment::SweepResult sweep = experiment::SweepEdge(split, configs, kind);

  const fs::path out(a.out);
  MakeOutputDir(out);
  RunManifest manifest{"sweep",
                       {{"base", model::ToJson(base)},
                        {"grid", grid_json},
                        {"holdout_fraction", kHoldoutFraction},
                        {"kind", a.kind},
                        {"tpr", a.tpr},
                        {"steps", a.steps}},
                       base.seed,
                       {{"grid", a.grid}, {"id", a.id}, {"oe", a.oe}},
                       {},
                       0.0};
  if (!a.config.empty()) manifest.inputs["config"] = a.config;
  if (test) {
    manifest.inputs["test"] = a.test;
    manifest.inputs["ood"] = a.ood;
  }

  CsvTable summary;
  summary.header.push_back("cell");
  for (const auto& axis : axes) summary.header.push_back(axis.key);
  summary.header.push_back("validation_auroc");
  if (test) {
    for (const char* h : {"fpr95", "auroc", "aupr", "map"}) summary.header.push_back(h);
  }
  experiment::EvaluationOptions eval_options{kind, a.tpr, a.steps};
  for (std::size_t i = 0; i < sweep.cells.size(); ++i) {
    const experiment::SweepCell& cell = sweep.cells[i];
    const std::string name = CellName(i);
    const json config_json = model::ToJson(cell.config);
    json report = {{"cell", name}, {"config", config_json},
                   {"validation_auroc", cell.validation_auroc}};
    std::vector<std::string> row = {name};
    for (const auto& axis : axes) {
      row.push_back(config_json[axis.key].is_number_float()
                        ? FormatDouble(config_json[axis.key].get<double>())
                        : config_json[axis.key].dump());
    }
    row.push_back(FormatDouble(cell.validation_auroc));
    if (test) {
      const experiment::Evaluation e = experiment::Evaluate(
          cell.model, *test, *ood, split.id_fit.class_counts(), eval_options);
      report["test"] = experiment::ToJson(e);
      for (const double v : {e.detection.fpr95, e.detection.auroc, e.detection.aupr, e.map}) {
        row.push_back(FormatDouble(v));
      }
    }
    summary.rows.push_back(std::move(row));
    MakeOutputDir(out / name);
    WriteJsonFile(out / name / "report.json", report);
    model::SaveCheckpoint(out / name / "checkpoint.json", {cell.model, cell.config});
    manifest.outputs.push_back(name + "/report.json");
    manifest.outputs.push_back(name + "/checkpoint.json");
  }
  WriteCsv(out / "summary.csv", summary);
  const experiment::SweepCell& best = sweep.cells[sweep.best];
  WriteJsonFile(out / "best.json", {{"cell", CellName(sweep.best)},
                                    {"config", model::ToJson(best.config)},
                                    {"validation_auroc", best.validation_auroc}});
  manifest.outputs.push_back("summary.csv");
  manifest.outputs.push_back("best.json");
  manifest.wall_clock_seconds = Seconds(start);
  WriteManifest(out, manifest);
  return {{"command", "sweep"}, {"out", a.out}, {"best_cell", CellName(sweep.best)}};
}

}  // namespace

json ErrorJson(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-label out-of-distribution detection toolkit", "edge"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Args a;

  auto add_out = [&a](CLI::App* cmd) {
    cmd->add_option("--out", a.out, "Output directory")->required();
  };
  auto add_seed = [&a](CLI::App* cmd) {
    cmd->add_option("--seed", a.seed, "Root seed (overrides the config)");
  };
  auto add_eval_flags = [&a](CLI::App* cmd) {
    cmd->add_option("--kind", a.kind, "Score kind")->capture_default_str();
    cmd->add_option("--tpr", a.tpr, "TPR target for FPR")->capture_default_str();
    cmd->add_option("--steps", a.steps, "Head classes removed along the tail curve")
        ->capture_default_str();
  };

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic benchmark");
  add_out(synth);
  synth->add_option("--config", a.config, "Synth spec JSON");
  add_seed(synth);

  CLI::App* train = app.add_subcommand("train", "Train a classifier");
  add_out(train);
  train->add_option("--config", a.config, "Training config JSON");
  train->add_option("--id", a.id, "ID training dataset directory")->required();
  train->add_option("--oe", a.oe, "Outlier exposure dataset directory");
  add_seed(train);

  CLI::App* score = app.add_subcommand("score", "Score a dataset with a checkpoint");
  add_out(score);
  score->add_option("--checkpoint", a.checkpoint, "Checkpoint JSON")->required();
  score->add_option("--dataset", a.dataset, "Dataset directory")->required();
  score->add_option("--scores", a.scores, "Comma-separated score kinds (default: all)");
  score->add_option("--bins", a.bins, "Histogram bins")->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "Detection metrics and tail curve");
  add_out(eval);
  eval->add_option("--id-scores", a.id_scores, "ID scores CSV")->required();
  eval->add_option("--ood-scores", a.ood_scores, "OOD scores CSV")->required();
  eval->add_option("--labels", a.labels, "ID test labels CSV or dataset directory");
  eval->add_option("--train", a.train, "ID training dataset (class ranking)");
  add_eval_flags(eval);

  CLI::App* select = app.add_subcommand("select-oe", "Rank outlier sets by dilation");
  add_out(select);
  select->add_option("--id", a.id, "ID dataset directory");
  select->add_option("--candidates", a.candidates, "Candidate dataset directories")
      ->delimiter(',');
  select->add_option("--distances", a.distances, "Precomputed distances JSON");
  select->add_option("--checkpoint", a.checkpoint, "Feature model checkpoint");
  select->add_option("--d1", a.d1, "Hidden width of the untrained feature model")
      ->capture_default_str();
  select->add_option("--k-svd", a.k_svd, "Singular values compared (0: all)")
      ->capture_default_str();
  select->add_option("--batches", a.batches, "Batch pairs")->capture_default_str();
  select->add_option("--batch-size", a.batch_size, "Rows per batch")->capture_default_str();
  add_seed(select);

  CLI::App* sweep = app.add_subcommand("sweep", "Grid search with validation selection");
  add_out(sweep);
  sweep->add_option("--config", a.config, "Base training config JSON");
  sweep->add_option("--grid", a.grid, "Grid JSON: {key: [values]}")->required();
  sweep->add_option("--id", a.id, "ID training dataset directory")->required();
  sweep->add_option("--oe", a.oe, "Outlier exposure dataset directory")->required();
  sweep->add_option("--test", a.test, "ID test dataset directory");
  sweep->add_option("--ood", a.ood, "OOD test dataset directory");
  add_eval_flags(sweep);
  add_seed(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << ErrorJson("usage", e.what()).dump() << "\n";
    return 2;
  }

  try {
    json summary;
    if (*synth) {
      summary = RunSynth(a);
    } else if (*train) {
      summary = RunTrain(a);
    } else if (*score) {
      summary = RunScore(a);
    } else if (*eval) {
      summary = RunEval(a);
    } else if (*select) {
      if (!a.candidates.empty() && a.id.empty()) {
        throw ParameterError("--candidates needs --id");
      }
      summary = RunSelectOe(a);
    } else {
      summary = RunSweep(a);
    }
    out << summary.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    err << ErrorJson(ErrorKindName(e.kind()), e.what()).dump() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << ErrorJson("config", e.what()).dump() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << ErrorJson("io", e.what()).dump() << "\n";
  } catch (const std::exception& e) {
    err << ErrorJson("internal", e.what()).dump() << "\n";
  }
  return 1;
}

}  // namespace edge::cli
