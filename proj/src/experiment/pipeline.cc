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

#include "edge/experiment/pipeline.h"

#include <algorithm>
#include <cmath>

#include "edge/core/random.h"
#include "edge/core/status.h"
#include "edge/metrics/average_precision.h"
#include "edge/model/trainer.h"

namespace edge::experiment {
namespace {

enum Stream : std::uint64_t { kIdHoldoutStream = 20, kOeHoldoutStream = 21 };

}  // namespace

std::vector<double> ScoreRows(const model::MlpModel& model,
                              const MultiLabelDataset& ds,
                              scoring::ScoreKind kind) {
  return scoring::ScoreDataset(model::Forward(model, ds.features()).logits, kind,
                               ds.name())
      .values;
}

Evaluation Evaluate(const model::MlpModel& model, const MultiLabelDataset& id_test,
                    const MultiLabelDataset& ood,
                    std::span<const std::int64_t> train_class_counts,
                    const EvaluationOptions& options) {
  const Matrix id_logits = model::Forward(model, id_test.features()).logits;
  const std::vector<double> id_scores =
      scoring::ScoreDataset(id_logits, options.kind).values;
  const std::vector<double> ood_scores = ScoreRows(model, ood, options.kind);

  Evaluation out;
  out.detection = metrics::EvaluateDetection(id_scores, ood_scores, options.kind,
                                             options.tpr_target);
  out.tail = metrics::ComputeTailCurve(train_class_counts, id_test.RequireLabels(),
                                       id_scores, ood_scores, options.tail_steps,
                                       options.tpr_target);
  out.map = metrics::MeanAveragePrecision(id_logits, id_test.RequireLabels()).value;
  return out;
}

nlohmann::json ToJson(const Evaluation& evaluation) {
  nlohmann::json j = metrics::ToJson(evaluation.detection);
  j["map"] = evaluation.map;
  j["tail_curve"] = metrics::ToJson(evaluation.tail)["points"];
  return j;
}

std::pair<MultiLabelDataset, MultiLabelDataset> HoldOut(
    const MultiLabelDataset& ds, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ParameterError("holdout fraction must be in (0, 1)");
  }
  const auto n_hold = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(ds.size())));
  if (n_hold == 0 || n_hold >= ds.size()) {
    throw DataError("holdout of " + std::to_string(n_hold) + " rows from '" +
                    ds.name() + "' leaves an empty side");
  }
  Rng rng(seed);
  std::vector<std::size_t> perm = rng.Permutation(ds.size());
  std::vector<std::size_t> hold(perm.begin(), perm.begin() + n_hold);
  std::vector<std::size_t> fit(perm.begin() + n_hold, perm.end());
  std::sort(hold.begin(), hold.end());
  std::sort(fit.begin(), fit.end());
  return {ds.Subset(fit, ds.name() + "_fit"), ds.Subset(hold, ds.name() + "_holdout")};
}

std::vector<GridAxis> GridFromJson(const nlohmann::json& j) {
  if (!j.is_object() || j.empty()) {
    throw ConfigError("grid: expected a non-empty object of key -> list");
  }
  const nlohmann::json known = model::ToJson(model::EdgeConfig{});
  std::vector<GridAxis> axes;
  for (const auto& [key, values] : j.items()) {
    if (!known.contains(key)) throw ConfigError("grid: unknown key '" + key + "'");
    if (key == "seed") {
      throw ConfigError("grid: 'seed' cannot be swept; cells share the root seed");
    }
    if (!values.is_array() || values.empty()) {
      throw ConfigError("grid: '" + key + "' must be a non-empty list");
    }
    GridAxis axis{key, {}};
    for (const auto& v : values) {
      if (!v.is_number()) {
        throw ConfigError("grid: '" + key + "' has a non-numeric value");
      }
      axis.values.push_back(v.get<double>());
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

model::EdgeConfig WithValue(const model::EdgeConfig& base, const std::string& key,
                            double value) {
  nlohmann::json j = model::ToJson(base);
  if (!j.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  if (j[key].is_number_integer()) {
    if (value < 0.0 || std::floor(value) != value) {
      throw ConfigError("config key '" + key + "' needs a non-negative integer");
    }
    j[key] = static_cast<std::uint64_t>(value);
  } else {
    j[key] = value;
  }
  return model::EdgeConfigFromJson(j);
}

std::vector<model::EdgeConfig> ExpandGrid(const model::EdgeConfig& base,
                                          std::span<const GridAxis> axes) {
  std::vector<model::EdgeConfig> cells{base};
  for (const GridAxis& axis : axes) {
    std::vector<model::EdgeConfig> next;
    next.reserve(cells.size() * axis.values.size());
    for (const model::EdgeConfig& cell : cells) {
      for (const double v : axis.values) next.push_back(WithValue(cell, axis.key, v));
    }
    cells = std::move(next);
  }
  return cells;
}

double ValidationAuroc(const model::MlpModel& model, const MultiLabelDataset& id_val,
                       const MultiLabelDataset& oe_val, scoring::ScoreKind kind) {
  return metrics::Auroc(ScoreRows(model, id_val, kind), ScoreRows(model, oe_val, kind));
}

ValidationSplit SplitForValidation(const MultiLabelDataset& id_train,
                                   const MultiLabelDataset& oe, double fraction,
                                   std::uint64_t seed) {
  auto [id_fit, id_val] = HoldOut(id_train, fraction, DeriveSeed(seed, kIdHoldoutStream));
  auto [oe_fit, oe_val] = HoldOut(oe, fraction, DeriveSeed(seed, kOeHoldoutStream));
  return {std::move(id_fit), std::move(id_val), std::move(oe_fit), std::move(oe_val)};
}

SweepResult SweepEdge(const ValidationSplit& split,
                      std::span<const model::EdgeConfig> configs,
                      scoring::ScoreKind kind) {
  if (configs.empty()) throw EmptyInputError("sweep: no configurations");
  SweepResult result;
  for (const model::EdgeConfig& config : configs) {
    model::TrainResult trained = model::TrainEdge(split.id_fit, split.oe_fit, config);
    const double auroc = ValidationAuroc(trained.model, split.id_val, split.oe_val, kind);
    if (result.cells.empty() || auroc > result.cells[result.best].validation_auroc) {
      result.best = result.cells.size();
    }
    result.cells.push_back({config, auroc, std::move(trained.model)});
  }
  return result;
}

}  // namespace edge::experiment
