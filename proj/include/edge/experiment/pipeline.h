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

#ifndef EDGE_EXPERIMENT_PIPELINE_H_
#define EDGE_EXPERIMENT_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edge/core/dataset.h"
#include "edge/metrics/detection.h"
#include "edge/metrics/tail_curve.h"
#include "edge/model/config.h"
#include "edge/model/mlp.h"
#include "edge/scoring/scoring.h"
#include "json.hpp"

namespace edge::experiment {

struct EvaluationOptions {
  scoring::ScoreKind kind = scoring::ScoreKind::kJointEnergy;
  double tpr_target = 0.95;
  std::size_t tail_steps = 10;
};

struct Evaluation {
  metrics::DetectionReport detection;
  metrics::TailCurve tail;
  double map = 0.0;
};

std::vector<double> ScoreRows(const model::MlpModel& model,
                              const MultiLabelDataset& ds,
                              scoring::ScoreKind kind);

// Detection metrics of id_test vs ood, the tail curve ranked by
// train_class_counts, and ID mAP on the raw logits.
Evaluation Evaluate(const model::MlpModel& model, const MultiLabelDataset& id_test,
                    const MultiLabelDataset& ood,
                    std::span<const std::int64_t> train_class_counts,
                    const EvaluationOptions& options);

nlohmann::json ToJson(const Evaluation& evaluation);

// Seeded split of `ds` into (fit, holdout) with round(fraction * n) holdout
// rows; both keep the original row order.
std::pair<MultiLabelDataset, MultiLabelDataset> HoldOut(
    const MultiLabelDataset& ds, double fraction, std::uint64_t seed);

// One swept EdgeConfig key and its values.
struct GridAxis {
  std::string key;
  std::vector<double> values;
};

// Parses {"alpha": [..], "beta": [..], ...}. Keys must be EdgeConfig JSON
// keys; axes are kept in key order. Throws ConfigError.
std::vector<GridAxis> GridFromJson(const nlohmann::json& j);

// Cartesian product over the axes; the last axis varies fastest. Each cell
// is `base` with the swept keys replaced and is re-validated.
std::vector<model::EdgeConfig> ExpandGrid(const model::EdgeConfig& base,
                                          std::span<const GridAxis> axes);

model::EdgeConfig WithValue(const model::EdgeConfig& base, const std::string& key,
                            double value);

// AUROC of held-out ID rows against held-out outlier rows.
double ValidationAuroc(const model::MlpModel& model, const MultiLabelDataset& id_val,
                       const MultiLabelDataset& oe_val, scoring::ScoreKind kind);

// ID train and OE sets each split into a fitting part and a validation part.
struct ValidationSplit {
  MultiLabelDataset id_fit;
  MultiLabelDataset id_val;
  MultiLabelDataset oe_fit;
  MultiLabelDataset oe_val;
};

// HoldOut of `fraction` of both sets; the two splits use separate streams
// derived from `seed`.
ValidationSplit SplitForValidation(const MultiLabelDataset& id_train,
                                   const MultiLabelDataset& oe, double fraction,
                                   std::uint64_t seed);

struct SweepCell {
  model::EdgeConfig config;
  double validation_auroc = 0.0;
  model::MlpModel model;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // in the order given
  std::size_t best = 0;          // highest validation AUROC, first on ties
};

// Trains TrainEdge on split.id_fit / split.oe_fit for each config and scores
// it on the validation parts.
SweepResult SweepEdge(const ValidationSplit& split,
                      std::span<const model::EdgeConfig> configs,
                      scoring::ScoreKind kind);

}  // namespace edge::experiment

#endif  // EDGE_EXPERIMENT_PIPELINE_H_
