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

#ifndef EDGE_MODEL_TRAINER_H_
#define EDGE_MODEL_TRAINER_H_

#include <cstddef>
#include <filesystem>
#include <vector>

#include "edge/core/dataset.h"
#include "edge/model/config.h"
#include "edge/model/mlp.h"

namespace edge::model {

// Step-averaged losses of one epoch. total = id + alpha * conf +
// beta_effective * gap, averaged the same way.
struct EpochRecord {
  std::size_t epoch = 0;
  std::size_t steps = 0;
  double loss_id = 0.0;
  double loss_conf = 0.0;
  double loss_gap = 0.0;
  double total = 0.0;
  double beta_effective = 0.0;

  bool operator==(const EpochRecord&) const = default;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;

  bool operator==(const TrainHistory&) const = default;
};

struct TrainResult {
  MlpModel model;
  TrainHistory history;
};

// Minimizes loss_id + alpha * loss_conf + beta_t * loss_gap with SGD
// (momentum, weight decay), beta_t = 0 for epochs t < transform_epoch.
//
// Each step takes the next ID batch of a per-epoch shuffle and an equally
// sized OE batch from an independent shuffle that cycles over d_oe. A
// trailing ID batch smaller than k is dropped. Initialization, ID order and
// OE order use separate streams derived from config.seed, so the run is a
// pure function of its inputs.
TrainResult TrainEdge(const MultiLabelDataset& d_in,
                      const MultiLabelDataset& d_oe, const EdgeConfig& config);

// The same loop on ID data alone (plain BCE); alpha, beta and margin are
// ignored.
TrainResult TrainBce(const MultiLabelDataset& d_in, const EdgeConfig& config);

// Columns: epoch,steps,loss_id,loss_conf,loss_gap,total,beta_effective.
void WriteHistoryCsv(const std::filesystem::path& path,
                     const TrainHistory& history);

}  // namespace edge::model

#endif  // EDGE_MODEL_TRAINER_H_
