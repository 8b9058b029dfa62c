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

#ifndef EDGE_MODEL_CHECKPOINT_H_
#define EDGE_MODEL_CHECKPOINT_H_

#include <filesystem>
#include <optional>

#include "edge/model/config.h"
#include "edge/model/mlp.h"
#include "json.hpp"

namespace edge::model {

// JSON checkpoint:
//   {"format": "edge-mlp", "version": 1,
//    "shapes": {"input_dim", "hidden_dim", "num_classes"},
//    "w1": [...], "b1": [...], "w_cls": [...], "b_cls": [...],   row-major
//    "config": {...}}                                           optional
// Reals are written in shortest round-trip form, so a reload is bit-exact.
struct Checkpoint {
  MlpModel model;
  std::optional<EdgeConfig> config;
};

nlohmann::json CheckpointToJson(const Checkpoint& checkpoint);
Checkpoint CheckpointFromJson(const nlohmann::json& j);

void SaveCheckpoint(const std::filesystem::path& path,
                    const Checkpoint& checkpoint);
Checkpoint LoadCheckpoint(const std::filesystem::path& path);

}  // namespace edge::model

#endif  // EDGE_MODEL_CHECKPOINT_H_
