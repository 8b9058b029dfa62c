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

#ifndef EDGE_MODEL_CONFIG_H_
#define EDGE_MODEL_CONFIG_H_

#include <cstddef>
#include <cstdint>

#include "edge/losses/losses.h"
#include "json.hpp"

namespace edge::model {

// Every training hyper-parameter. The JSON form uses the field names below
// (hidden_dim is spelled "d1") and must list every field.
struct EdgeConfig {
  double alpha = 0.1;
  double beta = 0.01;
  double margin = 1.0;
  std::size_t k = 8;
  std::size_t epochs = 20;
  std::size_t transform_epoch = 10;  // beta is forced to 0 for epochs < this
  std::size_t batch_size = 64;
  double learning_rate = 0.05;
  double momentum = 0.9;
  double weight_decay = 1e-4;
  std::uint64_t seed = 0;
  std::size_t hidden_dim = 16;

  losses::EdgeWeights weights() const { return {alpha, beta, margin, k}; }

  // Throws ParameterError naming the first violated constraint.
  void Validate() const;

  bool operator==(const EdgeConfig&) const = default;
};

nlohmann::json ToJson(const EdgeConfig& config);
// Strict: missing, unknown or mistyped keys throw ConfigError; constraint
// violations throw ParameterError.
EdgeConfig EdgeConfigFromJson(const nlohmann::json& j);

}  // namespace edge::model

#endif  // EDGE_MODEL_CONFIG_H_
