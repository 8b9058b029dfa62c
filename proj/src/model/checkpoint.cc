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

#include "edge/model/checkpoint.h"

#include <string>
#include <vector>

#include "edge/core/config_reader.h"
#include "edge/core/status.h"

namespace edge::model {
namespace {

constexpr char kFormat[] = "edge-mlp";
constexpr int kVersion = 1;

void ReadArray(const nlohmann::json& j, const char* key, std::span<double> out) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ConfigError(std::string("checkpoint: missing array '") + key + "'");
  }
  const auto& arr = j.at(key);
  if (arr.size() != out.size()) {
    throw ShapeError(std::string("checkpoint: '") + key + "' has " +
                     std::to_string(arr.size()) + " values, expected " +
                     std::to_string(out.size()));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!arr[i].is_number()) {
      throw ConfigError(std::string("checkpoint: non-numeric entry in '") + key + "'");
    }
    out[i] = arr[i].get<double>();
  }
}

}  // namespace

nlohmann::json CheckpointToJson(const Checkpoint& checkpoint) {
  const MlpModel& m = checkpoint.model;
  nlohmann::json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["shapes"] = {{"input_dim", m.input_dim()},
                 {"hidden_dim", m.hidden_dim()},
                 {"num_classes", m.num_classes()}};
  j["w1"] = m.w1().values();
  j["b1"] = m.b1();
  j["w_cls"] = m.w_cls().values();
  j["b_cls"] = m.b_cls();
  if (checkpoint.config) j["config"] = ToJson(*checkpoint.config);
  return j;
}

Checkpoint CheckpointFromJson(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat) {
    throw ConfigError("checkpoint: not an edge-mlp checkpoint");
  }
  if (j.value("version", 0) != kVersion) {
    throw ConfigError("checkpoint: unsupported version");
  }
  const ConfigReader shapes(j.at("shapes"), "checkpoint shapes",
                            {"input_dim", "hidden_dim", "num_classes"});
  Checkpoint out;
  out.model = MlpModel(shapes.Unsigned("input_dim"), shapes.Unsigned("hidden_dim"),
                       shapes.Unsigned("num_classes"));
  ReadArray(j, "w1", out.model.w1().data());
  ReadArray(j, "b1", out.model.b1());
  ReadArray(j, "w_cls", out.model.w_cls().data());
  ReadArray(j, "b_cls", out.model.b_cls());
  if (j.contains("config")) out.config = EdgeConfigFromJson(j.at("config"));
  if (!out.model.AllFinite()) throw NumericError("checkpoint: non-finite parameter");
  return out;
}

void SaveCheckpoint(const std::filesystem::path& path,
                    const Checkpoint& checkpoint) {
  WriteJsonFile(path, CheckpointToJson(checkpoint));
}

Checkpoint LoadCheckpoint(const std::filesystem::path& path) {
  return CheckpointFromJson(ReadJsonFile(path));
}

}  // namespace edge::model
