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

#ifndef EDGE_CLI_MANIFEST_H_
#define EDGE_CLI_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace edge::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Provenance record written as manifest.json next to a command's outputs.
struct RunManifest {
  std::string command;
  nlohmann::json config;                     // full effective configuration
  std::uint64_t seed = 0;                    // root seed
  std::map<std::string, std::string> inputs;  // role -> path as given
  std::vector<std::string> outputs;          // relative to the output dir
  double wall_clock_seconds = 0.0;
};

nlohmann::json ToJson(const RunManifest& manifest);

// Writes dir/manifest.json.
void WriteManifest(const std::filesystem::path& dir, const RunManifest& manifest);

}  // namespace edge::cli

#endif  // EDGE_CLI_MANIFEST_H_
