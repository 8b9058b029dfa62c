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

#include "edge/cli/manifest.h"

#include "edge/core/config_reader.h"

namespace edge::cli {

nlohmann::json ToJson(const RunManifest& m) {
  return {{"command", m.command},
          {"config", m.config},
          {"seed", m.seed},
          {"inputs", m.inputs},
          {"outputs", m.outputs},
          {"tool_version", kToolVersion},
          {"wall_clock_seconds", m.wall_clock_seconds}};
}

void WriteManifest(const std::filesystem::path& dir, const RunManifest& manifest) {
  WriteJsonFile(dir / "manifest.json", ToJson(manifest));
}

}  // namespace edge::cli
