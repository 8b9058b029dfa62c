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

#ifndef EDGE_CORE_CONFIG_READER_H_
#define EDGE_CORE_CONFIG_READER_H_

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>

#include "json.hpp"

namespace edge {

// Strict reader over one JSON object: every expected key must be present,
// no other key may appear, and values must have the requested type. All
// failures are ConfigError naming `context` and the offending key.
class ConfigReader {
 public:
  ConfigReader(const nlohmann::json& object, std::string context,
               std::initializer_list<const char*> keys);

  double Real(const char* key) const;
  std::uint64_t Unsigned(const char* key) const;
  std::int64_t Integer(const char* key) const;
  std::string String(const char* key) const;

 private:
  const nlohmann::json& At(const char* key) const;

  const nlohmann::json& object_;
  std::string context_;
};

// Throws IoError / ConfigError with the path in the message.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace edge

#endif  // EDGE_CORE_CONFIG_READER_H_
