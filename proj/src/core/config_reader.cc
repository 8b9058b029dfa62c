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

#include "edge/core/config_reader.h"

#include <cmath>
#include <fstream>
#include <set>

#include "edge/core/status.h"

namespace edge {

ConfigReader::ConfigReader(const nlohmann::json& object, std::string context,
                           std::initializer_list<const char*> keys)
    : object_(object), context_(std::move(context)) {
  if (!object_.is_object()) throw ConfigError(context_ + ": expected a JSON object");
  std::set<std::string> expected(keys.begin(), keys.end());
  for (const auto& [key, value] : object_.items()) {
    if (!expected.contains(key)) {
      throw ConfigError(context_ + ": unknown key '" + key + "'");
    }
  }
  for (const char* key : keys) {
    if (!object_.contains(key)) {
      throw ConfigError(context_ + ": missing field '" + key + "'");
    }
  }
}

const nlohmann::json& ConfigReader::At(const char* key) const {
  return object_.at(key);
}

double ConfigReader::Real(const char* key) const {
  const auto& v = At(key);
  if (!v.is_number()) {
    throw ConfigError(context_ + ": field '" + key + "' must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError(context_ + ": field '" + key + "' must be finite");
  }
  return x;
}

std::uint64_t ConfigReader::Unsigned(const char* key) const {
  const auto& v = At(key);
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw ConfigError(context_ + ": field '" + key +
                      "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::int64_t ConfigReader::Integer(const char* key) const {
  const auto& v = At(key);
  if (!v.is_number_integer()) {
    throw ConfigError(context_ + ": field '" + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string ConfigReader::String(const char* key) const {
  const auto& v = At(key);
  if (!v.is_string()) {
    throw ConfigError(context_ + ": field '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace edge
