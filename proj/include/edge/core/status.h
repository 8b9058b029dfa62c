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

#ifndef EDGE_CORE_STATUS_H_
#define EDGE_CORE_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace edge {

// Error categories surfaced by every module. The CLI maps them to the
// machine-readable error JSON.
enum class ErrorKind {
  kShape,
  kEmptyInput,
  kParameter,
  kNumeric,
  kData,
  kBatchSize,
  kConfig,
  kIo,
  kGeneration,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define EDGE_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(Kind, message) {} \
  };

EDGE_DEFINE_ERROR(ShapeError, ErrorKind::kShape)
EDGE_DEFINE_ERROR(EmptyInputError, ErrorKind::kEmptyInput)
EDGE_DEFINE_ERROR(ParameterError, ErrorKind::kParameter)
EDGE_DEFINE_ERROR(NumericError, ErrorKind::kNumeric)
EDGE_DEFINE_ERROR(DataError, ErrorKind::kData)
EDGE_DEFINE_ERROR(BatchSizeError, ErrorKind::kBatchSize)
EDGE_DEFINE_ERROR(ConfigError, ErrorKind::kConfig)
EDGE_DEFINE_ERROR(IoError, ErrorKind::kIo)
EDGE_DEFINE_ERROR(GenerationError, ErrorKind::kGeneration)

#undef EDGE_DEFINE_ERROR

}  // namespace edge

#endif  // EDGE_CORE_STATUS_H_
