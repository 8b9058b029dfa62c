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

#ifndef EDGE_CORE_CSV_H_
#define EDGE_CORE_CSV_H_

#include <filesystem>
#include <string>
#include <vector>

#include "edge/core/matrix.h"

namespace edge {

// Shortest decimal representation that round-trips to the same double.
std::string FormatDouble(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Plain comma-separated files: one header row, no quoting.
CsvTable ReadCsv(const std::filesystem::path& path);
void WriteCsv(const std::filesystem::path& path, const CsvTable& table);

double ParseDouble(const std::string& text);
long long ParseInteger(const std::string& text);

// Header is `<prefix>0,<prefix>1,...`.
void WriteMatrixCsv(const std::filesystem::path& path, const Matrix& m,
                    const std::string& column_prefix);
Matrix ReadMatrixCsv(const std::filesystem::path& path);

void WriteLabelCsv(const std::filesystem::path& path, const LabelMatrix& m);
LabelMatrix ReadLabelCsv(const std::filesystem::path& path);

}  // namespace edge

#endif  // EDGE_CORE_CSV_H_
