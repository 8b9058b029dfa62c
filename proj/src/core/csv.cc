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

#include "edge/core/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "edge/core/status.h"

namespace edge {
namespace {

std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(const std::string& text) {
  double value = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw DataError("not a real number: '" + text + "'");
  }
  if (!std::isfinite(value)) throw DataError("non-finite value: '" + text + "'");
  return value;
}

long long ParseInteger(const std::string& text) {
  long long value = 0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw DataError("not an integer: '" + text + "'");
  }
  return value;
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = SplitLine(line);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = SplitLine(line);
    if (cells.size() != table.header.size()) {
      throw DataError(path.string() + ":" + std::to_string(line_number) +
                      ": expected " + std::to_string(table.header.size()) +
                      " cells, found " + std::to_string(cells.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void WriteCsv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  if (!out) throw IoError("write failed for " + path.string());
}

void WriteMatrixCsv(const std::filesystem::path& path, const Matrix& m,
                    const std::string& column_prefix) {
  CsvTable table;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    table.header.push_back(column_prefix + std::to_string(c));
  }
  table.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> cells;
    cells.reserve(m.cols());
    for (const double v : m.row(r)) cells.push_back(FormatDouble(v));
    table.rows.push_back(std::move(cells));
  }
  WriteCsv(path, table);
}

Matrix ReadMatrixCsv(const std::filesystem::path& path) {
  const CsvTable table = ReadCsv(path);
  const std::size_t cols = table.header.size();
  std::vector<double> data;
  data.reserve(table.rows.size() * cols);
  for (const auto& row : table.rows) {
    for (const auto& cell : row) data.push_back(ParseDouble(cell));
  }
  return Matrix(table.rows.size(), cols, std::move(data));
}

void WriteLabelCsv(const std::filesystem::path& path, const LabelMatrix& m) {
  CsvTable table;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    table.header.push_back("c" + std::to_string(c));
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> cells;
    for (const std::uint8_t v : m.row(r)) cells.push_back(v ? "1" : "0");
    table.rows.push_back(std::move(cells));
  }
  WriteCsv(path, table);
}

LabelMatrix ReadLabelCsv(const std::filesystem::path& path) {
  const CsvTable table = ReadCsv(path);
  const std::size_t cols = table.header.size();
  std::vector<std::uint8_t> data;
  data.reserve(table.rows.size() * cols);
  for (const auto& row : table.rows) {
    for (const auto& cell : row) {
      const long long v = ParseInteger(cell);
      if (v != 0 && v != 1) {
        throw DataError(path.string() + ": label cell '" + cell +
                        "' is not 0 or 1");
      }
      data.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return LabelMatrix(table.rows.size(), cols, std::move(data));
}

}  // namespace edge
