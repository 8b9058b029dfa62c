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

#include "edge/core/dataset.h"

#include <fstream>
#include <utility>

#include "edge/core/csv.h"
#include "edge/core/status.h"

namespace edge {

MultiLabelDataset::MultiLabelDataset(std::string name, Matrix features,
                                     std::optional<LabelMatrix> labels)
    : name_(std::move(name)),
      features_(std::move(features)),
      labels_(std::move(labels)) {
  if (labels_) {
    if (labels_->rows() != features_.rows()) {
      throw ShapeError("dataset '" + name_ + "': features " +
                       features_.ShapeString() + " vs labels " +
                       labels_->ShapeString());
    }
    class_counts_ = labels_->ColumnSums();
  }
}

const LabelMatrix& MultiLabelDataset::RequireLabels() const {
  if (!labels_) throw DataError("dataset '" + name_ + "' has no labels");
  return *labels_;
}

MultiLabelDataset MultiLabelDataset::Subset(std::span<const std::size_t> rows,
                                            std::string name) const {
  std::optional<LabelMatrix> labels;
  if (labels_) labels = labels_->SelectRows(rows);
  return MultiLabelDataset(std::move(name), features_.SelectRows(rows),
                           std::move(labels));
}

void WriteDataset(const MultiLabelDataset& ds, const std::filesystem::path& dir,
                  std::uint64_t seed, const nlohmann::json& extra) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  WriteMatrixCsv(dir / "features.csv", ds.features(), "f");
  if (ds.labeled()) WriteLabelCsv(dir / "labels.csv", *ds.labels());

  nlohmann::json meta = extra.is_object() ? extra : nlohmann::json::object();
  meta["name"] = ds.name();
  meta["rows"] = ds.size();
  meta["cols"] = ds.dim();
  meta["C"] = ds.labeled() ? ds.labels()->cols() : 0;
  meta["seed"] = seed;
  std::ofstream out(dir / "meta.json", std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / "meta.json").string());
  out << meta.dump(2) << '\n';
}

MultiLabelDataset ReadDataset(const std::filesystem::path& dir) {
  const auto meta_path = dir / "meta.json";
  std::ifstream in(meta_path);
  if (!in) throw IoError("cannot open " + meta_path.string());
  nlohmann::json meta;
  try {
    in >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(meta_path.string() + ": " + e.what());
  }
  for (const char* key : {"name", "rows", "cols", "C", "seed"}) {
    if (!meta.contains(key)) {
      throw DataError(meta_path.string() + ": missing key '" + key + "'");
    }
  }

  Matrix features = ReadMatrixCsv(dir / "features.csv");
  const auto rows = meta["rows"].get<std::size_t>();
  const auto cols = meta["cols"].get<std::size_t>();
  if (features.rows() != rows || features.cols() != cols) {
    throw DataError(dir.string() + ": features " + features.ShapeString() +
                    " disagree with meta.json");
  }
  std::optional<LabelMatrix> labels;
  if (std::filesystem::exists(dir / "labels.csv")) {
    labels = ReadLabelCsv(dir / "labels.csv");
    if (labels->cols() != meta["C"].get<std::size_t>()) {
      throw DataError(dir.string() + ": labels.csv column count disagrees with C");
    }
  }
  return MultiLabelDataset(meta["name"].get<std::string>(), std::move(features),
                           std::move(labels));
}

}  // namespace edge
