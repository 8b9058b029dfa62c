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

#ifndef EDGE_CORE_DATASET_H_
#define EDGE_CORE_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edge/core/matrix.h"
#include "json.hpp"

namespace edge {

// Feature matrix with optional binary labels. OE and OOD sets carry no
// labels and an empty class_counts vector.
class MultiLabelDataset {
 public:
  MultiLabelDataset() = default;
  // Throws ShapeError if labels are present with a different row count.
  MultiLabelDataset(std::string name, Matrix features,
                    std::optional<LabelMatrix> labels = std::nullopt);

  const std::string& name() const { return name_; }
  const Matrix& features() const { return features_; }
  const std::optional<LabelMatrix>& labels() const { return labels_; }
  bool labeled() const { return labels_.has_value(); }
  // Throws DataError on an unlabeled dataset.
  const LabelMatrix& RequireLabels() const;
  const std::vector<std::int64_t>& class_counts() const { return class_counts_; }
  std::size_t size() const { return features_.rows(); }
  std::size_t dim() const { return features_.cols(); }

  MultiLabelDataset Subset(std::span<const std::size_t> rows,
                           std::string name) const;

  bool operator==(const MultiLabelDataset&) const = default;

 private:
  std::string name_;
  Matrix features_;
  std::optional<LabelMatrix> labels_;
  std::vector<std::int64_t> class_counts_;
};

// Directory layout: features.csv, labels.csv (labeled sets only) and
// meta.json with {name, rows, cols, C, seed} plus any `extra` keys.
void WriteDataset(const MultiLabelDataset& ds, const std::filesystem::path& dir,
                  std::uint64_t seed, const nlohmann::json& extra = {});
MultiLabelDataset ReadDataset(const std::filesystem::path& dir);

}  // namespace edge

#endif  // EDGE_CORE_DATASET_H_
