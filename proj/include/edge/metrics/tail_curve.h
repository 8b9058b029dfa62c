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

#ifndef EDGE_METRICS_TAIL_CURVE_H_
#define EDGE_METRICS_TAIL_CURVE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "edge/core/matrix.h"
#include "json.hpp"

namespace edge::metrics {

struct TailPoint {
  std::size_t removed_head_classes = 0;
  std::size_t remaining_id_samples = 0;
  double fpr95 = 0.0;
  double auroc = 0.0;

  bool operator==(const TailPoint&) const = default;
};

struct TailCurve {
  std::vector<TailPoint> points;
};

// Class ids ordered by count descending, ties by lower class id.
std::vector<std::size_t> HeadClassOrder(std::span<const std::int64_t> class_counts);

// Head/tail imbalance curve. Classes are ranked by `train_class_counts`;
// point x (0..steps) drops every ID test sample whose label set touches one
// of the x largest classes and scores the remaining ID samples against the
// full OOD pool. Stops early once no ID sample remains.
TailCurve ComputeTailCurve(std::span<const std::int64_t> train_class_counts,
                           const LabelMatrix& test_labels,
                           std::span<const double> id_scores,
                           std::span<const double> ood_scores, std::size_t steps,
                           double tpr_target = 0.95);

nlohmann::json ToJson(const TailCurve& curve);
// Plot-ready CSV: x,fpr95,auroc.
void WriteTailCurveCsv(const std::filesystem::path& path, const TailCurve& curve);

}  // namespace edge::metrics

#endif  // EDGE_METRICS_TAIL_CURVE_H_
