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

#include "edge/metrics/tail_curve.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "edge/core/csv.h"
#include "edge/core/status.h"
#include "edge/metrics/detection.h"

namespace edge::metrics {

std::vector<std::size_t> HeadClassOrder(std::span<const std::int64_t> class_counts) {
  std::vector<std::size_t> order(class_counts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return class_counts[a] > class_counts[b];
  });
  return order;
}

TailCurve ComputeTailCurve(std::span<const std::int64_t> train_class_counts,
                           const LabelMatrix& test_labels,
                           std::span<const double> id_scores,
                           std::span<const double> ood_scores, std::size_t steps,
                           double tpr_target) {
  if (train_class_counts.size() != test_labels.cols()) {
    throw ShapeError("tail curve: " + std::to_string(train_class_counts.size()) +
                     " class counts vs labels " + test_labels.ShapeString());
  }
  if (id_scores.size() != test_labels.rows()) {
    throw ShapeError("tail curve: " + std::to_string(id_scores.size()) +
                     " ID scores vs labels " + test_labels.ShapeString());
  }
  const std::vector<std::size_t> head = HeadClassOrder(train_class_counts);
  const std::size_t max_steps = std::min(steps, head.size());

  TailCurve curve;
  std::vector<bool> removed(test_labels.rows(), false);
  for (std::size_t x = 0; x <= max_steps; ++x) {
    if (x > 0) {
      const std::size_t cls = head[x - 1];
      for (std::size_t r = 0; r < test_labels.rows(); ++r) {
        if (test_labels(r, cls) != 0) removed[r] = true;
      }
    }
    std::vector<double> remaining;
    for (std::size_t r = 0; r < id_scores.size(); ++r) {
      if (!removed[r]) remaining.push_back(id_scores[r]);
    }
    if (remaining.empty()) break;
    curve.points.push_back({x, remaining.size(),
                            FprAtTpr(remaining, ood_scores, tpr_target),
                            Auroc(remaining, ood_scores)});
  }
  return curve;
}

nlohmann::json ToJson(const TailCurve& curve) {
  nlohmann::json points = nlohmann::json::array();
  for (const TailPoint& p : curve.points) {
    points.push_back({{"removed_head_classes", p.removed_head_classes},
                      {"remaining_id_samples", p.remaining_id_samples},
                      {"fpr95", p.fpr95},
                      {"auroc", p.auroc}});
  }
  return {{"points", points}};
}

void WriteTailCurveCsv(const std::filesystem::path& path, const TailCurve& curve) {
  CsvTable table;
  table.header = {"x", "fpr95", "auroc"};
  for (const TailPoint& p : curve.points) {
    table.rows.push_back({std::to_string(p.removed_head_classes),
                          FormatDouble(p.fpr95), FormatDouble(p.auroc)});
  }
  WriteCsv(path, table);
}

}  // namespace edge::metrics
