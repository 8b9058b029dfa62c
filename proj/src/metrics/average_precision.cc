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

#include "edge/metrics/average_precision.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "edge/core/status.h"

namespace edge::metrics {

MapResult MeanAveragePrecision(const Matrix& scores, const LabelMatrix& labels,
                               ZeroPositivePolicy policy) {
  if (scores.rows() != labels.rows() || scores.cols() != labels.cols()) {
    throw ShapeError("mAP: scores " + scores.ShapeString() + " vs labels " +
                     labels.ShapeString());
  }
  MapResult out;
  out.per_class_ap.assign(scores.cols(), std::numeric_limits<double>::quiet_NaN());
  std::vector<std::size_t> order(scores.rows());
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t c = 0; c < scores.cols(); ++c) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return scores(a, c) > scores(b, c);
    });
    std::size_t hits = 0;
    double precision_sum = 0.0;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      if (labels(order[rank], c) != 0) {
        ++hits;
        precision_sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
      }
    }
    if (hits == 0) {
      if (policy == ZeroPositivePolicy::kError) {
        throw DataError("mAP: class " + std::to_string(c) + " has no positives");
      }
      out.excluded_classes.push_back(c);
      continue;
    }
    out.per_class_ap[c] = precision_sum / static_cast<double>(hits);
    sum += out.per_class_ap[c];
    ++used;
  }
  if (used == 0) throw DataError("mAP: no class has a positive sample");
  out.value = sum / static_cast<double>(used);
  return out;
}

}  // namespace edge::metrics
