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

#ifndef EDGE_METRICS_AVERAGE_PRECISION_H_
#define EDGE_METRICS_AVERAGE_PRECISION_H_

#include <cstddef>
#include <vector>

#include "edge/core/matrix.h"

namespace edge::metrics {

enum class ZeroPositivePolicy {
  kExclude,  // skip the class and list it in MapResult::excluded_classes
  kError,    // throw DataError
};

struct MapResult {
  double value = 0.0;
  std::vector<double> per_class_ap;  // NaN for excluded classes
  std::vector<std::size_t> excluded_classes;
};

// Per class: rank samples by score descending (ties: lower index first);
// AP is the mean of precision@rank over the positive ranks. mAP is the mean
// AP over the classes that have at least one positive.
MapResult MeanAveragePrecision(
    const Matrix& scores, const LabelMatrix& labels,
    ZeroPositivePolicy policy = ZeroPositivePolicy::kExclude);

}  // namespace edge::metrics

#endif  // EDGE_METRICS_AVERAGE_PRECISION_H_
