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

#ifndef EDGE_METRICS_DETECTION_H_
#define EDGE_METRICS_DETECTION_H_

#include <cstddef>
#include <span>

#include "edge/scoring/scoring.h"
#include "json.hpp"

namespace edge::metrics {

// All detection metrics treat ID as the positive class: a higher score
// means "more in-distribution". Each throws EmptyInputError if either side
// is empty.

// Mann-Whitney statistic: P(id > ood) + 0.5 P(id == ood) over all pairs.
double Auroc(std::span<const double> id_scores, std::span<const double> ood_scores);

// Let g be the largest threshold with #{id >= g} / n_id >= tpr_target;
// returns #{ood >= g} / n_ood. No interpolation.
double FprAtTpr(std::span<const double> id_scores,
                std::span<const double> ood_scores, double tpr_target = 0.95);

// Area under the precision-recall curve with one operating point per
// distinct score (ties grouped) and step interpolation:
// sum over thresholds of (recall_i - recall_{i-1}) * precision_i.
double Aupr(std::span<const double> id_scores, std::span<const double> ood_scores);

struct DetectionReport {
  double fpr95 = 0.0;
  double auroc = 0.0;
  double aupr = 0.0;
  std::size_t n_id = 0;
  std::size_t n_ood = 0;
  scoring::ScoreKind kind = scoring::ScoreKind::kJointEnergy;
  double tpr_target = 0.95;

  bool operator==(const DetectionReport&) const = default;
};

DetectionReport EvaluateDetection(std::span<const double> id_scores,
                                  std::span<const double> ood_scores,
                                  scoring::ScoreKind kind,
                                  double tpr_target = 0.95);

nlohmann::json ToJson(const DetectionReport& report);

}  // namespace edge::metrics

#endif  // EDGE_METRICS_DETECTION_H_
