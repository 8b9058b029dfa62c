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

#include "edge/metrics/detection.h"

#include <algorithm>
#include <functional>
#include <vector>

#include "edge/core/status.h"

namespace edge::metrics {
namespace {

void RequireBoth(std::span<const double> id, std::span<const double> ood,
                 const char* metric) {
  if (id.empty() || ood.empty()) {
    throw EmptyInputError(std::string(metric) + " needs non-empty ID and OOD scores");
  }
}

std::vector<double> SortedDescending(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

double Auroc(std::span<const double> id_scores, std::span<const double> ood_scores) {
  RequireBoth(id_scores, ood_scores, "auroc");
  std::vector<double> ood(ood_scores.begin(), ood_scores.end());
  std::sort(ood.begin(), ood.end());
  // Twice the Mann-Whitney U statistic, kept integral.
  unsigned long long twice_u = 0;
  for (const double s : id_scores) {
    const auto lo = std::lower_bound(ood.begin(), ood.end(), s);
    const auto hi = std::upper_bound(lo, ood.end(), s);
    twice_u += 2ULL * static_cast<unsigned long long>(lo - ood.begin()) +
               static_cast<unsigned long long>(hi - lo);
  }
  return static_cast<double>(twice_u) /
         (2.0 * static_cast<double>(id_scores.size()) *
          static_cast<double>(ood_scores.size()));
}

double FprAtTpr(std::span<const double> id_scores,
                std::span<const double> ood_scores, double tpr_target) {
  RequireBoth(id_scores, ood_scores, "fpr_at_tpr");
  if (!(tpr_target > 0.0 && tpr_target <= 1.0)) {
    throw ParameterError("tpr target must be in (0, 1]");
  }
  const std::vector<double> id = SortedDescending(id_scores);
  const double n_id = static_cast<double>(id.size());
  std::size_t count = 1;
  while (count < id.size() && static_cast<double>(count) / n_id < tpr_target) {
    ++count;
  }
  const double gamma = id[count - 1];
  const auto false_positives =
      std::count_if(ood_scores.begin(), ood_scores.end(),
                    [gamma](double s) { return s >= gamma; });
  return static_cast<double>(false_positives) /
         static_cast<double>(ood_scores.size());
}

double Aupr(std::span<const double> id_scores, std::span<const double> ood_scores) {
  RequireBoth(id_scores, ood_scores, "aupr");
  struct Entry {
    double score;
    bool positive;
  };
  std::vector<Entry> entries;
  entries.reserve(id_scores.size() + ood_scores.size());
  for (const double s : id_scores) entries.push_back({s, true});
  for (const double s : ood_scores) entries.push_back({s, false});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.score > b.score; });

  const double n_pos = static_cast<double>(id_scores.size());
  std::size_t tp = 0;
  std::size_t fp = 0;
  double prev_recall = 0.0;
  double area = 0.0;
  for (std::size_t i = 0; i < entries.size();) {
    const double threshold = entries[i].score;
    for (; i < entries.size() && entries[i].score == threshold; ++i) {
      entries[i].positive ? ++tp : ++fp;
    }
    const double recall = static_cast<double>(tp) / n_pos;
    const double precision =
        static_cast<double>(tp) / static_cast<double>(tp + fp);
    area += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  return area;
}

DetectionReport EvaluateDetection(std::span<const double> id_scores,
                                  std::span<const double> ood_scores,
                                  scoring::ScoreKind kind, double tpr_target) {
  DetectionReport r;
  r.fpr95 = FprAtTpr(id_scores, ood_scores, tpr_target);
  r.auroc = Auroc(id_scores, ood_scores);
  r.aupr = Aupr(id_scores, ood_scores);
  r.n_id = id_scores.size();
  r.n_ood = ood_scores.size();
  r.kind = kind;
  r.tpr_target = tpr_target;
  return r;
}

nlohmann::json ToJson(const DetectionReport& report) {
  return {{"score_kind", std::string(scoring::ScoreKindName(report.kind))},
          {"tpr_target", report.tpr_target},
          {"fpr95", report.fpr95},
          {"auroc", report.auroc},
          {"aupr", report.aupr},
          {"n_id", report.n_id},
          {"n_ood", report.n_ood}};
}

}  // namespace edge::metrics
