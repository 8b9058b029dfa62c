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

#include "edge/oesel/oesel.h"

#include <algorithm>
#include <cmath>

#include "edge/core/random.h"
#include "edge/core/status.h"
#include "edge/core/svd.h"

namespace edge::oesel {
namespace {

void CheckRank(const Matrix& m, std::size_t k_svd, const char* which) {
  const std::size_t rank = std::min(m.rows(), m.cols());
  if (k_svd < 1 || k_svd > rank) {
    throw ParameterError("dilation distance: k_svd=" + std::to_string(k_svd) +
                         " outside [1, " + std::to_string(rank) + "] for " +
                         which + " features " + m.ShapeString());
  }
}

class BatchWalk {
 public:
  BatchWalk(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}

  std::vector<std::size_t> Next(std::size_t count) {
    if (cursor_ + count > order_.size()) {
      order_ = rng_.Permutation(n_);
      cursor_ = 0;
    }
    std::vector<std::size_t> out(order_.begin() + cursor_,
                                 order_.begin() + cursor_ + count);
    cursor_ += count;
    return out;
  }

 private:
  std::size_t n_;
  Rng rng_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
};

}  // namespace

double DilationDistance(const Matrix& id_features, const Matrix& oe_features,
                        std::size_t k_svd) {
  if (id_features.rows() != oe_features.rows()) {
    throw BatchSizeError("dilation distance: ID batch has " +
                         std::to_string(id_features.rows()) + " rows, OE batch " +
                         std::to_string(oe_features.rows()));
  }
  CheckRank(id_features, k_svd, "ID");
  CheckRank(oe_features, k_svd, "OE");
  const std::vector<double> s_id = SingularValues(id_features);
  const std::vector<double> s_oe = SingularValues(oe_features);
  double sum = 0.0;
  for (std::size_t j = 0; j < k_svd; ++j) {
    const double d = s_id[j] - s_oe[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DilationReport MeanDilation(const MultiLabelDataset& id_set,
                            const MultiLabelDataset& oe_set,
                            const model::MlpModel& model,
                            const DilationOptions& options) {
  if (options.batch_size == 0 || options.num_batches == 0) {
    throw ParameterError("dilation: batch_size and num_batches must be positive");
  }
  for (const MultiLabelDataset* ds : {&id_set, &oe_set}) {
    if (ds->size() < options.batch_size) {
      throw DataError("dilation: set '" + ds->name() + "' has " +
                      std::to_string(ds->size()) + " rows, fewer than batch_size " +
                      std::to_string(options.batch_size));
    }
  }
  DilationReport report;
  report.candidate = oe_set.name();
  report.batch_size = options.batch_size;
  report.num_batches = options.num_batches;
  report.feature_model = options.feature_model;
  report.k_svd = options.k_svd != 0
                     ? options.k_svd
                     : std::min(options.batch_size, model.hidden_dim());

  BatchWalk id_walk(id_set.size(), options.seed);
  BatchWalk oe_walk(oe_set.size(), options.seed);
  double sum = 0.0;
  for (std::size_t b = 0; b < options.num_batches; ++b) {
    const auto id_rows = id_walk.Next(options.batch_size);
    const auto oe_rows = oe_walk.Next(options.batch_size);
    const Matrix id_features =
        model::Features(model, id_set.features().SelectRows(id_rows));
    const Matrix oe_features =
        model::Features(model, oe_set.features().SelectRows(oe_rows));
    const double d = DilationDistance(id_features, oe_features, report.k_svd);
    report.distances.push_back(d);
    sum += d;
  }
  report.mean = sum / static_cast<double>(options.num_batches);
  return report;
}

std::string SelectOe(std::span<const CandidateDistance> candidates) {
  if (candidates.empty()) throw EmptyInputError("select_oe: no candidates");
  const CandidateDistance* best = &candidates[0];
  for (const CandidateDistance& c : candidates.subspan(1)) {
    if (c.mean < best->mean || (c.mean == best->mean && c.name < best->name)) {
      best = &c;
    }
  }
  return best->name;
}

std::string SelectOe(std::span<const DilationReport> reports) {
  std::vector<CandidateDistance> candidates;
  candidates.reserve(reports.size());
  for (const DilationReport& r : reports) candidates.push_back({r.candidate, r.mean});
  return SelectOe(candidates);
}

nlohmann::json ToJson(const DilationReport& report) {
  return {{"candidate", report.candidate},
          {"mean_distance", report.mean},
          {"distances", report.distances},
          {"k_svd", report.k_svd},
          {"batch_size", report.batch_size},
          {"num_batches", report.num_batches},
          {"feature_model", report.feature_model}};
}

}  // namespace edge::oesel
