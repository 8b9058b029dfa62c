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

#ifndef EDGE_OESEL_OESEL_H_
#define EDGE_OESEL_OESEL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edge/core/dataset.h"
#include "edge/core/matrix.h"
#include "edge/model/mlp.h"
#include "json.hpp"

namespace edge::oesel {

// Frobenius norm between diag(top-k singular values of id_features) and
// diag(top-k singular values of oe_features), i.e. the Euclidean distance
// of the two descending spectra truncated to k_svd.
//
// Throws BatchSizeError if the row counts differ and ParameterError unless
// 1 <= k_svd <= min(rows, cols) for both matrices.
double DilationDistance(const Matrix& id_features, const Matrix& oe_features,
                        std::size_t k_svd);

struct DilationOptions {
  std::size_t batch_size = 64;
  std::size_t num_batches = 16;
  std::size_t k_svd = 0;  // 0 means min(batch_size, d1)
  std::uint64_t seed = 0;
  // Recorded verbatim in the report: which model produced the features.
  std::string feature_model = "untrained";
};

struct DilationReport {
  std::string candidate;
  std::vector<double> distances;  // one per batch pair, in draw order
  double mean = 0.0;
  std::size_t k_svd = 0;
  std::size_t batch_size = 0;
  std::size_t num_batches = 0;
  std::string feature_model;
};

// Draws num_batches pairs of equal-sized batches (each set walked through
// its own seeded permutation, reshuffled on exhaustion; both walks seeded
// with options.seed), maps them through the model's penultimate layer, and
// averages DilationDistance over the pairs. Throws DataError if either set
// has fewer than batch_size rows.
DilationReport MeanDilation(const MultiLabelDataset& id_set,
                            const MultiLabelDataset& oe_set,
                            const model::MlpModel& model,
                            const DilationOptions& options);

struct CandidateDistance {
  std::string name;
  double mean = 0.0;
};

// Candidate with the smallest mean distance; ties go to the
// lexicographically smallest name. Throws EmptyInputError on no candidates.
std::string SelectOe(std::span<const CandidateDistance> candidates);
std::string SelectOe(std::span<const DilationReport> reports);

nlohmann::json ToJson(const DilationReport& report);

}  // namespace edge::oesel

#endif  // EDGE_OESEL_OESEL_H_
