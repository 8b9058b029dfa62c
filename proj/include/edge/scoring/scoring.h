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

#ifndef EDGE_SCORING_SCORING_H_
#define EDGE_SCORING_SCORING_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edge/core/matrix.h"

namespace edge::scoring {

// Higher score means "more in-distribution" for every kind.
enum class ScoreKind { kMaxLogit, kMsp, kMaxEnergy, kJointEnergy };

std::string_view ScoreKindName(ScoreKind kind);
// Accepts the names produced by ScoreKindName. Throws ParameterError.
ScoreKind ParseScoreKind(std::string_view name);
std::vector<ScoreKind> AllScoreKinds();

struct ScoreVector {
  std::vector<double> values;
  ScoreKind kind = ScoreKind::kJointEnergy;
  std::string source;
};

// Sum of label-wise energies softplus(f_i) over the row.
double JointEnergy(std::span<const double> logits);
// Largest label-wise energy max_i softplus(f_i).
double MaxEnergy(std::span<const double> logits);
double MaxLogit(std::span<const double> logits);
// Largest softmax probability over the C logits (max-subtracted).
double Msp(std::span<const double> logits);

double Score(std::span<const double> logits, ScoreKind kind);

// Row-wise Score; an empty matrix yields an empty vector.
ScoreVector ScoreDataset(const Matrix& logits, ScoreKind kind,
                         std::string source = {});

enum class Decision { kId, kOod };

// ID iff score >= gamma.
Decision Decide(double score, double gamma);

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::int64_t> counts;
};

// Equal-width bins over [min, max]; the last bin is closed on the right.
// A constant input is binned over [v - 0.5, v + 0.5].
Histogram ScoreHistogram(std::span<const double> scores, std::size_t bins);

// CSV with columns (sample_index, score).
void WriteScoresCsv(const std::filesystem::path& path, const ScoreVector& scores);
ScoreVector ReadScoresCsv(const std::filesystem::path& path);
// CSV with columns (bin_left, bin_right, count).
void WriteHistogramCsv(const std::filesystem::path& path, const Histogram& hist);

}  // namespace edge::scoring

#endif  // EDGE_SCORING_SCORING_H_
