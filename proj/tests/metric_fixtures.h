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

#ifndef EDGE_TESTS_METRIC_FIXTURES_H_
#define EDGE_TESTS_METRIC_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "edge/core/matrix.h"
#include "edge/core/random.h"

namespace edge::test {

// Scores drawn from a coarse grid so that ties, within and across the two
// sides, are common.
struct DetectionFixture {
  std::vector<double> id;
  std::vector<double> ood;
};

inline DetectionFixture RandomDetectionFixture(std::uint64_t seed) {
  Rng rng(seed);
  DetectionFixture f;
  const std::size_t n_id = 1 + rng.Index(100);
  const std::size_t n_ood = 1 + rng.Index(100);
  const double levels = static_cast<double>(2 + rng.Index(40));
  const double shift = rng.Uniform(-1.0, 2.0);
  for (std::size_t i = 0; i < n_id; ++i) {
    f.id.push_back(std::round(levels * (rng.Normal() + shift) / 4.0));
  }
  for (std::size_t i = 0; i < n_ood; ++i) {
    f.ood.push_back(std::round(levels * rng.Normal() / 4.0));
  }
  return f;
}

struct RankingFixture {
  Matrix scores;
  LabelMatrix labels;
};

// At most 200 scores in total; some classes may have no positives.
inline RankingFixture RandomRankingFixture(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t cols = 1 + rng.Index(5);
  const std::size_t rows = 2 + rng.Index(200 / cols - 1);
  RankingFixture f{Matrix(rows, cols), LabelMatrix(rows, cols)};
  for (std::size_t c = 0; c < cols; ++c) {
    const double p = c == 0 ? 0.5 : rng.Uniform(0.0, 0.6);
    for (std::size_t r = 0; r < rows; ++r) {
      const bool positive = rng.Bernoulli(p);
      f.labels.Set(r, c, positive);
      f.scores(r, c) = std::round(4.0 * (rng.Normal() + (positive ? 0.8 : 0.0)));
    }
  }
  f.labels.Set(0, 0, true);
  return f;
}

}  // namespace edge::test

#endif  // EDGE_TESTS_METRIC_FIXTURES_H_
