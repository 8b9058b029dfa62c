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

#include "edge/scoring/scoring.h"

#include <algorithm>
#include <cmath>

#include "edge/core/csv.h"
#include "edge/core/numeric.h"
#include "edge/core/status.h"

namespace edge::scoring {
namespace {

void RequireNonEmpty(std::span<const double> logits) {
  if (logits.empty()) throw ShapeError("score of an empty logit row");
}

}  // namespace

std::string_view ScoreKindName(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kMaxLogit:
      return "MaxLogit";
    case ScoreKind::kMsp:
      return "MSP";
    case ScoreKind::kMaxEnergy:
      return "MaxEnergy";
    case ScoreKind::kJointEnergy:
      return "JointEnergy";
  }
  return "unknown";
}

ScoreKind ParseScoreKind(std::string_view name) {
  for (const ScoreKind kind : AllScoreKinds()) {
    if (ScoreKindName(kind) == name) return kind;
  }
  throw ParameterError("unknown score kind '" + std::string(name) +
                       "' (expected MaxLogit, MSP, MaxEnergy or JointEnergy)");
}

std::vector<ScoreKind> AllScoreKinds() {
  return {ScoreKind::kMaxLogit, ScoreKind::kMsp, ScoreKind::kMaxEnergy,
          ScoreKind::kJointEnergy};
}

double JointEnergy(std::span<const double> logits) {
  RequireNonEmpty(logits);
  double sum = 0.0;
  for (const double f : logits) sum += Softplus(f);
  return sum;
}

double MaxEnergy(std::span<const double> logits) {
  RequireNonEmpty(logits);
  // softplus is monotone, so the max energy is the energy of the max logit.
  return Softplus(*std::max_element(logits.begin(), logits.end()));
}

double MaxLogit(std::span<const double> logits) {
  RequireNonEmpty(logits);
  return *std::max_element(logits.begin(), logits.end());
}

double Msp(std::span<const double> logits) {
  RequireNonEmpty(logits);
  const double top = *std::max_element(logits.begin(), logits.end());
  double denom = 0.0;
  for (const double f : logits) denom += std::exp(f - top);
  return 1.0 / denom;
}

double Score(std::span<const double> logits, ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kMaxLogit:
      return MaxLogit(logits);
    case ScoreKind::kMsp:
      return Msp(logits);
    case ScoreKind::kMaxEnergy:
      return MaxEnergy(logits);
    case ScoreKind::kJointEnergy:
      return JointEnergy(logits);
  }
  throw ParameterError("unknown score kind");
}

ScoreVector ScoreDataset(const Matrix& logits, ScoreKind kind,
                         std::string source) {
  ScoreVector out{{}, kind, std::move(source)};
  out.values.reserve(logits.rows());
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    out.values.push_back(Score(logits.row(r), kind));
  }
  return out;
}

Decision Decide(double score, double gamma) {
  return score >= gamma ? Decision::kId : Decision::kOod;
}

Histogram ScoreHistogram(std::span<const double> scores, std::size_t bins) {
  if (bins == 0) throw ParameterError("histogram needs at least one bin");
  if (scores.empty()) throw EmptyInputError("histogram of an empty score vector");
  const auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
  double lo = *min_it;
  double hi = *max_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  Histogram hist;
  hist.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    hist.edges[b] = lo + width * static_cast<double>(b);
  }
  hist.edges[bins] = hi;
  hist.counts.assign(bins, 0);
  for (const double s : scores) {
    auto b = static_cast<std::size_t>((s - lo) / width);
    b = std::min(b, bins - 1);
    ++hist.counts[b];
  }
  return hist;
}

void WriteScoresCsv(const std::filesystem::path& path, const ScoreVector& scores) {
  CsvTable table;
  table.header = {"sample_index", "score"};
  table.rows.reserve(scores.values.size());
  for (std::size_t i = 0; i < scores.values.size(); ++i) {
    table.rows.push_back({std::to_string(i), FormatDouble(scores.values[i])});
  }
  WriteCsv(path, table);
}

ScoreVector ReadScoresCsv(const std::filesystem::path& path) {
  const CsvTable table = ReadCsv(path);
  if (table.header.size() != 2 || table.header[0] != "sample_index" ||
      table.header[1] != "score") {
    throw DataError(path.string() + ": expected header sample_index,score");
  }
  ScoreVector out;
  out.source = path.stem().string();
  out.values.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (ParseInteger(table.rows[i][0]) != static_cast<long long>(i)) {
      throw DataError(path.string() + ": sample_index out of order at row " +
                      std::to_string(i));
    }
    out.values.push_back(ParseDouble(table.rows[i][1]));
  }
  return out;
}

void WriteHistogramCsv(const std::filesystem::path& path, const Histogram& hist) {
  CsvTable table;
  table.header = {"bin_left", "bin_right", "count"};
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    table.rows.push_back({FormatDouble(hist.edges[b]),
                          FormatDouble(hist.edges[b + 1]),
                          std::to_string(hist.counts[b])});
  }
  WriteCsv(path, table);
}

}  // namespace edge::scoring
