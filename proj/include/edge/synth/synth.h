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

#ifndef EDGE_SYNTH_SYNTH_H_
#define EDGE_SYNTH_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "edge/core/dataset.h"
#include "edge/core/matrix.h"
#include "json.hpp"

namespace edge::synth {

// Long-tailed multi-label Gaussian-prototype benchmark.
//
// Class c has a prototype drawn uniformly on the sphere of radius
// prototype_scale and is picked as a sample's primary class with
// probability proportional to (c + 1)^-zipf_exponent. With probability
// cooccur_prob a second, distinct class is drawn from the same law. A
// sample's features are the mean of its positive prototypes plus isotropic
// Gaussian noise of scale noise_sigma.
//
// The OE and OOD sets each own num_classes outlier prototypes, uniform on
// the sphere of radius prototype_scale + oe_shift and farther than
// 2 * noise_sigma from every ID prototype; their samples are one outlier
// prototype plus the same noise. OE and OOD draw from separate streams, so
// their prototypes differ.
struct SynthSpec {
  std::size_t num_classes = 20;
  std::size_t dim = 32;
  std::size_t n_train = 8000;
  std::size_t n_test = 2000;
  std::size_t n_oe = 2000;
  std::size_t n_ood = 2000;
  double zipf_exponent = 1.2;
  double prototype_scale = 3.0;
  double noise_sigma = 0.6;
  double cooccur_prob = 0.3;
  double oe_shift = -1.0;
  std::uint64_t seed = 0;

  // Throws ParameterError.
  void Validate() const;

  bool operator==(const SynthSpec&) const = default;
};

nlohmann::json ToJson(const SynthSpec& spec);
// Strict: every key required, unknown keys rejected (ConfigError).
SynthSpec SynthSpecFromJson(const nlohmann::json& j);

struct SynthData {
  MultiLabelDataset train;  // "id_train"
  MultiLabelDataset test;   // "id_test"
  MultiLabelDataset oe;     // "oe"
  MultiLabelDataset ood;    // "ood"
  Matrix id_prototypes;     // (C x d)
  Matrix oe_prototypes;
  Matrix ood_prototypes;
  // Row of oe_prototypes / ood_prototypes each outlier sample was drawn from.
  std::vector<std::size_t> oe_components;
  std::vector<std::size_t> ood_components;
};

// Throws GenerationError if outlier prototypes cannot be placed within the
// retry cap.
SynthData Generate(const SynthSpec& spec);

inline constexpr int kPrototypeRetryCap = 10000;

// Structural checks on generated data: sizes and dimensions match the spec,
// features are finite, every ID row has one or two positive classes, only
// ID sets carry labels, outlier prototypes lie at the outlier radius and
// keep their distance from every ID prototype. Returns one message per
// violated check; empty means the data is consistent with `spec`.
std::vector<std::string> CheckInvariants(const SynthSpec& spec, const SynthData& data);

struct ClassFrequency {
  std::size_t class_id = 0;
  std::int64_t count = 0;

  bool operator==(const ClassFrequency&) const = default;
};

// Per-class positive counts sorted descending (ties: lower class id first).
// Throws DataError on an unlabeled dataset.
std::vector<ClassFrequency> ClassFrequencyProfile(const MultiLabelDataset& ds);

}  // namespace edge::synth

#endif  // EDGE_SYNTH_SYNTH_H_
