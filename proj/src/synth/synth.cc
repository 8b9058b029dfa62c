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

#include "edge/synth/synth.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edge/core/config_reader.h"
#include "edge/core/random.h"
#include "edge/core/status.h"
#include "edge/metrics/tail_curve.h"

namespace edge::synth {
namespace {

enum Stream : std::uint64_t {
  kIdPrototypes = 10,
  kTrain = 11,
  kTest = 12,
  kOePrototypes = 13,
  kOeSamples = 14,
  kOodPrototypes = 15,
  kOodSamples = 16,
};

void RandomOnSphere(std::span<double> out, double radius, Rng& rng) {
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& v : out) {
      v = rng.Normal();
      norm += v * v;
    }
    norm = std::sqrt(norm);
  } while (norm == 0.0);
  for (double& v : out) v *= radius / norm;
}

double Distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent) : cdf_(n) {
    double total = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      total += std::pow(static_cast<double>(c + 1), -exponent);
      cdf_[c] = total;
    }
    for (double& v : cdf_) v /= total;
    cdf_.back() = 1.0;
  }

  std::size_t Sample(Rng& rng) const {
    const double u = rng.Uniform();
    std::size_t c = 0;
    while (c + 1 < cdf_.size() && u >= cdf_[c]) ++c;
    return c;
  }

 private:
  std::vector<double> cdf_;
};

MultiLabelDataset MakeIdSet(const SynthSpec& spec, const Matrix& prototypes,
                            std::size_t n, std::uint64_t stream,
                            const std::string& name) {
  Rng rng(DeriveSeed(spec.seed, stream));
  const ZipfSampler zipf(spec.num_classes, spec.zipf_exponent);
  Matrix features(n, spec.dim);
  LabelMatrix labels(n, spec.num_classes);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t primary = zipf.Sample(rng);
    labels.Set(r, primary, true);
    std::size_t positives = 1;
    if (spec.num_classes > 1 && rng.Bernoulli(spec.cooccur_prob)) {
      std::size_t secondary = zipf.Sample(rng);
      while (secondary == primary) secondary = zipf.Sample(rng);
      labels.Set(r, secondary, true);
      ++positives;
    }
    auto row = features.row(r);
    for (std::size_t c = 0; c < spec.num_classes; ++c) {
      if (labels(r, c) == 0) continue;
      const auto proto = prototypes.row(c);
      for (std::size_t j = 0; j < spec.dim; ++j) row[j] += proto[j];
    }
    for (std::size_t j = 0; j < spec.dim; ++j) {
      row[j] = row[j] / static_cast<double>(positives) +
               spec.noise_sigma * rng.Normal();
    }
  }
  return MultiLabelDataset(name, std::move(features), std::move(labels));
}

Matrix MakeOutlierPrototypes(const SynthSpec& spec, const Matrix& id_prototypes,
                             std::uint64_t stream) {
  Rng rng(DeriveSeed(spec.seed, stream));
  const double radius = spec.prototype_scale + spec.oe_shift;
  const double min_distance = 2.0 * spec.noise_sigma;
  Matrix out(spec.num_classes, spec.dim);
  for (std::size_t p = 0; p < out.rows(); ++p) {
    bool placed = false;
    for (int attempt = 0; attempt < kPrototypeRetryCap && !placed; ++attempt) {
      RandomOnSphere(out.row(p), radius, rng);
      placed = true;
      for (std::size_t c = 0; c < id_prototypes.rows() && placed; ++c) {
        placed = Distance(out.row(p), id_prototypes.row(c)) > min_distance;
      }
    }
    if (!placed) {
      throw GenerationError("could not place outlier prototype " +
                            std::to_string(p) + " farther than " +
                            std::to_string(min_distance) +
                            " from every ID prototype after " +
                            std::to_string(kPrototypeRetryCap) + " attempts");
    }
  }
  return out;
}

MultiLabelDataset MakeOutlierSet(const SynthSpec& spec, const Matrix& prototypes,
                                 std::size_t n, std::uint64_t stream,
                                 const std::string& name,
                                 std::vector<std::size_t>& components) {
  Rng rng(DeriveSeed(spec.seed, stream));
  Matrix features(n, spec.dim);
  components.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    components[r] = rng.Index(prototypes.rows());
    const auto proto = prototypes.row(components[r]);
    auto row = features.row(r);
    for (std::size_t j = 0; j < spec.dim; ++j) {
      row[j] = proto[j] + spec.noise_sigma * rng.Normal();
    }
  }
  return MultiLabelDataset(name, std::move(features));
}

}  // namespace

void SynthSpec::Validate() const {
  auto fail = [](const std::string& what) {
    throw ParameterError("synth spec: " + what);
  };
  if (num_classes < 1) fail("C must be >= 1");
  if (dim < 1) fail("d must be >= 1");
  if (n_train < 1 || n_test < 1 || n_oe < 1 || n_ood < 1) {
    fail("all sample counts must be >= 1");
  }
  if (!(zipf_exponent >= 0.0)) fail("zipf_exponent must be >= 0");
  if (!(prototype_scale > 0.0)) fail("prototype_scale must be > 0");
  if (!(noise_sigma > 0.0)) fail("noise_sigma must be > 0");
  if (!(cooccur_prob >= 0.0 && cooccur_prob <= 1.0)) {
    fail("cooccur_prob must be in [0, 1]");
  }
  if (!(prototype_scale + oe_shift > 0.0)) {
    fail("prototype_scale + oe_shift must be > 0");
  }
}

nlohmann::json ToJson(const SynthSpec& s) {
  return {{"C", s.num_classes},
          {"d", s.dim},
          {"n_train", s.n_train},
          {"n_test", s.n_test},
          {"n_oe", s.n_oe},
          {"n_ood", s.n_ood},
          {"zipf_exponent", s.zipf_exponent},
          {"prototype_scale", s.prototype_scale},
          {"noise_sigma", s.noise_sigma},
          {"cooccur_prob", s.cooccur_prob},
          {"oe_shift", s.oe_shift},
          {"seed", s.seed}};
}

SynthSpec SynthSpecFromJson(const nlohmann::json& j) {
  const ConfigReader r(j, "synth spec",
                       {"C", "d", "n_train", "n_test", "n_oe", "n_ood",
                        "zipf_exponent", "prototype_scale", "noise_sigma",
                        "cooccur_prob", "oe_shift", "seed"});
  SynthSpec s;
  s.num_classes = r.Unsigned("C");
  s.dim = r.Unsigned("d");
  s.n_train = r.Unsigned("n_train");
  s.n_test = r.Unsigned("n_test");
  s.n_oe = r.Unsigned("n_oe");
  s.n_ood = r.Unsigned("n_ood");
  s.zipf_exponent = r.Real("zipf_exponent");
  s.prototype_scale = r.Real("prototype_scale");
  s.noise_sigma = r.Real("noise_sigma");
  s.cooccur_prob = r.Real("cooccur_prob");
  s.oe_shift = r.Real("oe_shift");
  s.seed = r.Unsigned("seed");
  s.Validate();
  return s;
}

SynthData Generate(const SynthSpec& spec) {
  spec.Validate();
  Matrix id_prototypes(spec.num_classes, spec.dim);
  Rng proto_rng(DeriveSeed(spec.seed, kIdPrototypes));
  for (std::size_t c = 0; c < spec.num_classes; ++c) {
    RandomOnSphere(id_prototypes.row(c), spec.prototype_scale, proto_rng);
  }
  Matrix oe_prototypes = MakeOutlierPrototypes(spec, id_prototypes, kOePrototypes);
  Matrix ood_prototypes =
      MakeOutlierPrototypes(spec, id_prototypes, kOodPrototypes);

  SynthData data;
  data.train = MakeIdSet(spec, id_prototypes, spec.n_train, kTrain, "id_train");
  data.test = MakeIdSet(spec, id_prototypes, spec.n_test, kTest, "id_test");
  data.oe = MakeOutlierSet(spec, oe_prototypes, spec.n_oe, kOeSamples, "oe",
                           data.oe_components);
  data.ood = MakeOutlierSet(spec, ood_prototypes, spec.n_ood, kOodSamples, "ood",
                            data.ood_components);
  data.id_prototypes = std::move(id_prototypes);
  data.oe_prototypes = std::move(oe_prototypes);
  data.ood_prototypes = std::move(ood_prototypes);
  return data;
}

std::vector<ClassFrequency> ClassFrequencyProfile(const MultiLabelDataset& ds) {
  const std::vector<std::int64_t> counts = ds.RequireLabels().ColumnSums();
  std::vector<ClassFrequency> out;
  for (const std::size_t c : metrics::HeadClassOrder(counts)) {
    out.push_back({c, counts[c]});
  }
  return out;
}

std::vector<std::string> CheckInvariants(const SynthSpec& spec, const SynthData& data) {
  std::vector<std::string> problems;
  auto check = [&problems](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  const struct {
    const MultiLabelDataset* ds;
    std::size_t rows;
    bool labeled;
  } sets[] = {{&data.train, spec.n_train, true},
              {&data.test, spec.n_test, true},
              {&data.oe, spec.n_oe, false},
              {&data.ood, spec.n_ood, false}};
  for (const auto& s : sets) {
    const std::string& name = s.ds->name();
    check(s.ds->size() == s.rows, name + ": row count differs from the spec");
    check(s.ds->dim() == spec.dim, name + ": feature dim differs from the spec");
    check(AllFinite(s.ds->features()), name + ": non-finite feature");
    check(s.ds->labeled() == s.labeled,
          name + (s.labeled ? ": labels missing" : ": unexpected labels"));
    if (!s.labeled || !s.ds->labeled()) continue;
    const LabelMatrix& y = *s.ds->labels();
    check(y.cols() == spec.num_classes, name + ": class count differs from the spec");
    std::size_t bad_rows = 0;
    for (std::size_t r = 0; r < y.rows(); ++r) {
      int positives = 0;
      for (const std::uint8_t v : y.row(r)) positives += v;
      bad_rows += positives < 1 || positives > 2;
    }
    check(bad_rows == 0,
          name + ": " + std::to_string(bad_rows) + " rows without 1 or 2 positive classes");
  }
  const double radius = spec.prototype_scale + spec.oe_shift;
  const double tolerance = 1e-9 * std::max(1.0, radius);
  for (const Matrix* outliers : {&data.oe_prototypes, &data.ood_prototypes}) {
    for (std::size_t p = 0; p < outliers->rows(); ++p) {
      const std::vector<double> origin(spec.dim, 0.0);
      check(std::abs(Distance(outliers->row(p), origin) - radius) <= tolerance,
            "outlier prototype " + std::to_string(p) + " is off the outlier sphere");
      for (std::size_t c = 0; c < data.id_prototypes.rows(); ++c) {
        check(Distance(outliers->row(p), data.id_prototypes.row(c)) >
                  2.0 * spec.noise_sigma,
              "outlier prototype " + std::to_string(p) + " is too close to ID class " +
                  std::to_string(c));
      }
    }
  }
  return problems;
}

}  // namespace edge::synth
