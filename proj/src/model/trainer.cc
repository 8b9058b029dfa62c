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

#include "edge/model/trainer.h"

#include <cmath>
#include <sstream>

#include "edge/core/csv.h"
#include "edge/core/random.h"
#include "edge/core/status.h"
#include "edge/losses/losses.h"

namespace edge::model {
namespace {

enum Stream : std::uint64_t { kInitStream = 0, kIdStream = 1, kOeStream = 2 };

class SgdMomentum {
 public:
  SgdMomentum(const MlpModel& model, const EdgeConfig& config)
      : config_(config), velocity_(MlpGradients::ZerosLike(model)) {}

  void Step(MlpModel& model, const MlpGradients& grad) {
    Update(model.w1().data(), grad.w1.data(), velocity_.w1.data());
    Update(model.b1(), grad.b1, velocity_.b1);
    Update(model.w_cls().data(), grad.w_cls.data(), velocity_.w_cls.data());
    Update(model.b_cls(), grad.b_cls, velocity_.b_cls);
  }

 private:
  void Update(std::span<double> params, std::span<const double> grad,
              std::span<double> velocity) const {
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double g = grad[i] + config_.weight_decay * params[i];
      velocity[i] = config_.momentum * velocity[i] + g;
      params[i] -= config_.learning_rate * velocity[i];
    }
  }

  const EdgeConfig& config_;
  MlpGradients velocity_;
};

// Cycles through a dataset in shuffled order, reshuffling on exhaustion.
class CyclingSampler {
 public:
  CyclingSampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}

  std::vector<std::size_t> Next(std::size_t count) {
    std::vector<std::size_t> out;
    out.reserve(count);
    while (out.size() < count) {
      if (cursor_ == order_.size()) {
        order_ = rng_.Permutation(n_);
        cursor_ = 0;
      }
      out.push_back(order_[cursor_++]);
    }
    return out;
  }

 private:
  std::size_t n_;
  Rng rng_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
};

[[noreturn]] void ThrowNonFinite(std::size_t epoch, std::size_t step,
                                 const char* what) {
  std::ostringstream os;
  os << "non-finite " << what << " at epoch " << epoch << ", step " << step;
  throw NumericError(os.str());
}

TrainResult Train(const MultiLabelDataset& d_in, const MultiLabelDataset* d_oe,
                  const EdgeConfig& config) {
  config.Validate();
  const LabelMatrix& labels = d_in.RequireLabels();
  if (d_in.size() < config.k) {
    throw DataError("ID training set has " + std::to_string(d_in.size()) +
                    " rows, fewer than k=" + std::to_string(config.k));
  }
  if (d_oe != nullptr) {
    if (d_oe->labeled()) throw DataError("OE dataset must be unlabeled");
    if (d_oe->size() == 0) throw DataError("OE dataset is empty");
    if (d_oe->dim() != d_in.dim()) {
      throw ShapeError("OE feature dim " + std::to_string(d_oe->dim()) +
                       " vs ID feature dim " + std::to_string(d_in.dim()));
    }
  }

  Rng init_rng(DeriveSeed(config.seed, kInitStream));
  Rng id_rng(DeriveSeed(config.seed, kIdStream));
  TrainResult result{MlpModel::Initialize(d_in.dim(), config.hidden_dim,
                                          labels.cols(), init_rng),
                     {}};
  MlpModel& model = result.model;
  SgdMomentum optimizer(model, config);
  CyclingSampler oe_sampler(d_oe ? d_oe->size() : 0,
                            DeriveSeed(config.seed, kOeStream));

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double beta_eff = epoch < config.transform_epoch ? 0.0 : config.beta;
    losses::EdgeWeights weights = config.weights();
    weights.beta = beta_eff;
    EpochRecord record;
    record.epoch = epoch;
    record.beta_effective = beta_eff;

    const std::vector<std::size_t> order = id_rng.Permutation(d_in.size());
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t count = std::min(config.batch_size, order.size() - start);
      if (count < config.k) break;
      const std::span<const std::size_t> rows(order.data() + start, count);
      const Matrix x = d_in.features().SelectRows(rows);
      const LabelMatrix y = labels.SelectRows(rows);
      const ForwardResult id_fwd = Forward(model, x);

      double step_total = 0.0;
      MlpGradients grad = MlpGradients::ZerosLike(model);
      if (d_oe == nullptr) {
        const losses::LossValue id = losses::LossId(id_fwd.logits, y);
        record.loss_id += id.value;
        step_total = id.value;
        grad = Backward(model, x, id_fwd.features, id.grad);
      } else {
        const std::vector<std::size_t> oe_rows = oe_sampler.Next(count);
        const Matrix x_oe = d_oe->features().SelectRows(oe_rows);
        const ForwardResult oe_fwd = Forward(model, x_oe);
        const losses::EdgeLossValue loss =
            losses::LossEdge(id_fwd.logits, y, oe_fwd.logits, weights);
        record.loss_id += loss.id;
        record.loss_conf += loss.conf;
        record.loss_gap += loss.gap;
        step_total = loss.value;
        grad = Backward(model, x, id_fwd.features, loss.id_grad);
        grad += Backward(model, x_oe, oe_fwd.features, loss.oe_grad);
      }
      if (!std::isfinite(step_total)) {
        ThrowNonFinite(epoch, record.steps, "loss");
      }
      record.total += step_total;
      optimizer.Step(model, grad);
      if (!model.AllFinite()) ThrowNonFinite(epoch, record.steps, "parameters");
      ++record.steps;
    }
    if (record.steps == 0) {
      throw DataError("epoch " + std::to_string(epoch) + " produced no batches");
    }
    const double steps = static_cast<double>(record.steps);
    record.loss_id /= steps;
    record.loss_conf /= steps;
    record.loss_gap /= steps;
    record.total /= steps;
    result.history.epochs.push_back(record);
  }
  return result;
}

}  // namespace

TrainResult TrainEdge(const MultiLabelDataset& d_in,
                      const MultiLabelDataset& d_oe, const EdgeConfig& config) {
  return Train(d_in, &d_oe, config);
}

TrainResult TrainBce(const MultiLabelDataset& d_in, const EdgeConfig& config) {
  return Train(d_in, nullptr, config);
}

void WriteHistoryCsv(const std::filesystem::path& path,
                     const TrainHistory& history) {
  CsvTable table;
  table.header = {"epoch",    "steps", "loss_id",       "loss_conf",
                  "loss_gap", "total", "beta_effective"};
  for (const EpochRecord& r : history.epochs) {
    table.rows.push_back({std::to_string(r.epoch), std::to_string(r.steps),
                          FormatDouble(r.loss_id), FormatDouble(r.loss_conf),
                          FormatDouble(r.loss_gap), FormatDouble(r.total),
                          FormatDouble(r.beta_effective)});
  }
  WriteCsv(path, table);
}

}  // namespace edge::model
