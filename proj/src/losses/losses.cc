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

#include "edge/losses/losses.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "edge/core/numeric.h"
#include "edge/core/status.h"
#include "edge/scoring/scoring.h"

namespace edge::losses {

LossValue LossId(const Matrix& logits, const LabelMatrix& labels) {
  if (logits.rows() != labels.rows() || logits.cols() != labels.cols()) {
    throw ShapeError("loss_id: logits " + logits.ShapeString() + " vs labels " +
                     labels.ShapeString());
  }
  if (logits.empty()) throw EmptyInputError("loss_id on an empty batch");
  const double scale =
      1.0 / static_cast<double>(logits.cols() * logits.rows());
  LossValue out{0.0, Matrix(logits.rows(), logits.cols())};
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    for (std::size_t c = 0; c < logits.cols(); ++c) {
      const double f = logits(r, c);
      const bool positive = labels(r, c) != 0;
      // -log sigmoid(f) = softplus(-f); -log(1 - sigmoid(f)) = softplus(f).
      out.value += positive ? Softplus(-f) : Softplus(f);
      out.grad(r, c) = (Sigmoid(f) - (positive ? 1.0 : 0.0)) * scale;
    }
  }
  out.value *= scale;
  return out;
}

LossValue LossConf(const Matrix& oe_logits) {
  if (oe_logits.empty()) throw EmptyInputError("loss_conf on an empty OE batch");
  const double scale =
      1.0 / static_cast<double>(oe_logits.cols() * oe_logits.rows());
  LossValue out{0.0, Matrix(oe_logits.rows(), oe_logits.cols())};
  for (std::size_t r = 0; r < oe_logits.rows(); ++r) {
    for (std::size_t c = 0; c < oe_logits.cols(); ++c) {
      const double f = oe_logits(r, c);
      out.value += Softplus(f);
      out.grad(r, c) = Sigmoid(f) * scale;
    }
  }
  out.value *= scale;
  return out;
}

BottomK BottomKEnergy(const Matrix& id_logits, std::size_t k) {
  if (k < 1 || k > id_logits.rows()) {
    throw ParameterError("bottom-k: k=" + std::to_string(k) +
                         " outside [1, " + std::to_string(id_logits.rows()) + "]");
  }
  std::vector<double> energies(id_logits.rows());
  for (std::size_t r = 0; r < id_logits.rows(); ++r) {
    energies[r] = scoring::JointEnergy(id_logits.row(r));
  }
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return energies[a] < energies[b];
  });
  BottomK out;
  out.rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  for (const std::size_t r : out.rows) out.value += energies[r];
  out.value /= static_cast<double>(k);
  return out;
}

PairLossValue LossGap(const Matrix& id_logits, const Matrix& oe_logits,
                      std::size_t k, double margin) {
  if (id_logits.empty()) throw EmptyInputError("loss_gap on an empty ID batch");
  if (oe_logits.empty()) throw EmptyInputError("loss_gap on an empty OE batch");
  if (id_logits.cols() != oe_logits.cols()) {
    throw ShapeError("loss_gap: ID logits " + id_logits.ShapeString() +
                     " vs OE logits " + oe_logits.ShapeString());
  }
  const BottomK bottom = BottomKEnergy(id_logits, k);
  const double n_oe = static_cast<double>(oe_logits.rows());

  PairLossValue out{0.0, Matrix(id_logits.rows(), id_logits.cols()),
                    Matrix(oe_logits.rows(), oe_logits.cols())};
  std::size_t active = 0;
  for (std::size_t r = 0; r < oe_logits.rows(); ++r) {
    const double hinge =
        scoring::JointEnergy(oe_logits.row(r)) - bottom.value + margin;
    if (hinge <= 0.0) continue;
    ++active;
    out.value += hinge;
    for (std::size_t c = 0; c < oe_logits.cols(); ++c) {
      out.oe_grad(r, c) = Sigmoid(oe_logits(r, c)) / n_oe;
    }
  }
  out.value /= n_oe;
  if (active > 0) {
    const double coeff =
        -(static_cast<double>(active) / n_oe) / static_cast<double>(k);
    for (const std::size_t r : bottom.rows) {
      for (std::size_t c = 0; c < id_logits.cols(); ++c) {
        out.id_grad(r, c) = coeff * Sigmoid(id_logits(r, c));
      }
    }
  }
  return out;
}

EdgeLossValue LossEdge(const Matrix& id_logits, const LabelMatrix& labels,
                       const Matrix& oe_logits, const EdgeWeights& weights) {
  if (weights.alpha < 0.0 || weights.beta < 0.0 || weights.margin < 0.0) {
    throw ParameterError("loss_edge: alpha, beta and margin must be >= 0");
  }
  LossValue id = LossId(id_logits, labels);
  LossValue conf = LossConf(oe_logits);
  if (conf.grad.cols() != id.grad.cols()) {
    throw ShapeError("loss_edge: ID logits " + id_logits.ShapeString() +
                     " vs OE logits " + oe_logits.ShapeString());
  }

  EdgeLossValue out;
  out.id = id.value;
  out.conf = conf.value;
  out.id_grad = std::move(id.grad);
  out.oe_grad = Matrix(oe_logits.rows(), oe_logits.cols());
  for (std::size_t i = 0; i < out.oe_grad.size(); ++i) {
    out.oe_grad.data()[i] = weights.alpha * conf.grad.data()[i];
  }
  const PairLossValue gap =
      LossGap(id_logits, oe_logits, weights.k, weights.margin);
  out.gap = gap.value;
  if (weights.beta != 0.0) {
    for (std::size_t i = 0; i < out.id_grad.size(); ++i) {
      out.id_grad.data()[i] += weights.beta * gap.id_grad.data()[i];
    }
    for (std::size_t i = 0; i < out.oe_grad.size(); ++i) {
      out.oe_grad.data()[i] += weights.beta * gap.oe_grad.data()[i];
    }
  }
  out.value = out.id + weights.alpha * out.conf + weights.beta * out.gap;
  return out;
}

}  // namespace edge::losses
