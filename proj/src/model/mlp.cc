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

#include "edge/model/mlp.h"

#include <cmath>

#include "edge/core/status.h"

namespace edge::model {
namespace {

void FillUniform(std::span<double> values, double bound, Rng& rng) {
  for (double& v : values) v = rng.Uniform(-bound, bound);
}

bool Finite(std::span<const double> values) {
  for (const double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

MlpModel::MlpModel(std::size_t input_dim, std::size_t hidden_dim,
                   std::size_t num_classes)
    : w1_(input_dim, hidden_dim),
      b1_(hidden_dim, 0.0),
      w_cls_(hidden_dim, num_classes),
      b_cls_(num_classes, 0.0) {
  if (input_dim == 0 || hidden_dim == 0 || num_classes == 0) {
    throw ParameterError("model dimensions must be positive");
  }
}

MlpModel MlpModel::Initialize(std::size_t input_dim, std::size_t hidden_dim,
                              std::size_t num_classes, Rng& rng) {
  MlpModel m(input_dim, hidden_dim, num_classes);
  const double bound1 = 1.0 / std::sqrt(static_cast<double>(input_dim));
  const double bound2 = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
  FillUniform(m.w1_.data(), bound1, rng);
  FillUniform(m.b1_, bound1, rng);
  FillUniform(m.w_cls_.data(), bound2, rng);
  FillUniform(m.b_cls_, bound2, rng);
  return m;
}

bool MlpModel::AllFinite() const {
  return Finite(w1_.data()) && Finite(b1_) && Finite(w_cls_.data()) &&
         Finite(b_cls_);
}

ForwardResult Forward(const MlpModel& model, const Matrix& x) {
  if (x.cols() != model.input_dim()) {
    throw ShapeError("forward: input " + x.ShapeString() + " vs w1 " +
                     model.w1().ShapeString());
  }
  ForwardResult out;
  out.features = Matmul(x, model.w1());
  for (std::size_t r = 0; r < out.features.rows(); ++r) {
    auto row = out.features.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double pre = row[j] + model.b1()[j];
      row[j] = pre > 0.0 ? pre : 0.0;
    }
  }
  out.logits = Matmul(out.features, model.w_cls());
  for (std::size_t r = 0; r < out.logits.rows(); ++r) {
    auto row = out.logits.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) row[c] += model.b_cls()[c];
  }
  return out;
}

Matrix Features(const MlpModel& model, const Matrix& x) {
  return Forward(model, x).features;
}

MlpGradients MlpGradients::ZerosLike(const MlpModel& model) {
  return {Matrix(model.input_dim(), model.hidden_dim()),
          std::vector<double>(model.hidden_dim(), 0.0),
          Matrix(model.hidden_dim(), model.num_classes()),
          std::vector<double>(model.num_classes(), 0.0)};
}

MlpGradients& MlpGradients::operator+=(const MlpGradients& other) {
  for (std::size_t i = 0; i < w1.size(); ++i) w1.data()[i] += other.w1.data()[i];
  for (std::size_t i = 0; i < b1.size(); ++i) b1[i] += other.b1[i];
  for (std::size_t i = 0; i < w_cls.size(); ++i) {
    w_cls.data()[i] += other.w_cls.data()[i];
  }
  for (std::size_t i = 0; i < b_cls.size(); ++i) b_cls[i] += other.b_cls[i];
  return *this;
}

MlpGradients Backward(const MlpModel& model, const Matrix& x,
                      const Matrix& features, const Matrix& grad_logits) {
  if (x.cols() != model.input_dim() || features.rows() != x.rows() ||
      features.cols() != model.hidden_dim() || grad_logits.rows() != x.rows() ||
      grad_logits.cols() != model.num_classes()) {
    throw ShapeError("backward: input " + x.ShapeString() + ", features " +
                     features.ShapeString() + ", upstream " +
                     grad_logits.ShapeString() + " inconsistent with model");
  }
  MlpGradients g;
  g.w_cls = MatmulTransposeA(features, grad_logits);
  g.b_cls.assign(model.num_classes(), 0.0);
  for (std::size_t r = 0; r < grad_logits.rows(); ++r) {
    const auto row = grad_logits.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) g.b_cls[c] += row[c];
  }
  // d(loss)/d(pre-activation): upstream through w_clsᵀ, masked where h == 0.
  Matrix grad_hidden = MatmulTransposeB(grad_logits, model.w_cls());
  for (std::size_t r = 0; r < grad_hidden.rows(); ++r) {
    auto row = grad_hidden.row(r);
    const auto h = features.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!(h[j] > 0.0)) row[j] = 0.0;
    }
  }
  g.w1 = MatmulTransposeA(x, grad_hidden);
  g.b1.assign(model.hidden_dim(), 0.0);
  for (std::size_t r = 0; r < grad_hidden.rows(); ++r) {
    const auto row = grad_hidden.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) g.b1[j] += row[j];
  }
  return g;
}

MlpGradients Backward(const MlpModel& model, const Matrix& x,
                      const Matrix& grad_logits) {
  return Backward(model, x, Forward(model, x).features, grad_logits);
}

}  // namespace edge::model
