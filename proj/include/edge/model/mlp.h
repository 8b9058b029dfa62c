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

#ifndef EDGE_MODEL_MLP_H_
#define EDGE_MODEL_MLP_H_

#include <cstddef>
#include <vector>

#include "edge/core/matrix.h"
#include "edge/core/random.h"

namespace edge::model {

// Two-layer classifier:
//   h(x) = relu(x * w1 + b1)          penultimate features, d1 wide
//   f(x) = h(x) * w_cls + b_cls       C logits
// w1 is (d x d1) and w_cls is (d1 x C).
class MlpModel {
 public:
  MlpModel() = default;
  // All parameters zero.
  MlpModel(std::size_t input_dim, std::size_t hidden_dim,
           std::size_t num_classes);

  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases, drawn
  // in the order w1, b1, w_cls, b_cls.
  static MlpModel Initialize(std::size_t input_dim, std::size_t hidden_dim,
                             std::size_t num_classes, Rng& rng);

  std::size_t input_dim() const { return w1_.rows(); }
  std::size_t hidden_dim() const { return w1_.cols(); }
  std::size_t num_classes() const { return w_cls_.cols(); }

  Matrix& w1() { return w1_; }
  const Matrix& w1() const { return w1_; }
  std::vector<double>& b1() { return b1_; }
  const std::vector<double>& b1() const { return b1_; }
  Matrix& w_cls() { return w_cls_; }
  const Matrix& w_cls() const { return w_cls_; }
  std::vector<double>& b_cls() { return b_cls_; }
  const std::vector<double>& b_cls() const { return b_cls_; }

  bool AllFinite() const;

  bool operator==(const MlpModel&) const = default;

 private:
  Matrix w1_;
  std::vector<double> b1_;
  Matrix w_cls_;
  std::vector<double> b_cls_;
};

struct ForwardResult {
  Matrix features;  // (rows x d1)
  Matrix logits;    // (rows x C)
};

// Throws ShapeError if x.cols() != input_dim.
ForwardResult Forward(const MlpModel& model, const Matrix& x);
Matrix Features(const MlpModel& model, const Matrix& x);

struct MlpGradients {
  Matrix w1;
  std::vector<double> b1;
  Matrix w_cls;
  std::vector<double> b_cls;

  static MlpGradients ZerosLike(const MlpModel& model);
  MlpGradients& operator+=(const MlpGradients& other);
};

// Chain rule through Forward given d(loss)/d(logits). `features` must be
// Forward(model, x).features. The rectifier subgradient at 0 is 0.
MlpGradients Backward(const MlpModel& model, const Matrix& x,
                      const Matrix& features, const Matrix& grad_logits);
MlpGradients Backward(const MlpModel& model, const Matrix& x,
                      const Matrix& grad_logits);

}  // namespace edge::model

#endif  // EDGE_MODEL_MLP_H_
