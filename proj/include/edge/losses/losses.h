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

#ifndef EDGE_LOSSES_LOSSES_H_
#define EDGE_LOSSES_LOSSES_H_

#include <cstddef>
#include <vector>

#include "edge/core/matrix.h"

namespace edge::losses {

// A loss over one logit batch together with d(loss)/d(logits).
struct LossValue {
  double value = 0.0;
  Matrix grad;
};

// A loss coupling an ID batch and an OE batch; one gradient block per input.
struct PairLossValue {
  double value = 0.0;
  Matrix id_grad;
  Matrix oe_grad;
};

struct EdgeWeights {
  double alpha = 0.0;   // weight of the OE confidence term
  double beta = 0.0;    // weight of the energy gap term
  double margin = 0.0;  // hinge margin m
  std::size_t k = 1;    // bottom-k size on the ID batch
};

// Per-term breakdown of the combined objective.
struct EdgeLossValue {
  double value = 0.0;
  double id = 0.0;
  double conf = 0.0;
  double gap = 0.0;
  Matrix id_grad;
  Matrix oe_grad;
};

// Mean over samples of the class-averaged binary cross-entropy.
LossValue LossId(const Matrix& logits, const LabelMatrix& labels);

// Mean over OE samples of (1/C) sum_i -log(1 - sigmoid(f_i)).
LossValue LossConf(const Matrix& oe_logits);

struct BottomK {
  double value = 0.0;
  // Rows of the k smallest JointEnergy values, ascending by energy with
  // ties broken by lower row index.
  std::vector<std::size_t> rows;
};

BottomK BottomKEnergy(const Matrix& id_logits, std::size_t k);

// Mean over OE rows of [E(z') - E_k(z) + m]_+, E_k the bottom-k ID energy.
// A hinge argument of exactly zero is treated as inactive.
PairLossValue LossGap(const Matrix& id_logits, const Matrix& oe_logits,
                      std::size_t k, double margin);

// loss_id + alpha * loss_conf + beta * loss_gap. Every term is evaluated
// (and reported) even when its weight is zero.
EdgeLossValue LossEdge(const Matrix& id_logits, const LabelMatrix& labels,
                       const Matrix& oe_logits, const EdgeWeights& weights);

}  // namespace edge::losses

#endif  // EDGE_LOSSES_LOSSES_H_
