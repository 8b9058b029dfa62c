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

#ifndef EDGE_CORE_NUMERIC_H_
#define EDGE_CORE_NUMERIC_H_

namespace edge {

// Logistic function 1 / (1 + e^-x), evaluated on the branch that never
// exponentiates a positive argument.
double Sigmoid(double x);

// log(1 + e^x). Above kSoftplusThreshold the x + log1p(e^-x) form is used.
double Softplus(double x);

inline constexpr double kSoftplusThreshold = 30.0;

}  // namespace edge

#endif  // EDGE_CORE_NUMERIC_H_
