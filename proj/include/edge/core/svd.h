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

#ifndef EDGE_CORE_SVD_H_
#define EDGE_CORE_SVD_H_

#include <vector>

#include "edge/core/matrix.h"

namespace edge {

struct SvdOptions {
  // Relative orthogonality threshold |<a_p, a_q>| <= tol * |a_p| |a_q|.
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

// Thin decomposition m = u * diag(singular_values) * vᵀ with
// r = min(rows, cols): u is (rows x r), v is (cols x r).
struct Svd {
  Matrix u;
  std::vector<double> singular_values;  // descending, non-negative
  Matrix v;
};

// One-sided (Hestenes) Jacobi. Throws EmptyInputError on an empty matrix
// and NumericError, with conditioning diagnostics, if the sweep cap is hit.
Svd ComputeSvd(const Matrix& m, const SvdOptions& options = {});

std::vector<double> SingularValues(const Matrix& m,
                                   const SvdOptions& options = {});

}  // namespace edge

#endif  // EDGE_CORE_SVD_H_
