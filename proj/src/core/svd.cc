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

#include "edge/core/svd.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "edge/core/status.h"

namespace edge {
namespace {

// Orthogonalizes the columns of `work` (rows >= cols) in place and
// accumulates the rotations into `v`. Returns false if the sweep cap was hit;
// `max_ratio` receives the largest remaining normalized column correlation.
bool JacobiSweeps(Matrix& work, Matrix& v, const SvdOptions& options,
                  double& max_ratio) {
  const std::size_t m = work.rows();
  const std::size_t n = work.cols();
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    bool rotated = false;
    max_ratio = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        double gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = work(i, p);
          const double uq = work(i, q);
          alpha += up * up;
          beta += uq * uq;
          gamma += up * uq;
        }
        if (gamma == 0.0 || alpha == 0.0 || beta == 0.0) continue;
        const double ratio = std::abs(gamma) / std::sqrt(alpha * beta);
        max_ratio = std::max(max_ratio, ratio);
        if (ratio <= options.tolerance) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = work(i, p);
          const double uq = work(i, q);
          work(i, p) = c * up - s * uq;
          work(i, q) = s * up + c * uq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) return true;
  }
  return false;
}

// Requires rows >= cols.
Svd TallSvd(const Matrix& a, const SvdOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix work = a;
  Matrix v = Matrix::Identity(n);
  double max_ratio = 0.0;
  if (!JacobiSweeps(work, v, options, max_ratio)) {
    std::ostringstream os;
    os << "one-sided Jacobi SVD did not converge after " << options.max_sweeps
       << " sweeps on " << a.ShapeString()
       << " matrix (frobenius norm " << FrobeniusNorm(a)
       << ", residual column correlation " << max_ratio << ")";
    throw NumericError(os.str());
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += work(i, j) * work(i, j);
    norms[j] = std::sqrt(sum);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    const double sigma = norms[j];
    out.singular_values[k] = sigma;
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
    if (sigma > 0.0) {
      for (std::size_t i = 0; i < m; ++i) out.u(i, k) = work(i, j) / sigma;
    }
  }
  return out;
}

}  // namespace

Svd ComputeSvd(const Matrix& m, const SvdOptions& options) {
  if (m.empty()) throw EmptyInputError("svd of an empty matrix");
  if (!AllFinite(m)) {
    throw NumericError("svd input " + m.ShapeString() + " has non-finite entries");
  }
  if (m.rows() >= m.cols()) return TallSvd(m, options);
  Svd t = TallSvd(m.Transposed(), options);
  return Svd{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

std::vector<double> SingularValues(const Matrix& m, const SvdOptions& options) {
  return ComputeSvd(m, options).singular_values;
}

}  // namespace edge
