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

#include "edge/core/matrix.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "edge/core/status.h"

namespace edge {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    std::ostringstream os;
    os << "matrix data length " << data_.size() << " does not match shape ("
       << rows << "x" << cols << ")";
    throw ShapeError(os.str());
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows in Matrix::FromRows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::SelectRows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw ShapeError("row index out of range");
    const auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

std::string Matrix::ShapeString() const {
  std::ostringstream os;
  os << "(" << rows_ << "x" << cols_ << ")";
  return os.str();
}

LabelMatrix::LabelMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

LabelMatrix::LabelMatrix(std::size_t rows, std::size_t cols,
                         std::vector<std::uint8_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ShapeError("label data length does not match shape " +
                     ShapeString());
  }
  for (const std::uint8_t v : data_) {
    if (v > 1) throw DataError("label entries must be 0 or 1");
  }
}

LabelMatrix LabelMatrix::FromRows(
    std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<std::uint8_t> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows in LabelMatrix::FromRows");
    for (const int v : row) {
      if (v != 0 && v != 1) throw DataError("label entries must be 0 or 1");
      data.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return LabelMatrix(r, c, std::move(data));
}

std::vector<std::int64_t> LabelMatrix::ColumnSums() const {
  std::vector<std::int64_t> sums(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  }
  return sums;
}

LabelMatrix LabelMatrix::SelectRows(std::span<const std::size_t> indices) const {
  LabelMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw ShapeError("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) {
      out.data_[i * cols_ + c] = (*this)(indices[i], c);
    }
  }
  return out;
}

std::string LabelMatrix::ShapeString() const {
  std::ostringstream os;
  os << "(" << rows_ << "x" << cols_ << ")";
  return os.str();
}

namespace {

[[noreturn]] void ThrowMatmulShape(const char* op, const Matrix& a,
                                   const Matrix& b) {
  throw ShapeError(std::string(op) + ": incompatible shapes " +
                   a.ShapeString() + " and " + b.ShapeString());
}

}  // namespace

Matrix Matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) ThrowMatmulShape("matmul", a, b);
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

Matrix MatmulTransposeA(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) ThrowMatmulShape("matmul_transpose_a", a, b);
  Matrix out(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto a_row = a.row(k);
    const auto b_row = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double aki = a_row[i];
      auto out_row = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aki * b_row[j];
    }
  }
  return out;
}

Matrix MatmulTransposeB(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) ThrowMatmulShape("matmul_transpose_b", a, b);
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto a_row = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const auto b_row = b.row(j);
      double sum = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a_row[k] * b_row[k];
      out(i, j) = sum;
    }
  }
  return out;
}

bool AllFinite(const Matrix& m) {
  for (const double v : m.data()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double FrobeniusNorm(const Matrix& m) {
  double sum = 0.0;
  for (const double v : m.data()) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace edge
