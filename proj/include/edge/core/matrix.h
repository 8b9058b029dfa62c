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

#ifndef EDGE_CORE_MATRIX_H_
#define EDGE_CORE_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace edge {

// Dense row-major matrix of doubles. Rows are samples; columns are
// features, classes or logits depending on context.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Takes ownership of `data`; throws ShapeError if the length is not
  // rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  const std::vector<double>& values() const { return data_; }

  Matrix Transposed() const;
  Matrix SelectRows(std::span<const std::size_t> indices) const;
  std::string ShapeString() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Binary label matrix; every entry is 0 or 1.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(std::size_t rows, std::size_t cols);
  // Throws DataError on any entry other than 0 or 1.
  LabelMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> data);

  static LabelMatrix FromRows(
      std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::uint8_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void Set(std::size_t r, std::size_t c, bool positive) {
    data_[r * cols_ + c] = positive ? 1 : 0;
  }
  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const std::uint8_t> data() const { return data_; }

  std::vector<std::int64_t> ColumnSums() const;
  LabelMatrix SelectRows(std::span<const std::size_t> indices) const;
  std::string ShapeString() const;

  bool operator==(const LabelMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// a * b with a fixed i-k-j summation order.
Matrix Matmul(const Matrix& a, const Matrix& b);
// aᵀ * b without materializing the transpose.
Matrix MatmulTransposeA(const Matrix& a, const Matrix& b);
// a * bᵀ without materializing the transpose.
Matrix MatmulTransposeB(const Matrix& a, const Matrix& b);

bool AllFinite(const Matrix& m);
double FrobeniusNorm(const Matrix& m);

}  // namespace edge

#endif  // EDGE_CORE_MATRIX_H_
