/*
 * Copyright 2026 The hombraid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HOMBRAID_MATRIX_HPP
#define HOMBRAID_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hombraid/errors.hpp"
#include "hombraid/scalar.hpp"

namespace hombraid {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact field elements.  Equality is entrywise
/// structural comparison of canonical forms.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of the given shape.
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }
  friend Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = c * a.data_[i];
    return out;
  }

  /// Exact product; inner loops skip structural zeros, which keeps products of
  /// the very sparse braid operators near-linear in the matrix size.
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// Matrix–vector product.
  Vector apply(const Vector& v) const;

  /// Column j as a vector (used for per-basis-vector witnesses).
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Rank over the field, by pivoted Gaussian elimination on a copy.
  std::size_t rank() const;

  /// Exact inverse by Gauss–Jordan elimination with first-nonzero pivoting.
  /// Throws SingularMatrixError (carrying the rank found) when not invertible,
  /// DimensionError when not square.
  Matrix inverse() const;

  /// One-line shape description for error messages.
  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionError(std::string("matrix shapes ") + shape() + " and " + b.shape() +
                           " do not conform for '" + op + "'");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product with the global basis-ordering convention
/// (A⊗B)[(i·rB+k), (j·cB+l)] = A[i,j]·B[k,l]; equivalently e_i⊗e_k has flat
/// index i·dim₂+k.  Every module uses this ordering.
Matrix kron(const Matrix& a, const Matrix& b);

/// k-fold Kronecker power; k = 0 yields the 1×1 identity.
Matrix kron_power(const Matrix& a, std::size_t k);

/// The flip on a d-dimensional space tensored with itself: the d²×d² matrix
/// sending e_i⊗e_j to e_j⊗e_i.
Matrix permutation_tau(std::size_t d);

/// Rank-3 array of exact field elements, indexed (k; i, j): the structure
/// constants of a bilinear map, out-coordinate first.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t out_dim, std::size_t in1_dim, std::size_t in2_dim)
      : d0_(out_dim), d1_(in1_dim), d2_(in2_dim), data_(out_dim * in1_dim * in2_dim) {}

  std::size_t out_dim() const { return d0_; }
  std::size_t in1_dim() const { return d1_; }
  std::size_t in2_dim() const { return d2_; }

  Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) {
    return data_[(k * d1_ + i) * d2_ + j];
  }
  const Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return data_[(k * d1_ + i) * d2_ + j];
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

/// Renders a vector as a linear combination of labeled basis vectors, e.g.
/// "2*e0 - e2"; "0" for the zero vector.  Used in check witnesses.
std::string format_combination(const Vector& v, const std::vector<std::string>& labels);

}  // namespace hombraid

#endif  // HOMBRAID_MATRIX_HPP
