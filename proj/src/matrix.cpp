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

#include "hombraid/matrix.hpp"

#include <utility>

namespace hombraid {

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix shapes " + a.shape() + " and " + b.shape() +
                         " do not conform for '*'");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw DimensionError("matrix shape " + shape() + " cannot act on a vector of length " +
                         std::to_string(v.size()));
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& aij = (*this)(i, j);
      if (aij.is_zero() || v[j].is_zero()) continue;
      out[i] += aij * v[j];
    }
  }
  return out;
}

namespace {

/// Gauss–Jordan elimination on [work | aug] with first-nonzero pivoting.
/// Returns the rank; on full rank, aug holds work⁻¹·aug.
std::size_t eliminate(Matrix& work, Matrix* aug) {
  const std::size_t n = work.rows();
  const std::size_t m = work.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    // Find the first row at or below `rank` with a nonzero entry in `col`.
    std::size_t pivot = rank;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m; ++j) std::swap(work(rank, j), work(pivot, j));
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(rank, j), (*aug)(pivot, j));
    }
    const Scalar inv = work(rank, col).inverse();
    for (std::size_t j = col; j < m; ++j) work(rank, j) = inv * work(rank, j);
    if (aug)
      for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(rank, j) = inv * (*aug)(rank, j);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == rank) continue;
      const Scalar factor = work(row, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < m; ++j) work(row, j) -= factor * work(rank, j);
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(row, j) -= factor * (*aug)(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix work = *this;
  return eliminate(work, nullptr);
}

Matrix Matrix::inverse() const {
  if (!is_square())
    throw DimensionError("cannot invert a non-square matrix of shape " + shape());
  Matrix work = *this;
  Matrix aug = Matrix::identity(rows_);
  const std::size_t rank = eliminate(work, &aug);
  if (rank < rows_)
    throw SingularMatrixError("singular matrix of size " + std::to_string(rows_) +
                                  ": rank is only " + std::to_string(rank),
                              rank, rows_);
  return aug;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (bkl.is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return out;
}

Matrix kron_power(const Matrix& a, std::size_t k) {
  Matrix out = Matrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

Matrix permutation_tau(std::size_t d) {
  Matrix out(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(j * d + i, i * d + j) = Scalar(1);
  return out;
}

std::string format_combination(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const std::string label =
        i < labels.size() ? labels[i] : "e" + std::to_string(i);
    std::string coeff = v[i].to_string();
    std::string term;
    if (coeff == "1") {
      term = label;
    } else if (coeff == "-1") {
      term = "-" + label;
    } else {
      // Parenthesize composite coefficients so the rendering is unambiguous.
      if (coeff.find_first_of("+-/", 1) != std::string::npos) coeff = "(" + coeff + ")";
      term = coeff + "*" + label;
    }
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hombraid
