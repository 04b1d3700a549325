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

#include <doctest.h>

#include <cstddef>

#include "hombraid/matrix.hpp"
#include "support/generators.hpp"

using hombraid::kron;
using hombraid::kron_power;
using hombraid::Matrix;
using hombraid::permutation_tau;
using hombraid::Scalar;
using hombraid::Vector;
namespace ts = hombraid::testsupport;

namespace {

Matrix random_matrix(ts::Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(ts::random_rational(rng, 3));
  return m;
}

Matrix diag(std::initializer_list<Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("kronecker products follow the global ordering") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  const Scalar a(2), b(3), c(5), d(7);
  CHECK(kron(diag({a, b}), diag({c, d})) == diag({a * c, a * d, b * c, b * d}));

  // The swap on the first factor sends e0⊗e1 (flat 1) to e1⊗e1 (flat 3).
  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  const Matrix s1 = kron(swap, Matrix::identity(2));
  Vector e01(4);
  e01[1] = Scalar(1);
  const Vector image = s1.apply(e01);
  for (std::size_t i = 0; i < 4; ++i) CHECK(image[i] == (i == 3 ? Scalar(1) : Scalar(0)));
}

TEST_CASE("kron satisfies the mixed-product property on random matrices") {
  ts::Rng rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = random_matrix(rng, 2, 3);
    const Matrix c = random_matrix(rng, 3, 2);
    const Matrix b = random_matrix(rng, 2, 2);
    const Matrix d = random_matrix(rng, 2, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("kron is associative and bilinear") {
  ts::Rng rng(55501);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = random_matrix(rng, 2, 2);
    const Matrix b = random_matrix(rng, 2, 3);
    const Matrix c = random_matrix(rng, 3, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    const Matrix a2 = random_matrix(rng, 2, 2);
    CHECK(kron(a + a2, b) == kron(a, b) + kron(a2, b));
    const Scalar s(ts::random_rational(rng));
    CHECK(kron(s * a, b) == s * kron(a, b));
    CHECK(kron(a, s * b) == s * kron(a, b));
  }
}

TEST_CASE("kron_power starts from the empty product") {
  const Matrix a = Matrix::identity(2);
  CHECK(kron_power(a, 0) == Matrix::identity(1));
  CHECK(kron_power(a, 3) == Matrix::identity(8));
  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  CHECK(kron_power(swap, 2) == kron(swap, swap));
}

TEST_CASE("inverse of the unipotent 2x2 matrix") {
  Matrix u(2, 2);
  u(0, 0) = Scalar(1);
  u(0, 1) = Scalar(1);
  u(1, 1) = Scalar(1);
  Matrix expected(2, 2);
  expected(0, 0) = Scalar(1);
  expected(0, 1) = Scalar(-1);
  expected(1, 1) = Scalar(1);
  CHECK(u.inverse() == expected);
  CHECK(Matrix::identity(5).inverse() == Matrix::identity(5));
}

TEST_CASE("inverse of a diagonal matrix over the function field") {
  const Scalar l = Scalar::lambda();
  const Matrix m = diag({l, l.inverse()});
  CHECK(m.inverse() == diag({l.inverse(), l}));
}

TEST_CASE("singular matrices report their rank") {
  Matrix m(3, 3);
  m(0, 0) = Scalar(1);
  m(1, 0) = Scalar(2);
  m(0, 1) = Scalar(3);
  m(1, 1) = Scalar(6);  // row 1 = 2 × row 0; rank 1 so far
  m(2, 2) = Scalar(1);  // independent third row: rank 2
  CHECK(m.rank() == 2);
  CHECK_THROWS_WITH_AS(m.inverse(), "singular matrix of size 3: rank is only 2",
                       hombraid::SingularMatrixError);
  try {
    m.inverse();
  } catch (const hombraid::SingularMatrixError& e) {
    CHECK(e.rank() == 2);
    CHECK(e.size() == 3);
  }
}

TEST_CASE("inverse is exact on random invertible matrices") {
  ts::Rng rng(90210);
  int done = 0;
  while (done < 25) {
    const Matrix a = random_matrix(rng, 4, 4);
    try {
      const Matrix inv = a.inverse();
      CHECK(inv * a == Matrix::identity(4));
      CHECK(a * inv == Matrix::identity(4));
      ++done;
    } catch (const hombraid::SingularMatrixError&) {
      // Singular sample; draw again.
    }
  }
}

TEST_CASE("matmul respects identities and the flip squares to one") {
  ts::Rng rng(31415);
  const Matrix a = random_matrix(rng, 3, 3);
  CHECK(a * Matrix::identity(3) == a);
  CHECK(Matrix::identity(3) * a == a);
  const Matrix p = permutation_tau(2);
  CHECK(p * p == Matrix::identity(4));
}

TEST_CASE("permutation_tau matches the index convention") {
  CHECK(permutation_tau(1) == Matrix::identity(1));
  Matrix expected(4, 4);
  expected(0, 0) = Scalar(1);
  expected(2, 1) = Scalar(1);
  expected(1, 2) = Scalar(1);
  expected(3, 3) = Scalar(1);
  CHECK(permutation_tau(2) == expected);
  const Matrix p3 = permutation_tau(3);
  CHECK(p3 * p3 == Matrix::identity(9));
  // Orthogonality: entries are 0/1 with exactly one 1 per row and column.
  for (std::size_t i = 0; i < 9; ++i) {
    int row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK((p3(i, j).is_zero() || p3(i, j).is_one()));
      if (p3(i, j).is_one()) ++row_ones;
      if (p3(j, i).is_one()) ++col_ones;
    }
    CHECK(row_ones == 1);
    CHECK(col_ones == 1);
  }
}

TEST_CASE("shape mismatches are rejected") {
  const Matrix a(2, 3);
  const Matrix b(2, 3);
  CHECK_THROWS_AS(a * b, hombraid::DimensionError);
  CHECK_THROWS_AS(a.apply(Vector(2)), hombraid::DimensionError);
  CHECK_THROWS_AS(a.inverse(), hombraid::DimensionError);
  CHECK_THROWS_AS(a + Matrix(3, 2), hombraid::DimensionError);
}

TEST_CASE("vectors render as labeled combinations") {
  Vector v(3);
  v[0] = Scalar(2);
  v[2] = Scalar(-1);
  CHECK(hombraid::format_combination(v, {"h", "e", "f"}) == "2*h - f");
  CHECK(hombraid::format_combination(Vector(3), {}) == "0");
  Vector w(2);
  w[1] = Scalar::parse("1/2");
  CHECK(hombraid::format_combination(w, {}) == "(1/2)*e1");
}
