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

#include "hombraid/hybe.hpp"

#include <string>

namespace hombraid {

namespace {

void require_candidate_shapes(const HybeCandidate& c) {
  if (!c.alpha.is_square() || c.alpha.rows() != c.dim)
    throw DimensionError("candidate alpha must be " + std::to_string(c.dim) + "x" +
                         std::to_string(c.dim) + ", got " + c.alpha.shape());
  const std::size_t sq = c.dim * c.dim;
  if (!c.B.is_square() || c.B.rows() != sq)
    throw DimensionError("candidate B must be " + std::to_string(sq) + "x" +
                         std::to_string(sq) + ", got " + c.B.shape());
}

/// Witness for a failed matrix identity: the first column (input basis
/// vector) where the sides differ, with both output columns spelled out.
/// For operators on M^⊗k the column index is also decomposed into the basis
/// multi-index (i₁,…,i_k).
std::string first_difference(const Matrix& lhs, const Matrix& rhs, std::size_t m,
                             std::size_t tensor_arity) {
  for (std::size_t col = 0; col < lhs.cols(); ++col) {
    const Vector lcol = lhs.column(col);
    const Vector rcol = rhs.column(col);
    if (lcol == rcol) continue;
    std::size_t row = 0;
    while (lcol[row] == rcol[row]) ++row;
    std::string idx;
    if (tensor_arity > 1) {
      // Decompose col in base m, most significant factor first.
      std::vector<std::size_t> digits(tensor_arity);
      std::size_t rest = col;
      for (std::size_t t = tensor_arity; t-- > 0;) {
        digits[t] = rest % m;
        rest /= m;
      }
      idx = " = basis (";
      for (std::size_t t = 0; t < tensor_arity; ++t)
        idx += (t ? "," : "") + std::to_string(digits[t]);
      idx += ")";
    }
    return "input column " + std::to_string(col) + idx + ": first differing entry at row " +
           std::to_string(row) + " (" + lcol[row].to_string() + " vs " + rcol[row].to_string() +
           "); lhs -> " + format_combination(lcol, {}) + ", rhs -> " + format_combination(rcol, {});
  }
  return "";
}

}  // namespace

Report check_morphism(const HybeCandidate& c) {
  require_candidate_shapes(c);
  Report report;
  const Matrix a2 = kron(c.alpha, c.alpha);
  const Matrix lhs = c.B * a2;
  const Matrix rhs = a2 * c.B;
  if (lhs == rhs) {
    report.ok("hom-module-morphism");
  } else {
    report.fail("hom-module-morphism", first_difference(lhs, rhs, c.dim, 2));
  }
  return report;
}

Report check_hybe(const HybeCandidate& c) {
  Report report = check_morphism(c);
  const Matrix ab = kron(c.alpha, c.B);
  const Matrix ba = kron(c.B, c.alpha);
  const Matrix lhs = ab * ba * ab;
  const Matrix rhs = ba * ab * ba;
  if (lhs == rhs) {
    report.ok("hybe");
  } else {
    report.fail("hybe", first_difference(lhs, rhs, c.dim, 3));
  }
  return report;
}

Report check_ybe(const Matrix& B, std::size_t m) {
  if (!B.is_square() || B.rows() != m * m)
    throw DimensionError("B must be " + std::to_string(m * m) + "x" + std::to_string(m * m) +
                         ", got " + B.shape());
  Report report;
  const Matrix id = Matrix::identity(m);
  const Matrix ib = kron(id, B);
  const Matrix bi = kron(B, id);
  const Matrix lhs = ib * bi * ib;
  const Matrix rhs = bi * ib * bi;
  if (lhs == rhs) {
    report.ok("ybe");
  } else {
    report.fail("ybe", first_difference(lhs, rhs, m, 3));
  }
  return report;
}

HybeCandidate tau_alpha(const Matrix& alpha) {
  if (!alpha.is_square())
    throw DimensionError("alpha must be square, got " + alpha.shape());
  const std::size_t m = alpha.rows();
  return HybeCandidate{m, permutation_tau(m) * kron(alpha, alpha), alpha};
}

HybeCandidate scale_solution(const HybeCandidate& c, const Scalar& k) {
  return HybeCandidate{c.dim, k * c.B, c.alpha};
}

HybeCandidate invert_solution(const HybeCandidate& c) {
  require_candidate_shapes(c);
  Matrix alpha_inv;
  try {
    alpha_inv = c.alpha.inverse();
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError("alpha singular: " + std::string(e.what()), e.rank(), e.size());
  }
  Matrix b_inv;
  try {
    b_inv = c.B.inverse();
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError("B singular: " + std::string(e.what()), e.rank(), e.size());
  }
  return HybeCandidate{c.dim, std::move(b_inv), std::move(alpha_inv)};
}

}  // namespace hombraid
