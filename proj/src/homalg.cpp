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

#include "hombraid/homalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hombraid {

namespace {

void require_structure_shapes(std::size_t dim, const Tensor3& t, const Matrix& alpha,
                              const char* what) {
  if (t.out_dim() != dim || t.in1_dim() != dim || t.in2_dim() != dim)
    throw DimensionError(std::string(what) + " structure constants must be " +
                         std::to_string(dim) + "^3");
  if (!alpha.is_square() || alpha.rows() != dim)
    throw DimensionError("alpha must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                         ", got " + alpha.shape());
}

/// Name of basis vector i: the user label when present, else "e<i>".
std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : "e" + std::to_string(i);
}

std::string tuple_label(const std::vector<std::string>& labels,
                        std::initializer_list<std::size_t> idx) {
  std::string nums, names;
  for (std::size_t i : idx) {
    if (!nums.empty()) {
      nums += ",";
      names += ",";
    }
    nums += std::to_string(i);
    names += label_of(labels, i);
  }
  return "(" + nums + ") = (" + names + ")";
}

/// Structure constants of the product of basis vectors i and j, as a vector.
Vector product_column(const Tensor3& t, std::size_t i, std::size_t j) {
  Vector v(t.out_dim());
  for (std::size_t k = 0; k < t.out_dim(); ++k) v[k] = t(k, i, j);
  return v;
}

/// The bilinear map applied to two coordinate vectors.
Vector bilinear_apply(const Tensor3& t, const Vector& u, const Vector& v) {
  Vector out(t.out_dim());
  for (std::size_t i = 0; i < t.in1_dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.in2_dim(); ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t k = 0; k < t.out_dim(); ++k) {
        const Scalar& c = t(k, i, j);
        if (c.is_zero()) continue;
        out[k] += c * u[i] * v[j];
      }
    }
  }
  return out;
}

/// α(t(x_i, x_j)) = t(α(x_i), α(x_j)) on all basis pairs; shared by the
/// multiplicativity checks and the endomorphism preconditions of the twists.
Report check_product_compat(const Tensor3& t, const Matrix& alpha,
                            const std::vector<std::string>& labels, const std::string& item) {
  Report report;
  const std::size_t d = t.out_dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector lhs = alpha.apply(product_column(t, i, j));
      const Vector rhs = bilinear_apply(t, alpha.column(i), alpha.column(j));
      if (lhs != rhs) {
        report.fail(item, "basis pair " + tuple_label(labels, {i, j}) + ": alpha applied to the product is " +
                              format_combination(lhs, labels) + ", product of images is " +
                              format_combination(rhs, labels));
        return report;
      }
    }
  }
  report.ok(item);
  return report;
}

}  // namespace

Report check_skew_symmetry(const HomLieAlgebra& lie) {
  require_structure_shapes(lie.dim, lie.bracket, lie.alpha, "bracket");
  Report report;
  for (std::size_t k = 0; k < lie.dim; ++k) {
    for (std::size_t i = 0; i < lie.dim; ++i) {
      for (std::size_t j = 0; j < lie.dim; ++j) {
        const Scalar sum = lie.bracket(k, i, j) + lie.bracket(k, j, i);
        if (!sum.is_zero()) {
          report.fail("skew-symmetry",
                      "c(k;i,j) + c(k;j,i) = " + sum.to_string() + " at (k;i,j) = (" +
                          std::to_string(k) + ";" + std::to_string(i) + "," + std::to_string(j) +
                          ")");
          return report;
        }
      }
    }
  }
  report.ok("skew-symmetry");
  return report;
}

Report check_multiplicativity(const HomLieAlgebra& lie) {
  require_structure_shapes(lie.dim, lie.bracket, lie.alpha, "bracket");
  return check_product_compat(lie.bracket, lie.alpha, lie.basis_labels, "multiplicativity");
}

Report check_hom_jacobi(const HomLieAlgebra& lie) {
  require_structure_shapes(lie.dim, lie.bracket, lie.alpha, "bracket");
  Report report;
  const auto term = [&lie](std::size_t i, std::size_t j, std::size_t k) {
    // [[x_i, x_j], α(x_k)]
    return bilinear_apply(lie.bracket, product_column(lie.bracket, i, j), lie.alpha.column(k));
  };
  for (std::size_t i = 0; i < lie.dim; ++i) {
    for (std::size_t j = 0; j < lie.dim; ++j) {
      for (std::size_t k = 0; k < lie.dim; ++k) {
        Vector sum = term(i, j, k);
        const Vector second = term(k, i, j);
        const Vector third = term(j, k, i);
        for (std::size_t a = 0; a < lie.dim; ++a) sum[a] += second[a] + third[a];
        bool zero = true;
        for (const auto& entry : sum) {
          if (!entry.is_zero()) {
            zero = false;
            break;
          }
        }
        if (!zero) {
          report.fail("hom-jacobi", "basis triple " + tuple_label(lie.basis_labels, {i, j, k}) +
                                        ": cyclic sum = " +
                                        format_combination(sum, lie.basis_labels));
          return report;
        }
      }
    }
  }
  report.ok("hom-jacobi");
  return report;
}

Report check_hom_lie(const HomLieAlgebra& lie) {
  Report report;
  report.absorb(check_skew_symmetry(lie));
  report.absorb(check_multiplicativity(lie));
  report.absorb(check_hom_jacobi(lie));
  return report;
}

Report check_multiplicativity(const HomAssociativeAlgebra& alg) {
  require_structure_shapes(alg.dim, alg.mu, alg.alpha, "mu");
  return check_product_compat(alg.mu, alg.alpha, alg.basis_labels, "multiplicativity");
}

Report check_hom_associativity(const HomAssociativeAlgebra& alg) {
  require_structure_shapes(alg.dim, alg.mu, alg.alpha, "mu");
  Report report;
  for (std::size_t i = 0; i < alg.dim; ++i) {
    for (std::size_t j = 0; j < alg.dim; ++j) {
      for (std::size_t k = 0; k < alg.dim; ++k) {
        // μ(α(x_i), μ(x_j, x_k)) vs μ(μ(x_i, x_j), α(x_k))
        const Vector lhs =
            bilinear_apply(alg.mu, alg.alpha.column(i), product_column(alg.mu, j, k));
        const Vector rhs =
            bilinear_apply(alg.mu, product_column(alg.mu, i, j), alg.alpha.column(k));
        if (lhs != rhs) {
          report.fail("hom-associativity",
                      "basis triple " + tuple_label(alg.basis_labels, {i, j, k}) + ": lhs = " +
                          format_combination(lhs, alg.basis_labels) + ", rhs = " +
                          format_combination(rhs, alg.basis_labels));
          return report;
        }
      }
    }
  }
  report.ok("hom-associativity");
  return report;
}

Report check_hom_assoc(const HomAssociativeAlgebra& alg) {
  Report report;
  report.absorb(check_multiplicativity(alg));
  report.absorb(check_hom_associativity(alg));
  return report;
}

namespace {

Report check_untwisted(const Matrix& alpha, std::size_t dim) {
  Report report;
  if (alpha == Matrix::identity(dim)) {
    report.ok("untwisted-input");
  } else {
    report.fail("untwisted-input", "the structure to be twisted must carry alpha = identity");
  }
  return report;
}

}  // namespace

HomLieAlgebra twist_lie(const HomLieAlgebra& lie, const Matrix& alpha) {
  require_structure_shapes(lie.dim, lie.bracket, alpha, "bracket");
  Report pre;
  pre.absorb(check_untwisted(lie.alpha, lie.dim));
  pre.absorb(check_skew_symmetry(lie));
  pre.absorb(check_hom_jacobi(lie));  // with alpha = Id this is the classical identity
  pre.absorb(check_product_compat(lie.bracket, alpha, lie.basis_labels, "endomorphism"));
  if (!pre.pass()) throw ValidationError("cannot twist: input is not a Lie algebra with an endomorphism", pre);

  HomLieAlgebra out;
  out.dim = lie.dim;
  out.alpha = alpha;
  out.basis_labels = lie.basis_labels;
  out.bracket = Tensor3(lie.dim, lie.dim, lie.dim);
  for (std::size_t i = 0; i < lie.dim; ++i)
    for (std::size_t j = 0; j < lie.dim; ++j) {
      const Vector twisted = alpha.apply(product_column(lie.bracket, i, j));
      for (std::size_t k = 0; k < lie.dim; ++k) out.bracket(k, i, j) = twisted[k];
    }
  return out;
}

HomAssociativeAlgebra twist_associative(const HomAssociativeAlgebra& alg,
                                            const Matrix& alpha) {
  require_structure_shapes(alg.dim, alg.mu, alpha, "mu");
  Report pre;
  pre.absorb(check_untwisted(alg.alpha, alg.dim));
  pre.absorb(check_hom_associativity(alg));  // with alpha = Id: plain associativity
  pre.absorb(check_product_compat(alg.mu, alpha, alg.basis_labels, "endomorphism"));
  if (!pre.pass())
    throw ValidationError("cannot twist: input is not an associative algebra with an endomorphism",
                          pre);

  HomAssociativeAlgebra out;
  out.dim = alg.dim;
  out.alpha = alpha;
  out.basis_labels = alg.basis_labels;
  out.mu = Tensor3(alg.dim, alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      const Vector twisted = alpha.apply(product_column(alg.mu, i, j));
      for (std::size_t k = 0; k < alg.dim; ++k) out.mu(k, i, j) = twisted[k];
    }
  return out;
}

HomLieAlgebra commutator_hom_lie(const HomAssociativeAlgebra& alg) {
  const Report pre = check_hom_assoc(alg);
  if (!pre.pass())
    throw ValidationError("commutator bracket requires a valid twisted associative algebra", pre);
  HomLieAlgebra out;
  out.dim = alg.dim;
  out.alpha = alg.alpha;
  out.basis_labels = alg.basis_labels;
  out.bracket = Tensor3(alg.dim, alg.dim, alg.dim);
  for (std::size_t k = 0; k < alg.dim; ++k)
    for (std::size_t i = 0; i < alg.dim; ++i)
      for (std::size_t j = 0; j < alg.dim; ++j)
        out.bracket(k, i, j) = alg.mu(k, i, j) - alg.mu(k, j, i);
  return out;
}

HomModule lie_prime(const HomLieAlgebra& lie) {
  HomModule out;
  out.dim = lie.dim + 1;
  out.alpha = Matrix(out.dim, out.dim);
  out.alpha(0, 0) = Scalar(1);
  for (std::size_t i = 0; i < lie.dim; ++i)
    for (std::size_t j = 0; j < lie.dim; ++j) out.alpha(1 + i, 1 + j) = lie.alpha(i, j);
  out.basis_labels.reserve(out.dim);
  out.basis_labels.push_back("u0");
  for (std::size_t i = 0; i < lie.dim; ++i)
    out.basis_labels.push_back(i < lie.basis_labels.size() ? lie.basis_labels[i]
                                                           : "u" + std::to_string(i + 1));
  return out;
}

namespace {

void require_valid_lie(const HomLieAlgebra& lie) {
  const Report report = check_hom_lie(lie);
  if (!report.pass())
    throw ValidationError("input is not a valid twisted Lie algebra", report);
}

/// The coordinates of the pair (a, x_idx) in 𝐤⊕L after applying `map` to the
/// L-component: a·u₀ + Σ_i map(x)_i·u_{1+i}.  idx < 0 encodes x = 0.
Vector pair_coords(std::size_t n, bool unit_component, int idx, const Matrix& map) {
  Vector v(n);
  if (unit_component) v[0] = Scalar(1);
  if (idx >= 0)
    for (std::size_t i = 0; i + 1 < n; ++i) v[1 + i] = map(i, static_cast<std::size_t>(idx));
  return v;
}

}  // namespace

HybeCandidate build_B_alpha(const HomLieAlgebra& lie) {
  require_valid_lie(lie);
  const std::size_t n = lie.dim + 1;
  Matrix B(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t col = p * n + q;
      // Input u_p ⊗ u_q = (a,x) ⊗ (b,y); the first summand swaps the factors
      // and applies α to each second component.
      const Vector left = pair_coords(n, q == 0, static_cast<int>(q) - 1, lie.alpha);
      const Vector right = pair_coords(n, p == 0, static_cast<int>(p) - 1, lie.alpha);
      for (std::size_t r = 0; r < n; ++r) {
        if (left[r].is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) {
          if (right[s].is_zero()) continue;
          B(r * n + s, col) += left[r] * right[s];
        }
      }
      // The second summand (1,0) ⊗ (0,[x,y]) exists only when both inputs
      // lie in L.
      if (p >= 1 && q >= 1)
        for (std::size_t k = 0; k < lie.dim; ++k)
          B(0 * n + (1 + k), col) += lie.bracket(k, p - 1, q - 1);
    }
  }
  return HybeCandidate{n, std::move(B), lie_prime(lie).alpha};
}

HybeCandidate invert_B_alpha(const HomLieAlgebra& lie) {
  require_valid_lie(lie);
  Matrix alpha_inv;
  try {
    alpha_inv = lie.alpha.inverse();
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError("alpha singular: " + std::string(e.what()), e.rank(), e.size());
  }
  const Matrix alpha_inv2 = alpha_inv * alpha_inv;
  const std::size_t n = lie.dim + 1;
  Matrix B(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t col = p * n + q;
      // First summand: the swap with α⁻¹ applied to each L-component.
      const Vector left = pair_coords(n, q == 0, static_cast<int>(q) - 1, alpha_inv);
      const Vector right = pair_coords(n, p == 0, static_cast<int>(p) - 1, alpha_inv);
      for (std::size_t r = 0; r < n; ++r) {
        if (left[r].is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) {
          if (right[s].is_zero()) continue;
          B(r * n + s, col) += left[r] * right[s];
        }
      }
      // Second summand (0, α⁻²[x,y]) ⊗ (1,0): note the bracket correction
      // lands on the left tensor factor here.
      if (p >= 1 && q >= 1) {
        const Vector w = alpha_inv2.apply(product_column(lie.bracket, p - 1, q - 1));
        for (std::size_t k = 0; k < lie.dim; ++k) {
          if (w[k].is_zero()) continue;
          B((1 + k) * n + 0, col) += w[k];
        }
      }
    }
  }
  Matrix alpha_prime_inv(n, n);
  alpha_prime_inv(0, 0) = Scalar(1);
  for (std::size_t i = 0; i < lie.dim; ++i)
    for (std::size_t j = 0; j < lie.dim; ++j) alpha_prime_inv(1 + i, 1 + j) = alpha_inv(i, j);
  return HybeCandidate{n, std::move(B), std::move(alpha_prime_inv)};
}

HomLieAlgebra sl2_lambda() {
  const Scalar l = Scalar::lambda();
  HomLieAlgebra lie;
  lie.dim = 3;
  lie.basis_labels = {"h", "e", "f"};
  lie.bracket = Tensor3(3, 3, 3);
  // [h,e] = 2λ·e
  lie.bracket(1, 0, 1) = Scalar(2) * l;
  lie.bracket(1, 1, 0) = Scalar(-2) * l;
  // [h,f] = −2λ⁻¹·f
  lie.bracket(2, 0, 2) = Scalar(-2) * l.inverse();
  lie.bracket(2, 2, 0) = Scalar(2) * l.inverse();
  // [e,f] = h
  lie.bracket(0, 1, 2) = Scalar(1);
  lie.bracket(0, 2, 1) = Scalar(-1);
  lie.alpha = Matrix(3, 3);
  lie.alpha(0, 0) = Scalar(1);
  lie.alpha(1, 1) = l;
  lie.alpha(2, 2) = l.inverse();
  return lie;
}

HomLieAlgebra sl2() {
  HomLieAlgebra lie;
  lie.dim = 3;
  lie.basis_labels = {"h", "e", "f"};
  lie.bracket = Tensor3(3, 3, 3);
  lie.bracket(1, 0, 1) = Scalar(2);
  lie.bracket(1, 1, 0) = Scalar(-2);
  lie.bracket(2, 0, 2) = Scalar(-2);
  lie.bracket(2, 2, 0) = Scalar(2);
  lie.bracket(0, 1, 2) = Scalar(1);
  lie.bracket(0, 2, 1) = Scalar(-1);
  lie.alpha = Matrix::identity(3);
  return lie;
}

Matrix specialize(const Matrix& m, const Rational& c) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j).eval_at(c));
  return out;
}

Tensor3 specialize(const Tensor3& t, const Rational& c) {
  Tensor3 out(t.out_dim(), t.in1_dim(), t.in2_dim());
  for (std::size_t k = 0; k < t.out_dim(); ++k)
    for (std::size_t i = 0; i < t.in1_dim(); ++i)
      for (std::size_t j = 0; j < t.in2_dim(); ++j) out(k, i, j) = Scalar(t(k, i, j).eval_at(c));
  return out;
}

HomLieAlgebra specialize(const HomLieAlgebra& lie, const Rational& c) {
  HomLieAlgebra out;
  out.dim = lie.dim;
  out.bracket = specialize(lie.bracket, c);
  out.alpha = specialize(lie.alpha, c);
  out.basis_labels = lie.basis_labels;
  return out;
}

HybeCandidate specialize(const HybeCandidate& cand, const Rational& c) {
  return HybeCandidate{cand.dim, specialize(cand.B, c), specialize(cand.alpha, c)};
}

}  // namespace hombraid
