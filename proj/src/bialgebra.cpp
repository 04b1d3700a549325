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

#include "hombraid/bialgebra.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hombraid {

namespace {

void require_bialgebra_shapes(const Bialgebra& h) {
  const std::size_t d = h.dim;
  if (h.mu.out_dim() != d || h.mu.in1_dim() != d || h.mu.in2_dim() != d)
    throw DimensionError("mu structure constants must be " + std::to_string(d) + "^3");
  if (h.delta.out_dim() != d || h.delta.in1_dim() != d || h.delta.in2_dim() != d)
    throw DimensionError("delta structure constants must be " + std::to_string(d) + "^3");
  if (h.unit.size() != d)
    throw DimensionError("unit vector must have length " + std::to_string(d));
  if (h.counit.size() != d)
    throw DimensionError("counit vector must have length " + std::to_string(d));
}

void require_element_shape(const Bialgebra& h, const Vector& r, const char* what) {
  if (r.size() != h.dim * h.dim)
    throw DimensionError(std::string(what) + " must be a vector of length dim^2 = " +
                         std::to_string(h.dim * h.dim) + ", got " + std::to_string(r.size()));
}

void require_form_shape(const Bialgebra& h, const Matrix& r, const char* what) {
  if (r.rows() != h.dim || r.cols() != h.dim)
    throw DimensionError(std::string(what) + " must be a " + std::to_string(h.dim) + "x" +
                         std::to_string(h.dim) + " matrix, got " + r.shape());
}

void require_module_shapes(const Bialgebra& h, const HModule& m) {
  if (m.action.out_dim() != m.dim || m.action.in1_dim() != h.dim || m.action.in2_dim() != m.dim)
    throw DimensionError("module action must have shape (m; d, m) = (" + std::to_string(m.dim) +
                         "; " + std::to_string(h.dim) + ", " + std::to_string(m.dim) + ")");
}

void require_comodule_shapes(const Bialgebra& h, const HComodule& m) {
  if (m.rho.rows() != h.dim * m.dim || m.rho.cols() != m.dim)
    throw DimensionError("comodule structure map must be a (d*m)x(m) = " +
                         std::to_string(h.dim * m.dim) + "x" + std::to_string(m.dim) +
                         " matrix, got " + m.rho.shape());
}

void require_alpha_shape(const HModule& m, const Matrix& alpha) {
  if (!alpha.is_square() || alpha.rows() != m.dim)
    throw DimensionError("alpha must be " + std::to_string(m.dim) + "x" + std::to_string(m.dim) +
                         ", got " + alpha.shape());
}

std::string label_of(const Bialgebra& h, std::size_t i) {
  return i < h.basis_labels.size() ? h.basis_labels[i] : "x" + std::to_string(i);
}

/// Renders an element of H^⊗p as a combination of tensor-basis vectors, e.g.
/// "1/2*(1⊗g) - 1/2*(g⊗g)".
std::string tensor_combination(const Bialgebra& h, const Vector& v, std::size_t p) {
  std::vector<std::string> labels(v.size());
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    std::vector<std::size_t> digits(p);
    std::size_t rest = flat;
    for (std::size_t t = p; t-- > 0;) {
      digits[t] = rest % h.dim;
      rest /= h.dim;
    }
    std::string name = "(";
    for (std::size_t t = 0; t < p; ++t) name += (t ? "⊗" : "") + label_of(h, digits[t]);
    labels[flat] = name + ")";
  }
  return format_combination(v, labels);
}

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = Scalar(1);
  return v;
}

/// μ applied to two coordinate vectors of H.
Vector mu_apply(const Bialgebra& h, const Vector& a, const Vector& b) {
  Vector out(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.dim; ++j) {
      if (b[j].is_zero()) continue;
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& c = h.mu(k, i, j);
        if (!c.is_zero()) out[k] += c * a[i] * b[j];
      }
    }
  }
  return out;
}

}  // namespace

Vector tensor_algebra_unit(const Bialgebra& h, std::size_t p) {
  Vector out{Scalar(1)};
  for (std::size_t t = 0; t < p; ++t) {
    Vector next(out.size() * h.dim);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].is_zero()) continue;
      for (std::size_t j = 0; j < h.dim; ++j)
        if (!h.unit[j].is_zero()) next[i * h.dim + j] = out[i] * h.unit[j];
    }
    out = std::move(next);
  }
  return out;
}

Vector tensor_algebra_mul(const Bialgebra& h, std::size_t p, const Vector& a, const Vector& b) {
  std::size_t n = 1;
  for (std::size_t t = 0; t < p; ++t) n *= h.dim;
  if (a.size() != n || b.size() != n)
    throw DimensionError("tensor-power elements must have length dim^" + std::to_string(p));
  Vector out(n);
  std::vector<std::size_t> di(p), dj(p);
  // Expands the factorwise products Π_t (Σ_k μ(k; di[t], dj[t]) x_k),
  // accumulating into the flat output index digit by digit.
  const auto expand = [&](const auto& self, std::size_t t, std::size_t flat,
                          const Scalar& acc) -> void {
    if (t == p) {
      out[flat] += acc;
      return;
    }
    for (std::size_t k = 0; k < h.dim; ++k) {
      const Scalar& c = h.mu(k, di[t], dj[t]);
      if (c.is_zero()) continue;
      self(self, t + 1, flat * h.dim + k, acc * c);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    std::size_t rest = i;
    for (std::size_t t = p; t-- > 0;) {
      di[t] = rest % h.dim;
      rest /= h.dim;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      rest = j;
      for (std::size_t t = p; t-- > 0;) {
        dj[t] = rest % h.dim;
        rest /= h.dim;
      }
      expand(expand, 0, 0, a[i] * b[j]);
    }
  }
  return out;
}

Report check_bialgebra(const Bialgebra& h) {
  require_bialgebra_shapes(h);
  const std::size_t d = h.dim;
  Report report;

  {  // associativity of μ
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t k = 0; k < d && ok; ++k) {
          const Vector lhs =
              mu_apply(h, mu_apply(h, basis_vector(d, i), basis_vector(d, j)), basis_vector(d, k));
          const Vector rhs =
              mu_apply(h, basis_vector(d, i), mu_apply(h, basis_vector(d, j), basis_vector(d, k)));
          if (lhs != rhs) {
            report.fail("associativity",
                        "basis triple (" + label_of(h, i) + "," + label_of(h, j) + "," +
                            label_of(h, k) + "): (xy)z = " + tensor_combination(h, lhs, 1) +
                            ", x(yz) = " + tensor_combination(h, rhs, 1));
            ok = false;
          }
        }
    if (ok) report.ok("associativity");
  }

  {  // unit laws
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      const Vector e = basis_vector(d, i);
      const Vector left = mu_apply(h, h.unit, e);
      const Vector right = mu_apply(h, e, h.unit);
      if (left != e || right != e) {
        report.fail("unit-laws", "basis " + label_of(h, i) + ": 1*x = " +
                                     tensor_combination(h, left, 1) + ", x*1 = " +
                                     tensor_combination(h, right, 1));
        ok = false;
      }
    }
    if (ok) report.ok("unit-laws");
  }

  {  // coassociativity of Δ
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      Vector lhs(d * d * d), rhs(d * d * d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t r = 0; r < d; ++r) {
            Scalar& l = lhs[(p * d + q) * d + r];
            Scalar& rr = rhs[(p * d + q) * d + r];
            for (std::size_t j = 0; j < d; ++j) l += h.delta(i, j, r) * h.delta(j, p, q);
            for (std::size_t k = 0; k < d; ++k) rr += h.delta(i, p, k) * h.delta(k, q, r);
          }
      if (lhs != rhs) {
        report.fail("coassociativity",
                    "basis " + label_of(h, i) + ": (Δ⊗Id)Δ = " + tensor_combination(h, lhs, 3) +
                        ", (Id⊗Δ)Δ = " + tensor_combination(h, rhs, 3));
        ok = false;
      }
    }
    if (ok) report.ok("coassociativity");
  }

  {  // counit laws
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      Vector left(d), right(d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) {
          left[k] += h.delta(i, j, k) * h.counit[j];   // (ε⊗Id)Δ(x_i)
          right[k] += h.delta(i, k, j) * h.counit[j];  // (Id⊗ε)Δ(x_i)
        }
      const Vector e = basis_vector(d, i);
      if (left != e || right != e) {
        report.fail("counit-laws", "basis " + label_of(h, i) + ": (ε⊗Id)Δ = " +
                                       tensor_combination(h, left, 1) + ", (Id⊗ε)Δ = " +
                                       tensor_combination(h, right, 1));
        ok = false;
      }
    }
    if (ok) report.ok("counit-laws");
  }

  {  // Δ is a unital algebra morphism
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        Vector lhs(d * d), rhs(d * d);
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q) {
            Scalar& l = lhs[p * d + q];
            Scalar& r = rhs[p * d + q];
            for (std::size_t m = 0; m < d; ++m) l += h.mu(m, i, j) * h.delta(m, p, q);
            for (std::size_t a = 0; a < d; ++a)
              for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c)
                  for (std::size_t e = 0; e < d; ++e)
                    r += h.delta(i, a, b) * h.delta(j, c, e) * h.mu(p, a, c) * h.mu(q, b, e);
          }
        if (lhs != rhs) {
          report.fail("comultiplication-morphism",
                      "basis pair (" + label_of(h, i) + "," + label_of(h, j) + "): Δ(xy) = " +
                          tensor_combination(h, lhs, 2) + ", Δ(x)Δ(y) = " +
                          tensor_combination(h, rhs, 2));
          ok = false;
        }
      }
    if (ok) {
      Vector delta_unit(d * d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t i = 0; i < d; ++i)
            delta_unit[p * d + q] += h.unit[i] * h.delta(i, p, q);
      if (delta_unit != tensor_algebra_unit(h, 2)) {
        report.fail("comultiplication-morphism",
                    "Δ(1) = " + tensor_combination(h, delta_unit, 2) + " differs from 1⊗1");
        ok = false;
      }
    }
    if (ok) report.ok("comultiplication-morphism");
  }

  {  // ε is a unital algebra morphism
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        Scalar lhs;
        for (std::size_t m = 0; m < d; ++m) lhs += h.mu(m, i, j) * h.counit[m];
        const Scalar rhs = h.counit[i] * h.counit[j];
        if (lhs != rhs) {
          report.fail("counit-morphism", "basis pair (" + label_of(h, i) + "," + label_of(h, j) +
                                             "): ε(xy) = " + lhs.to_string() + ", ε(x)ε(y) = " +
                                             rhs.to_string());
          ok = false;
        }
      }
    if (ok) {
      Scalar eps_unit;
      for (std::size_t i = 0; i < d; ++i) eps_unit += h.unit[i] * h.counit[i];
      if (!eps_unit.is_one()) {
        report.fail("counit-morphism", "ε(1) = " + eps_unit.to_string() + " differs from 1");
        ok = false;
      }
    }
    if (ok) report.ok("counit-morphism");
  }

  return report;
}

std::optional<Vector> qt_inverse(const Bialgebra& h, const Vector& r) {
  require_bialgebra_shapes(h);
  require_element_shape(h, r, "R");
  const std::size_t d = h.dim;
  const std::size_t n = d * d;
  // Matrix of left multiplication by R in H⊗H.
  Matrix lmul(n, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Scalar& coeff = r[a * d + b];
      if (coeff.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e)
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
              const Scalar term = coeff * h.mu(p, a, c) * h.mu(q, b, e);
              if (!term.is_zero()) lmul(p * d + q, c * d + e) += term;
            }
    }
  Matrix inv;
  try {
    inv = lmul.inverse();
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
  Vector candidate = inv.apply(tensor_algebra_unit(h, 2));
  // The solve gives a left inverse; require it to be two-sided.
  if (tensor_algebra_mul(h, 2, candidate, r) != tensor_algebra_unit(h, 2)) return std::nullopt;
  return candidate;
}

Report check_qt(const Bialgebra& h, const QTStructure& qt) {
  require_bialgebra_shapes(h);
  require_element_shape(h, qt.R, "R");
  if (!qt.R_inv.empty()) require_element_shape(h, qt.R_inv, "R_inv");
  const std::size_t d = h.dim;
  Report report;
  const Vector unit2 = tensor_algebra_unit(h, 2);

  if (qt.R_inv.empty()) {
    if (qt_inverse(h, qt.R)) {
      report.ok("qt-invertibility");
    } else {
      report.fail("qt-invertibility", "R has no two-sided inverse in H⊗H");
    }
  } else {
    const Vector left = tensor_algebra_mul(h, 2, qt.R, qt.R_inv);
    const Vector right = tensor_algebra_mul(h, 2, qt.R_inv, qt.R);
    if (left == unit2 && right == unit2) {
      report.ok("qt-invertibility");
    } else {
      report.fail("qt-invertibility",
                  "supplied inverse fails: R*R_inv = " + tensor_combination(h, left, 2) +
                      ", R_inv*R = " + tensor_combination(h, right, 2));
    }
  }

  {  // (τ∘Δ)(x)·R = R·Δ(x) on all basis elements
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      Vector delta_i(d * d), tau_delta_i(d * d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          delta_i[p * d + q] = h.delta(i, p, q);
          tau_delta_i[p * d + q] = h.delta(i, q, p);
        }
      const Vector lhs = tensor_algebra_mul(h, 2, tau_delta_i, qt.R);
      const Vector rhs = tensor_algebra_mul(h, 2, qt.R, delta_i);
      if (lhs != rhs) {
        report.fail("qt-almost-cocommutativity",
                    "basis " + label_of(h, i) + ": (τΔ)(x)*R = " + tensor_combination(h, lhs, 2) +
                        ", R*Δ(x) = " + tensor_combination(h, rhs, 2));
        ok = false;
      }
    }
    if (ok) report.ok("qt-almost-cocommutativity");
  }

  // Embeddings of R into H⊗H⊗H.
  const std::size_t n3 = d * d * d;
  Vector r12(n3), r13(n3), r23(n3);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t flat = (a * d + b) * d + c;
        r12[flat] = qt.R[a * d + b] * h.unit[c];
        r13[flat] = qt.R[a * d + c] * h.unit[b];
        r23[flat] = h.unit[a] * qt.R[b * d + c];
      }

  {  // (Δ⊗Id)(R) = R₁₃R₂₃
    Vector lhs(n3);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t i = 0; i < d; ++i)
            lhs[(a * d + b) * d + c] += h.delta(i, a, b) * qt.R[i * d + c];
    const Vector rhs = tensor_algebra_mul(h, 3, r13, r23);
    if (lhs == rhs) {
      report.ok("qt-hexagon-1");
    } else {
      report.fail("qt-hexagon-1", "(Δ⊗Id)(R) = " + tensor_combination(h, lhs, 3) +
                                      ", R13*R23 = " + tensor_combination(h, rhs, 3));
    }
  }

  {  // (Id⊗Δ)(R) = R₁₃R₁₂
    Vector lhs(n3);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t j = 0; j < d; ++j)
            lhs[(a * d + b) * d + c] += qt.R[a * d + j] * h.delta(j, b, c);
    const Vector rhs = tensor_algebra_mul(h, 3, r13, r12);
    if (lhs == rhs) {
      report.ok("qt-hexagon-2");
    } else {
      report.fail("qt-hexagon-2", "(Id⊗Δ)(R) = " + tensor_combination(h, lhs, 3) +
                                      ", R13*R12 = " + tensor_combination(h, rhs, 3));
    }
  }

  return report;
}

Report check_qybe(const Bialgebra& h, const Vector& r) {
  require_bialgebra_shapes(h);
  require_element_shape(h, r, "R");
  const std::size_t d = h.dim;
  const std::size_t n3 = d * d * d;
  Report report;

  Vector r12(n3), r13(n3), r23(n3);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t flat = (a * d + b) * d + c;
        r12[flat] = r[a * d + b] * h.unit[c];
        r13[flat] = r[a * d + c] * h.unit[b];
        r23[flat] = h.unit[a] * r[b * d + c];
      }
  const Vector lhs = tensor_algebra_mul(h, 3, tensor_algebra_mul(h, 3, r12, r13), r23);
  const Vector rhs = tensor_algebra_mul(h, 3, tensor_algebra_mul(h, 3, r23, r13), r12);
  if (lhs == rhs) {
    report.ok("qybe");
  } else {
    report.fail("qybe", "R12*R13*R23 = " + tensor_combination(h, lhs, 3) + ", R23*R13*R12 = " +
                            tensor_combination(h, rhs, 3));
  }

  {
    // Factor-reversed form, evaluated through independent coefficient sums:
    // with R = Σ s_i⊗t_i (pairs p = (u,v)),
    //   Σ t_j t_i ⊗ t_k s_i ⊗ s_k s_j  =  Σ t_k t_j ⊗ s_k t_i ⊗ s_j s_i.
    Vector flipped_lhs(n3), flipped_rhs(n3);
    for (std::size_t u1 = 0; u1 < d; ++u1)
      for (std::size_t v1 = 0; v1 < d; ++v1) {
        const Scalar& c1 = r[u1 * d + v1];
        if (c1.is_zero()) continue;
        for (std::size_t u2 = 0; u2 < d; ++u2)
          for (std::size_t v2 = 0; v2 < d; ++v2) {
            const Scalar& c2 = r[u2 * d + v2];
            if (c2.is_zero()) continue;
            for (std::size_t u3 = 0; u3 < d; ++u3)
              for (std::size_t v3 = 0; v3 < d; ++v3) {
                const Scalar& c3 = r[u3 * d + v3];
                if (c3.is_zero()) continue;
                const Scalar coeff = c1 * c2 * c3;
                for (std::size_t a = 0; a < d; ++a)
                  for (std::size_t b = 0; b < d; ++b)
                    for (std::size_t c = 0; c < d; ++c) {
                      const std::size_t flat = (a * d + b) * d + c;
                      flipped_lhs[flat] +=
                          coeff * h.mu(a, v2, v1) * h.mu(b, v3, u1) * h.mu(c, u3, u2);
                      flipped_rhs[flat] +=
                          coeff * h.mu(a, v3, v2) * h.mu(b, u3, v1) * h.mu(c, u2, u1);
                    }
              }
          }
      }
    if (flipped_lhs == flipped_rhs) {
      report.ok("qybe-flipped");
    } else {
      report.fail("qybe-flipped", "reversed form differs: lhs = " +
                                      tensor_combination(h, flipped_lhs, 3) + ", rhs = " +
                                      tensor_combination(h, flipped_rhs, 3));
    }
  }

  return report;
}

namespace {

/// Convolution product of two bilinear forms on H.
Matrix convolution(const Bialgebra& h, const Matrix& a, const Matrix& b) {
  const std::size_t d = h.dim;
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < d; ++t)
              out(i, j) += h.delta(i, p, q) * h.delta(j, s, t) * a(p, s) * b(q, t);
  return out;
}

Matrix counit_form(const Bialgebra& h) {
  Matrix out(h.dim, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) out(i, j) = h.counit[i] * h.counit[j];
  return out;
}

std::string form_string(const Bialgebra& h, const Matrix& f) {
  Vector flat(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) flat[i * h.dim + j] = f(i, j);
  return tensor_combination(h, flat, 2);
}

}  // namespace

std::optional<Matrix> dual_qt_inverse(const Bialgebra& h, const Matrix& r) {
  require_bialgebra_shapes(h);
  require_form_shape(h, r, "dual R");
  const std::size_t d = h.dim;
  const std::size_t n = d * d;
  // (R * S)(x_i⊗x_j) = Σ δ(i;p,q) δ(j;s,t) R(p,s) S(q,t) is linear in S.
  Matrix system(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t t = 0; t < d; ++t)
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t s = 0; s < d; ++s)
              system(i * d + j, q * d + t) += h.delta(i, p, q) * h.delta(j, s, t) * r(p, s);
  Vector rhs(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rhs[i * d + j] = h.counit[i] * h.counit[j];
  Matrix inv;
  try {
    inv = system.inverse();
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
  const Vector solution = inv.apply(rhs);
  Matrix candidate(d, d);
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t t = 0; t < d; ++t) candidate(q, t) = solution[q * d + t];
  // Require the convolution inverse to be two-sided.
  if (convolution(h, candidate, r) != counit_form(h)) return std::nullopt;
  return candidate;
}

Report check_dual_qt(const Bialgebra& h, const DualQTStructure& dual) {
  require_bialgebra_shapes(h);
  require_form_shape(h, dual.R, "dual R");
  const bool has_inverse = dual.R_inv.rows() != 0 || dual.R_inv.cols() != 0;
  if (has_inverse) require_form_shape(h, dual.R_inv, "dual R_inv");
  const std::size_t d = h.dim;
  Report report;

  if (has_inverse) {
    const Matrix left = convolution(h, dual.R, dual.R_inv);
    const Matrix right = convolution(h, dual.R_inv, dual.R);
    const Matrix eps2 = counit_form(h);
    if (left == eps2 && right == eps2) {
      report.ok("dual-qt-convolution-invertibility");
    } else {
      report.fail("dual-qt-convolution-invertibility",
                  "supplied inverse fails: R*R_inv = " + form_string(h, left) + ", R_inv*R = " +
                      form_string(h, right) + ", ε⊗ε = " + form_string(h, eps2));
    }
  } else {
    if (dual_qt_inverse(h, dual.R)) {
      report.ok("dual-qt-convolution-invertibility");
    } else {
      report.fail("dual-qt-convolution-invertibility",
                  "the form has no two-sided convolution inverse");
    }
  }

  {  // Σ y′x′·R(x″⊗y″) = Σ R(x′⊗y′)·x″y″
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        Vector lhs(d), rhs(d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
              for (std::size_t e = 0; e < d; ++e) {
                const Scalar pair = h.delta(i, a, b) * h.delta(j, c, e);
                if (pair.is_zero()) continue;
                for (std::size_t k = 0; k < d; ++k) {
                  lhs[k] += pair * h.mu(k, c, a) * dual.R(b, e);
                  rhs[k] += pair * dual.R(a, c) * h.mu(k, b, e);
                }
              }
        if (lhs != rhs) {
          report.fail("dual-qt-almost-commutativity",
                      "basis pair (" + label_of(h, i) + "," + label_of(h, j) + "): lhs = " +
                          tensor_combination(h, lhs, 1) + ", rhs = " +
                          tensor_combination(h, rhs, 1));
          ok = false;
        }
      }
    if (ok) report.ok("dual-qt-almost-commutativity");
  }

  {  // R(xy⊗z) = Σ R(x⊗z′)R(y⊗z″)
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t k = 0; k < d && ok; ++k) {
          Scalar lhs, rhs;
          for (std::size_t m = 0; m < d; ++m) lhs += h.mu(m, i, j) * dual.R(m, k);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t e = 0; e < d; ++e)
              rhs += h.delta(k, c, e) * dual.R(i, c) * dual.R(j, e);
          if (lhs != rhs) {
            report.fail("dual-qt-mult-rule-1",
                        "basis triple (" + label_of(h, i) + "," + label_of(h, j) + "," +
                            label_of(h, k) + "): R(xy⊗z) = " + lhs.to_string() +
                            ", Σ R(x⊗z′)R(y⊗z″) = " + rhs.to_string());
            ok = false;
          }
        }
    if (ok) report.ok("dual-qt-mult-rule-1");
  }

  {  // R(x⊗yz) = Σ R(x′⊗z)R(x″⊗y)
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t k = 0; k < d && ok; ++k) {
          Scalar lhs, rhs;
          for (std::size_t m = 0; m < d; ++m) lhs += h.mu(m, j, k) * dual.R(i, m);
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
              rhs += h.delta(i, a, b) * dual.R(a, k) * dual.R(b, j);
          if (lhs != rhs) {
            report.fail("dual-qt-mult-rule-2",
                        "basis triple (" + label_of(h, i) + "," + label_of(h, j) + "," +
                            label_of(h, k) + "): R(x⊗yz) = " + lhs.to_string() +
                            ", Σ R(x′⊗z)R(x″⊗y) = " + rhs.to_string());
            ok = false;
          }
        }
    if (ok) report.ok("dual-qt-mult-rule-2");
  }

  return report;
}

Report check_module(const Bialgebra& h, const HModule& m) {
  require_bialgebra_shapes(h);
  require_module_shapes(h, m);
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Report report;

  {  // 1·u = u
    bool ok = true;
    for (std::size_t u = 0; u < md && ok; ++u)
      for (std::size_t k = 0; k < md && ok; ++k) {
        Scalar sum;
        for (std::size_t hh = 0; hh < d; ++hh) sum += h.unit[hh] * m.action(k, hh, u);
        const Scalar expected = (k == u) ? Scalar(1) : Scalar(0);
        if (sum != expected) {
          report.fail("module-unit", "basis m" + std::to_string(u) + ": coefficient of m" +
                                         std::to_string(k) + " in 1*m" + std::to_string(u) +
                                         " is " + sum.to_string());
          ok = false;
        }
      }
    if (ok) report.ok("module-unit");
  }

  {  // (x_i x_j)·u = x_i·(x_j·u)
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t u = 0; u < md && ok; ++u) {
          Vector lhs(md), rhs(md);
          for (std::size_t k = 0; k < md; ++k) {
            for (std::size_t mm = 0; mm < d; ++mm) lhs[k] += h.mu(mm, i, j) * m.action(k, mm, u);
            for (std::size_t p = 0; p < md; ++p) rhs[k] += m.action(p, j, u) * m.action(k, i, p);
          }
          if (lhs != rhs) {
            report.fail("module-associativity",
                        "(" + label_of(h, i) + "," + label_of(h, j) + ", m" + std::to_string(u) +
                            "): (xy)*u = " + format_combination(lhs, {}) + ", x*(y*u) = " +
                            format_combination(rhs, {}));
            ok = false;
          }
        }
    if (ok) report.ok("module-associativity");
  }

  return report;
}

Report check_comodule(const Bialgebra& h, const HComodule& m) {
  require_bialgebra_shapes(h);
  require_comodule_shapes(h, m);
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Report report;

  {  // (Id⊗ρ)ρ = (Δ⊗Id)ρ
    bool ok = true;
    for (std::size_t u = 0; u < md && ok; ++u) {
      bool match = true;
      std::string mismatch;
      for (std::size_t h1 = 0; h1 < d && match; ++h1)
        for (std::size_t h2 = 0; h2 < d && match; ++h2)
          for (std::size_t v = 0; v < md && match; ++v) {
            Scalar lhs, rhs;
            for (std::size_t w = 0; w < md; ++w)
              lhs += m.rho(h1 * md + w, u) * m.rho(h2 * md + v, w);
            for (std::size_t hh = 0; hh < d; ++hh)
              rhs += m.rho(hh * md + v, u) * h.delta(hh, h1, h2);
            if (lhs != rhs) {
              match = false;
              mismatch = "component (" + label_of(h, h1) + "⊗" + label_of(h, h2) + "⊗m" +
                         std::to_string(v) + "): " + lhs.to_string() + " vs " + rhs.to_string();
            }
          }
      if (!match) {
        report.fail("comodule-coassociativity", "basis m" + std::to_string(u) + ", " + mismatch);
        ok = false;
      }
    }
    if (ok) report.ok("comodule-coassociativity");
  }

  {  // (ε⊗Id)ρ = Id
    bool ok = true;
    for (std::size_t u = 0; u < md && ok; ++u)
      for (std::size_t v = 0; v < md && ok; ++v) {
        Scalar sum;
        for (std::size_t hh = 0; hh < d; ++hh) sum += h.counit[hh] * m.rho(hh * md + v, u);
        const Scalar expected = (v == u) ? Scalar(1) : Scalar(0);
        if (sum != expected) {
          report.fail("comodule-counit", "basis m" + std::to_string(u) + ": coefficient of m" +
                                             std::to_string(v) + " in (ε⊗Id)ρ is " +
                                             sum.to_string());
          ok = false;
        }
      }
    if (ok) report.ok("comodule-counit");
  }

  return report;
}

Report check_module_morphism(const Bialgebra& h, const HModule& m, const Matrix& alpha) {
  require_bialgebra_shapes(h);
  require_module_shapes(h, m);
  require_alpha_shape(m, alpha);
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Report report;
  for (std::size_t hh = 0; hh < d; ++hh)
    for (std::size_t u = 0; u < md; ++u) {
      Vector lhs(md), rhs(md);
      for (std::size_t k = 0; k < md; ++k) {
        for (std::size_t p = 0; p < md; ++p) lhs[k] += alpha(k, p) * m.action(p, hh, u);
        for (std::size_t q = 0; q < md; ++q) rhs[k] += m.action(k, hh, q) * alpha(q, u);
      }
      if (lhs != rhs) {
        report.fail("module-morphism", "(" + label_of(h, hh) + ", m" + std::to_string(u) +
                                           "): α(x*u) = " + format_combination(lhs, {}) +
                                           ", x*α(u) = " + format_combination(rhs, {}));
        return report;
      }
    }
  report.ok("module-morphism");
  return report;
}

Report check_comodule_morphism(const Bialgebra& h, const HComodule& m, const Matrix& alpha) {
  require_bialgebra_shapes(h);
  require_comodule_shapes(h, m);
  if (!alpha.is_square() || alpha.rows() != m.dim)
    throw DimensionError("alpha must be " + std::to_string(m.dim) + "x" + std::to_string(m.dim) +
                         ", got " + alpha.shape());
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Report report;
  for (std::size_t u = 0; u < md; ++u) {
    for (std::size_t hh = 0; hh < d; ++hh)
      for (std::size_t v = 0; v < md; ++v) {
        Scalar lhs, rhs;
        for (std::size_t w = 0; w < md; ++w) lhs += m.rho(hh * md + w, u) * alpha(v, w);
        for (std::size_t q = 0; q < md; ++q) rhs += m.rho(hh * md + v, q) * alpha(q, u);
        if (lhs != rhs) {
          report.fail("comodule-morphism",
                      "basis m" + std::to_string(u) + ", component (" + label_of(h, hh) + "⊗m" +
                          std::to_string(v) + "): Σ u_H⊗α(u_M) gives " + lhs.to_string() +
                          ", ρ(α(u)) gives " + rhs.to_string());
          return report;
        }
      }
  }
  report.ok("comodule-morphism");
  return report;
}

Matrix module_action_matrix(const Bialgebra& h, const HModule& m, const Vector& element) {
  require_bialgebra_shapes(h);
  require_module_shapes(h, m);
  require_element_shape(h, element, "H⊗H element");
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Matrix out(md * md, md * md);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      const Scalar& coeff = element[s * d + t];
      if (coeff.is_zero()) continue;
      for (std::size_t u = 0; u < md; ++u)
        for (std::size_t v = 0; v < md; ++v)
          for (std::size_t k1 = 0; k1 < md; ++k1) {
            const Scalar& a1 = m.action(k1, s, u);
            if (a1.is_zero()) continue;
            for (std::size_t k2 = 0; k2 < md; ++k2) {
              const Scalar& a2 = m.action(k2, t, v);
              if (a2.is_zero()) continue;
              out(k1 * md + k2, u * md + v) += coeff * a1 * a2;
            }
          }
    }
  return out;
}

HybeCandidate build_B_R(const Bialgebra& h, const QTStructure& qt, const HModule& m,
                        const Matrix& alpha) {
  Report pre;
  pre.absorb(check_bialgebra(h));
  pre.absorb(check_qt(h, qt));
  pre.absorb(check_module(h, m));
  pre.absorb(check_module_morphism(h, m, alpha));
  if (!pre.pass())
    throw ValidationError("cannot build the braiding operator: a precondition failed", pre);
  const Matrix action = module_action_matrix(h, m, qt.R);
  return HybeCandidate{m.dim, permutation_tau(m.dim) * action, alpha};
}

HybeCandidate build_B_dual_R(const Bialgebra& h, const DualQTStructure& dual, const HComodule& m,
                             const Matrix& alpha) {
  Report pre;
  pre.absorb(check_bialgebra(h));
  pre.absorb(check_dual_qt(h, dual));
  pre.absorb(check_comodule(h, m));
  pre.absorb(check_comodule_morphism(h, m, alpha));
  if (!pre.pass())
    throw ValidationError("cannot build the dual braiding operator: a precondition failed", pre);
  const std::size_t d = h.dim;
  const std::size_t md = m.dim;
  Matrix out(md * md, md * md);
  for (std::size_t u = 0; u < md; ++u)
    for (std::size_t v = 0; v < md; ++v)
      for (std::size_t hu = 0; hu < d; ++hu)
        for (std::size_t wu = 0; wu < md; ++wu) {
          const Scalar& cu = m.rho(hu * md + wu, u);
          if (cu.is_zero()) continue;
          for (std::size_t hv = 0; hv < d; ++hv)
            for (std::size_t wv = 0; wv < md; ++wv) {
              const Scalar& cv = m.rho(hv * md + wv, v);
              if (cv.is_zero()) continue;
              const Scalar& form = dual.R(hv, hu);
              if (form.is_zero()) continue;
              out(wv * md + wu, u * md + v) += form * cv * cu;
            }
        }
  return HybeCandidate{md, std::move(out), alpha};
}

}  // namespace hombraid
