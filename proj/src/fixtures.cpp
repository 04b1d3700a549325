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

#include "hombraid/fixtures.hpp"

namespace hombraid::fixtures {

HomLieAlgebra sl2_lambda_broken() {
  HomLieAlgebra lie = sl2_lambda();
  // Flip the sign of [h,f].  The bracket stays skew-symmetric and still
  // commutes with α, so the only failing invariant is the twisted Jacobi
  // identity, first on the triple (h,e,f) with cyclic sum 4·h.
  lie.bracket(2, 0, 2) = Scalar(2) * Scalar::lambda().inverse();
  lie.bracket(2, 2, 0) = Scalar(-2) * Scalar::lambda().inverse();
  return lie;
}

HomLieAlgebra abelian_hom_lie() {
  HomLieAlgebra lie;
  lie.dim = 2;
  lie.bracket = Tensor3(2, 2, 2);
  lie.alpha = Matrix::identity(2);
  lie.alpha(0, 1) = Scalar(1);  // unipotent twist [[1,1],[0,1]]
  return lie;
}

HomAssociativeAlgebra upper_triangular() {
  HomAssociativeAlgebra alg;
  alg.dim = 3;
  alg.basis_labels = {"E11", "E22", "E12"};
  alg.mu = Tensor3(3, 3, 3);
  alg.mu(0, 0, 0) = Scalar(1);  // E11·E11 = E11
  alg.mu(1, 1, 1) = Scalar(1);  // E22·E22 = E22
  alg.mu(2, 0, 2) = Scalar(1);  // E11·E12 = E12
  alg.mu(2, 2, 1) = Scalar(1);  // E12·E22 = E12
  alg.alpha = Matrix::identity(3);
  return alg;
}

Matrix upper_triangular_endo(const Scalar& c) {
  Matrix endo = Matrix::identity(3);
  endo(2, 2) = c;
  return endo;
}

HomAssociativeAlgebra upper_triangular_twisted() {
  return twist_associative(upper_triangular(), upper_triangular_endo(Scalar::lambda()));
}

HomAssociativeAlgebra dual_numbers() {
  HomAssociativeAlgebra alg;
  alg.dim = 2;
  alg.basis_labels = {"1", "x"};
  alg.mu = Tensor3(2, 2, 2);
  alg.mu(0, 0, 0) = Scalar(1);  // 1·1 = 1
  alg.mu(1, 0, 1) = Scalar(1);  // 1·x = x
  alg.mu(1, 1, 0) = Scalar(1);  // x·1 = x
  alg.alpha = Matrix::identity(2);
  return alg;
}

Matrix dual_numbers_endo(const Scalar& c) {
  Matrix endo = Matrix::identity(2);
  endo(1, 1) = c;
  return endo;
}

HomAssociativeAlgebra full_matrix_2x2() {
  HomAssociativeAlgebra alg;
  alg.dim = 4;
  alg.basis_labels = {"E11", "E12", "E21", "E22"};
  alg.mu = Tensor3(4, 4, 4);
  // E_{ab}·E_{cd} = δ_{bc} E_{ad}, over the basis order (E11, E12, E21, E22).
  const auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) alg.mu(idx(a, d), idx(a, b), idx(b, d)) = Scalar(1);
  alg.alpha = Matrix::identity(4);
  return alg;
}

Bialgebra z2_bialgebra() {
  Bialgebra h;
  h.dim = 2;
  h.basis_labels = {"1", "g"};
  h.mu = Tensor3(2, 2, 2);
  // Group multiplication gᵃ·gᵇ = g^{(a+b) mod 2}.
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) h.mu((a + b) % 2, a, b) = Scalar(1);
  h.unit = Vector(2);
  h.unit[0] = Scalar(1);
  h.delta = Tensor3(2, 2, 2);
  h.delta(0, 0, 0) = Scalar(1);  // Δ(1) = 1⊗1
  h.delta(1, 1, 1) = Scalar(1);  // Δ(g) = g⊗g
  h.counit = Vector(2);
  h.counit[0] = Scalar(1);
  h.counit[1] = Scalar(1);
  return h;
}

QTStructure z2_qt_trivial() {
  QTStructure qt;
  qt.R = Vector(4);
  qt.R[0] = Scalar(1);  // 1⊗1
  return qt;
}

QTStructure z2_qt() {
  QTStructure qt;
  qt.R = Vector(4);
  const Scalar half = Scalar(Rational(1, 2));
  qt.R[0] = half;   // 1⊗1
  qt.R[1] = half;   // 1⊗g
  qt.R[2] = half;   // g⊗1
  qt.R[3] = -half;  // g⊗g
  return qt;
}

QTStructure z2_qt_perturbed() {
  QTStructure qt = z2_qt();
  qt.R[3] = Scalar(Rational(1, 2));
  return qt;
}

DualQTStructure z2_dual_qt() {
  DualQTStructure dual;
  dual.R = Matrix(2, 2);
  // R(gᵃ⊗gᵇ) = (−1)^{ab}
  dual.R(0, 0) = Scalar(1);
  dual.R(0, 1) = Scalar(1);
  dual.R(1, 0) = Scalar(1);
  dual.R(1, 1) = Scalar(-1);
  return dual;
}

HModule z2_sign_module() {
  HModule m;
  m.dim = 2;
  m.action = Tensor3(2, 2, 2);
  // 1 acts as the identity; g acts as diag(1,−1).
  m.action(0, 0, 0) = Scalar(1);
  m.action(1, 0, 1) = Scalar(1);
  m.action(0, 1, 0) = Scalar(1);
  m.action(1, 1, 1) = Scalar(-1);
  return m;
}

HComodule z2_regular_comodule() {
  HComodule m;
  m.dim = 2;
  m.rho = Matrix(4, 2);
  // ρ(m_a) = gᵃ⊗m_a: rows are flat (h·2 + w).
  m.rho(0 * 2 + 0, 0) = Scalar(1);  // m0 ↦ 1⊗m0
  m.rho(1 * 2 + 1, 1) = Scalar(1);  // m1 ↦ g⊗m1
  return m;
}

}  // namespace hombraid::fixtures
