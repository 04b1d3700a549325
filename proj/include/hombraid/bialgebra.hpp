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

#ifndef HOMBRAID_BIALGEBRA_HPP
#define HOMBRAID_BIALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hombraid/hybe.hpp"
#include "hombraid/matrix.hpp"
#include "hombraid/report.hpp"

namespace hombraid {

/// A finite-dimensional bialgebra given by structure constants.
///
/// Index conventions (all arrays are over one fixed basis x_0,…,x_{d−1}):
///   - mu(k; i, j)    = coefficient of x_k in x_i·x_j,
///   - unit[i]        = coordinates of the algebra unit 1,
///   - delta(i; j, k) = coefficient of x_j⊗x_k in Δ(x_i)  (input index first),
///   - counit[i]      = ε(x_i).
struct Bialgebra {
  std::size_t dim = 0;
  Tensor3 mu;
  Vector unit;
  Tensor3 delta;
  Vector counit;
  std::vector<std::string> basis_labels;
};

/// A quasi-triangular element R ∈ H⊗H, stored as its d² coefficients in the
/// tensor-basis ordering x_i⊗x_j ↦ i·d+j.  The inverse may be supplied (it is
/// then verified) or left empty (it is then computed by solving the
/// left-multiplication system).
struct QTStructure {
  Vector R;
  Vector R_inv;  ///< empty when not supplied
};

/// A dual quasi-triangular structure: a bilinear form on H, stored as the
/// d×d matrix R(i,j) = R(x_i⊗x_j), with an optional convolution inverse.
struct DualQTStructure {
  Matrix R;
  Matrix R_inv;  ///< 0×0 when not supplied
};

/// A left module over H: action(k; h, u) = coefficient of m_k in x_h·m_u.
struct HModule {
  std::size_t dim = 0;  ///< carrier dimension m
  Tensor3 action;       ///< shape (m; d, m)
};

/// A left comodule over H: the structure map ρ: M → H⊗M as a (d·m)×m matrix
/// in the tensor-basis ordering, ρ(m_u) = Σ rho(h·m+w, u) x_h⊗m_w.
struct HComodule {
  std::size_t dim = 0;  ///< carrier dimension m
  Matrix rho;           ///< shape (d·m)×m
};

/// Bialgebra axioms, all evaluated basis-wise and exactly.  Report items:
/// "associativity", "unit-laws", "coassociativity", "counit-laws",
/// "comultiplication-morphism", "counit-morphism".
Report check_bialgebra(const Bialgebra& h);

/// Quasi-triangular axioms.  The almost-cocommutativity axiom is checked in
/// its multiplied form (τ∘Δ)(x)·R = R·Δ(x), which avoids dividing by R and is
/// equivalent under invertibility.  Report items: "qt-invertibility",
/// "qt-almost-cocommutativity", "qt-hexagon-1", "qt-hexagon-2".
Report check_qt(const Bialgebra& h, const QTStructure& qt);

/// Dual quasi-triangular axioms.  Report items:
/// "dual-qt-convolution-invertibility", "dual-qt-almost-commutativity",
/// "dual-qt-mult-rule-1" (R(xy⊗z) = Σ R(x⊗z′)R(y⊗z″)),
/// "dual-qt-mult-rule-2" (R(x⊗yz) = Σ R(x′⊗z)R(x″⊗y)).
Report check_dual_qt(const Bialgebra& h, const DualQTStructure& dual);

/// The quantum Yang–Baxter equation R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂ for an element R of
/// H⊗H, evaluated in H⊗H⊗H; additionally cross-checks the factor-reversed
/// form of the identity through an independent coefficient-sum evaluation.
/// Report items: "qybe", "qybe-flipped".
Report check_qybe(const Bialgebra& h, const Vector& r);

/// Module axioms: the unit acts as the identity and the action respects μ.
/// Report items: "module-unit", "module-associativity".
Report check_module(const Bialgebra& h, const HModule& m);

/// Comodule axioms: coassociativity of ρ and the counit law (ε⊗Id)∘ρ = Id.
/// Report items: "comodule-coassociativity", "comodule-counit".
Report check_comodule(const Bialgebra& h, const HComodule& m);

/// α: M → M commutes with the module action.  Report item: "module-morphism".
Report check_module_morphism(const Bialgebra& h, const HModule& m, const Matrix& alpha);

/// α: M → M commutes with the comodule structure map:
/// Σ u_H⊗α(u_M) = Σ α(u)_H⊗α(u)_M.  Report item: "comodule-morphism".
Report check_comodule_morphism(const Bialgebra& h, const HComodule& m, const Matrix& alpha);

/// Two-sided inverse of R in the algebra H⊗H, by solving the
/// left-multiplication linear system; nullopt when no inverse exists.
std::optional<Vector> qt_inverse(const Bialgebra& h, const Vector& r);

/// Two-sided convolution inverse of a bilinear form on H; nullopt when none
/// exists.
std::optional<Matrix> dual_qt_inverse(const Bialgebra& h, const Matrix& r);

/// Product of two elements of H^⊗p, coefficientwise over the tensor basis.
Vector tensor_algebra_mul(const Bialgebra& h, std::size_t p, const Vector& a, const Vector& b);

/// The unit 1^⊗p of H^⊗p.
Vector tensor_algebra_unit(const Bialgebra& h, std::size_t p);

/// The m²×m² matrix by which an element of H⊗H acts on M⊗M.
Matrix module_action_matrix(const Bialgebra& h, const HModule& m, const Vector& element);

/// The operator u⊗v ↦ τ(R·(u⊗v)) on M⊗M, paired with α.  All preconditions
/// (bialgebra, quasi-triangularity, module axioms, morphism α) are verified
/// first; ValidationError carries the failing axiom.
HybeCandidate build_B_R(const Bialgebra& h, const QTStructure& qt, const HModule& m,
                        const Matrix& alpha);

/// The operator u⊗v ↦ Σ R(v_H⊗u_H)·v_M⊗u_M on M⊗M, paired with α; the dual
/// counterpart of build_B_R.  Preconditions verified first.
HybeCandidate build_B_dual_R(const Bialgebra& h, const DualQTStructure& dual, const HComodule& m,
                             const Matrix& alpha);

}  // namespace hombraid

#endif  // HOMBRAID_BIALGEBRA_HPP
