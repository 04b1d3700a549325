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

#ifndef HOMBRAID_FIXTURES_HPP
#define HOMBRAID_FIXTURES_HPP

#include "hombraid/bialgebra.hpp"
#include "hombraid/homalg.hpp"

namespace hombraid::fixtures {

/// sl(2)_λ with the sign of [h,f] deliberately flipped; skew-symmetry and
/// multiplicativity still hold, but the twisted Jacobi check fails on the
/// triple (h,e,f).
HomLieAlgebra sl2_lambda_broken();

/// Zero bracket on ℚ² with a unipotent α; passes every Lie invariant.
HomLieAlgebra abelian_hom_lie();

/// Upper-triangular 2×2 matrices, basis (E11, E22, E12), untwisted (α = Id).
HomAssociativeAlgebra upper_triangular();

/// The algebra endomorphism of upper_triangular() fixing E11 and E22 and
/// scaling E12 by c.
Matrix upper_triangular_endo(const Scalar& c);

/// upper_triangular() twisted along upper_triangular_endo(λ).
HomAssociativeAlgebra upper_triangular_twisted();

/// ℚ[x]/(x²), basis (1, x), untwisted.
HomAssociativeAlgebra dual_numbers();

/// The endomorphism of dual_numbers() fixing 1 and scaling x by c.
Matrix dual_numbers_endo(const Scalar& c);

/// Full 2×2 matrix algebra, basis (E11, E12, E21, E22), α = Id.
HomAssociativeAlgebra full_matrix_2x2();

/// The group bialgebra of the order-2 group, basis (1, g): g² = 1, both basis
/// elements group-like (Δ(b) = b⊗b, ε ≡ 1).
Bialgebra z2_bialgebra();

/// The trivial quasi-triangular element 1⊗1 on z2_bialgebra().
QTStructure z2_qt_trivial();

/// The nontrivial quasi-triangular element ½(1⊗1 + 1⊗g + g⊗1 − g⊗g).
QTStructure z2_qt();

/// The perturbed element with the g⊗g coefficient flipped to +½; not a
/// quasi-triangular structure.
QTStructure z2_qt_perturbed();

/// The bilinear form R(gᵃ⊗gᵇ) = (−1)^{ab} on z2_bialgebra(), its own
/// convolution inverse; a dual quasi-triangular structure.
DualQTStructure z2_dual_qt();

/// The two-dimensional module over z2_bialgebra() on which g acts as
/// diag(1,−1).
HModule z2_sign_module();

/// The two-dimensional comodule over z2_bialgebra() with ρ(m_a) = gᵃ⊗m_a.
HComodule z2_regular_comodule();

}  // namespace hombraid::fixtures

#endif  // HOMBRAID_FIXTURES_HPP
