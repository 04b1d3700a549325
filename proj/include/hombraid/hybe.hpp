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

#ifndef HOMBRAID_HYBE_HPP
#define HOMBRAID_HYBE_HPP

#include <cstddef>

#include "hombraid/matrix.hpp"
#include "hombraid/report.hpp"

namespace hombraid {

/// A candidate solution of the twisted Yang–Baxter identity on a carrier
/// (M, α): a square matrix B on M⊗M together with the structure map α on M.
/// A valid candidate intertwines α⊗α; the identity itself reads
///   (α⊗B)(B⊗α)(α⊗B) = (B⊗α)(α⊗B)(B⊗α)   on M⊗M⊗M,
/// which degenerates to the classical Yang–Baxter equation at α = Id.
struct HybeCandidate {
  std::size_t dim = 0;  ///< dimension m of the carrier M
  Matrix B;             ///< m²×m² operator on M⊗M
  Matrix alpha;         ///< m×m structure map on M
};

/// Verifies B·(α⊗α) = (α⊗α)·B exactly.  Report item: "hom-module-morphism".
/// Throws DimensionError when shapes do not conform.
Report check_morphism(const HybeCandidate& c);

/// Verifies the twisted Yang–Baxter identity by materializing both m³×m³
/// composites.  The morphism condition is part of the check (the identity is
/// only meaningful for maps intertwining α⊗α); both items are always
/// evaluated.  Report items: "hom-module-morphism", "hybe".
Report check_hybe(const HybeCandidate& c);

/// Classical Yang–Baxter check for a square matrix B on M⊗M with carrier
/// dimension m: (Id⊗B)(B⊗Id)(Id⊗B) = (B⊗Id)(Id⊗B)(B⊗Id).  Report item:
/// "ybe".
Report check_ybe(const Matrix& B, std::size_t m);

/// The twisted flip u⊗v ↦ α(v)⊗α(u) as a candidate; a solution for any α.
HybeCandidate tau_alpha(const Matrix& alpha);

/// Scalar multiple (k·B, α).  Multiples of solutions are again solutions;
/// k = 0 gives the zero map, which satisfies the identity vacuously.
HybeCandidate scale_solution(const HybeCandidate& c, const Scalar& k);

/// The inverse pair (B⁻¹, α⁻¹), a solution on (M, α⁻¹) whenever (B, α) is a
/// solution.  Throws SingularMatrixError naming which of B or α is singular.
HybeCandidate invert_solution(const HybeCandidate& c);

}  // namespace hombraid

#endif  // HOMBRAID_HYBE_HPP
