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

#ifndef HOMBRAID_HOMALG_HPP
#define HOMBRAID_HOMALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hombraid/hybe.hpp"
#include "hombraid/matrix.hpp"
#include "hombraid/report.hpp"

namespace hombraid {

/// A vector space together with a linear self-map α (the twisting map).
struct HomModule {
  std::size_t dim = 0;
  Matrix alpha;                          ///< dim×dim
  std::vector<std::string> basis_labels;  ///< optional; e0, e1, … when empty
};

/// A bilinear bracket with structure constants c ([x_i,x_j] = Σ_k c(k;i,j)x_k)
/// twisted by α.  A valid instance is skew-symmetric, multiplicative
/// (α[x,y] = [αx,αy]) and satisfies the twisted Jacobi identity
///   [[x,y],α(z)] + [[z,x],α(y)] + [[y,z],α(x)] = 0.
struct HomLieAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;  ///< (k; i, j)
  Matrix alpha;     ///< dim×dim
  std::vector<std::string> basis_labels;
};

/// A bilinear multiplication μ twisted by α.  A valid instance is
/// multiplicative (α∘μ = μ∘(α⊗α)) and twisted-associative:
///   μ(α(x), μ(y,z)) = μ(μ(x,y), α(z)).
struct HomAssociativeAlgebra {
  std::size_t dim = 0;
  Tensor3 mu;  ///< (k; i, j)
  Matrix alpha;
  std::vector<std::string> basis_labels;
};

/// Skew-symmetry of the bracket constants.  Report item: "skew-symmetry".
Report check_skew_symmetry(const HomLieAlgebra& lie);

/// α[x,y] = [α(x),α(y)] on all basis pairs.  Report item: "multiplicativity".
Report check_multiplicativity(const HomLieAlgebra& lie);

/// Twisted Jacobi identity on all basis triples (i,j,k) in lexicographic
/// order; the witness names the first failing triple and its cyclic sum.
/// Report item: "hom-jacobi".
Report check_hom_jacobi(const HomLieAlgebra& lie);

/// All three HomLieAlgebra invariants, always evaluated together.
Report check_hom_lie(const HomLieAlgebra& lie);

/// α(μ(x,y)) = μ(α(x),α(y)) on all basis pairs.  Report item:
/// "multiplicativity".
Report check_multiplicativity(const HomAssociativeAlgebra& alg);

/// μ(α(x), μ(y,z)) = μ(μ(x,y), α(z)) on all basis triples.  Report item:
/// "hom-associativity".
Report check_hom_associativity(const HomAssociativeAlgebra& alg);

/// Both HomAssociativeAlgebra invariants.
Report check_hom_assoc(const HomAssociativeAlgebra& alg);

/// Twists a Lie algebra (α = Id) along a Lie-algebra endomorphism:
/// [x,y]_α = α[x,y].  Throws ValidationError when the input is not a Lie
/// algebra or alpha is not an endomorphism of its bracket (reporting the
/// first failing pair).
HomLieAlgebra twist_lie(const HomLieAlgebra& lie, const Matrix& alpha);

/// Twists an associative algebra (α = Id) along an algebra endomorphism:
/// μ_α = α∘μ.  Throws ValidationError on a non-endomorphism.
HomAssociativeAlgebra twist_associative(const HomAssociativeAlgebra& alg,
                                            const Matrix& alpha);

/// The commutator bracket [x,y] = μ(x,y) − μ(y,x) of a valid twisted
/// associative algebra, with the same α.  Throws ValidationError when the
/// input fails its own invariants.
HomLieAlgebra commutator_hom_lie(const HomAssociativeAlgebra& alg);

/// The one-dimensional extension L′ = 𝐤⊕L: basis u₀ = (1,0) at flat index 0
/// and u_i = (0,x_i) at flat index i; α′ = diag(1)⊕α.
HomModule lie_prime(const HomLieAlgebra& lie);

/// The swap-plus-bracket operator on L′⊗L′,
///   (a,x)⊗(b,y) ↦ (b,α(y))⊗(a,α(x)) + (1,0)⊗(0,[x,y]),
/// paired with α′ of lie_prime.  A solution of the twisted Yang–Baxter
/// identity for every valid input; validated eagerly (ValidationError).
HybeCandidate build_B_alpha(const HomLieAlgebra& lie);

/// The closed-form inverse of build_B_alpha for invertible α,
///   (a,x)⊗(b,y) ↦ (b,α⁻¹(y))⊗(a,α⁻¹(x)) + (0,α⁻²[x,y])⊗(1,0),
/// paired with α′⁻¹.  Throws ValidationError on invalid input and
/// SingularMatrixError on singular α.
HybeCandidate invert_B_alpha(const HomLieAlgebra& lie);

/// The twisted sl(2) family over ℚ(λ): basis (h,e,f) with
/// [h,e] = 2λ·e, [h,f] = −2λ⁻¹·f, [e,f] = h and α = diag(1, λ, 1/λ).
HomLieAlgebra sl2_lambda();

/// Classical sl(2) over ℚ (the λ = 1 member): [h,e] = 2e, [h,f] = −2f,
/// [e,f] = h, α = Id.
HomLieAlgebra sl2();

/// Entrywise substitution λ := c on every structure constant and on α.
/// Throws PoleError when any entry has a pole at c.
Matrix specialize(const Matrix& m, const Rational& c);
Tensor3 specialize(const Tensor3& t, const Rational& c);
HomLieAlgebra specialize(const HomLieAlgebra& lie, const Rational& c);
HybeCandidate specialize(const HybeCandidate& cand, const Rational& c);

/// The twisted flip on a HomModule carrier (forwards to the matrix form).
inline HybeCandidate tau_alpha(const HomModule& m) { return tau_alpha(m.alpha); }

}  // namespace hombraid

#endif  // HOMBRAID_HOMALG_HPP
