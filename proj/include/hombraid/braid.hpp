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

#ifndef HOMBRAID_BRAID_HPP
#define HOMBRAID_BRAID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hombraid/hybe.hpp"
#include "hombraid/rational.hpp"

namespace hombraid {

/// A word in the generators σ_1, …, σ_{n−1}: letter +i stands for σ_i and
/// −i for σ_i⁻¹.
struct BraidWord {
  std::size_t n = 2;         ///< strand count, n ≥ 2
  std::vector<int> letters;  ///< each letter in ±{1, …, n−1}
};

/// Parses the space-separated signed-integer word syntax, e.g. "1 2 -1".
/// Throws ParseError on malformed tokens or out-of-range generator indices.
BraidWord parse_braid_word(std::size_t n, const std::string& text);

/// Images of the generators σ_i on the n-fold tensor power of an
/// m-dimensional carrier.  Inverses are present iff both B and α of the
/// originating candidate are invertible; otherwise `note` says why not.
struct BraidRep {
  std::size_t n = 2;               ///< strand count
  std::size_t m = 1;               ///< dimension of a single tensor factor
  std::vector<Matrix> generators;  ///< n−1 matrices, each mⁿ×mⁿ
  std::vector<Matrix> inverses;    ///< same length as generators, or empty
  std::string note;                ///< set when inverses are omitted
};

/// Default bound on the carrier dimension mⁿ of a representation.
inline constexpr std::size_t kDefaultDimensionCap = 10000;

/// Builds the generator images σ_i ↦ α^⊗(i−1) ⊗ B ⊗ α^⊗(n−i−1).  Requires
/// n ≥ 2 and a candidate that passes check_hybe (ValidationError otherwise).
/// Refuses mⁿ > cap with an Error.  Inverses are precomputed when both B and
/// α are invertible.
BraidRep build_braid_generators(const HybeCandidate& c, std::size_t n,
                                std::size_t cap = kDefaultDimensionCap);

/// Verifies every defining relation of the braid group on the generator
/// images, plus the inverse property when inverses are present.  Report
/// items: "adjacent-braid-i" for σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1},
/// "far-commutation-i-j" for |i−j| > 1, and "generator-inverse-i".
Report check_braid_relations(const BraidRep& rep);

/// The ordered product of generator images along the word, multiplied left
/// to right without free reduction.  Errors: strand-count mismatch; negative
/// letters when the representation has no inverses.
Matrix evaluate_braid_word(const BraidRep& rep, const BraidWord& w);

/// Entrywise evaluation of every generator (and inverse) at λ = c.  Errors:
/// c = 0 is refused; a pole at c in any entry propagates as PoleError.
BraidRep specialize_rep(const BraidRep& rep, const Rational& c);

}  // namespace hombraid

#endif  // HOMBRAID_BRAID_HPP
