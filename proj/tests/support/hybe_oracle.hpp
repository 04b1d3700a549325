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

#ifndef HOMBRAID_TESTS_SUPPORT_HYBE_ORACLE_HPP
#define HOMBRAID_TESTS_SUPPORT_HYBE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "hombraid/hybe.hpp"
#include "hombraid/matrix.hpp"

namespace hombraid::testsupport {

/// Coefficients of an element of M⊗M⊗M, indexed [i][j][k].
using Cube = std::vector<std::vector<std::vector<Scalar>>>;

inline Cube zero_cube(std::size_t m) {
  return Cube(m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
}

/// Applies B to the tensor slots (slot, slot+1) and α to the remaining slot
/// by direct summation over basis indices.  This deliberately avoids the
/// library's Kronecker-product matrices so it can serve as an independent
/// cross-check of the composite-matrix verification.
inline Cube apply_stage(const HybeCandidate& c, std::size_t slot, const Cube& in) {
  const std::size_t m = c.dim;
  Cube out = zero_cube(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& coeff = in[i][j][k];
        if (coeff.is_zero()) continue;
        if (slot == 0) {
          // B on slots (0,1), α on slot 2.
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
              const Scalar& bc = c.B(a * m + b, i * m + j);
              if (bc.is_zero()) continue;
              for (std::size_t z = 0; z < m; ++z) {
                const Scalar& ac = c.alpha(z, k);
                if (ac.is_zero()) continue;
                out[a][b][z] += bc * ac * coeff;
              }
            }
        } else {
          // α on slot 0, B on slots (1,2).
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t z = 0; z < m; ++z) {
              const Scalar& bc = c.B(b * m + z, j * m + k);
              if (bc.is_zero()) continue;
              for (std::size_t a = 0; a < m; ++a) {
                const Scalar& ac = c.alpha(a, i);
                if (ac.is_zero()) continue;
                out[a][b][z] += bc * ac * coeff;
              }
            }
        }
      }
  return out;
}

/// Evaluates the twisted braid identity on every basis vector of M⊗M⊗M and
/// compares the two sides coefficient by coefficient.
inline bool brute_force_hybe(const HybeCandidate& c) {
  const std::size_t m = c.dim;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Cube basis = zero_cube(m);
        basis[i][j][k] = Scalar(1);
        // Composites act right to left: the rightmost stage is applied first.
        const Cube lhs = apply_stage(c, 1, apply_stage(c, 0, apply_stage(c, 1, basis)));
        const Cube rhs = apply_stage(c, 0, apply_stage(c, 1, apply_stage(c, 0, basis)));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace hombraid::testsupport

#endif  // HOMBRAID_TESTS_SUPPORT_HYBE_ORACLE_HPP
