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

#include "hombraid/braid.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>

#include "hombraid/homalg.hpp"

namespace hombraid {

namespace {

/// "first differing entry at (r,c): x vs y" for two equal-shaped matrices.
std::string entry_difference(const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j)))
        return "first differing entry at (" + std::to_string(i) + "," + std::to_string(j) +
               "): " + lhs(i, j).to_string() + " vs " + rhs(i, j).to_string();
  return "";
}

void require_letter_range(const BraidWord& w) {
  for (int letter : w.letters) {
    const int abs = letter < 0 ? -letter : letter;
    if (letter == 0 || abs > static_cast<int>(w.n) - 1)
      throw Error("generator index " + std::to_string(letter) + " out of range for " +
                  std::to_string(w.n) + " strands (valid: 1.." + std::to_string(w.n - 1) + ")");
  }
}

}  // namespace

BraidWord parse_braid_word(std::size_t n, const std::string& text) {
  if (n < 2) throw ParseError("strand count must be at least 2, got " + std::to_string(n));
  BraidWord w;
  w.n = n;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed braid letter '" + token + "'");
    }
    if (used != token.size()) throw ParseError("malformed braid letter '" + token + "'");
    const int abs = value < 0 ? -value : value;
    if (value == 0 || abs > static_cast<int>(n) - 1)
      throw ParseError("generator index " + std::to_string(value) + " out of range for " +
                       std::to_string(n) + " strands (valid: 1.." + std::to_string(n - 1) + ")");
    w.letters.push_back(value);
  }
  return w;
}

BraidRep build_braid_generators(const HybeCandidate& c, std::size_t n, std::size_t cap) {
  if (n < 2)
    throw DimensionError("strand count must be at least 2, got " + std::to_string(n));

  // Overflow-safe power with the cap applied while multiplying.
  std::size_t total = 1;
  for (std::size_t t = 0; t < n; ++t) {
    if (c.dim != 0 && total > cap / c.dim + 1) total = cap + 1;
    else total *= c.dim;
    if (total > cap)
      throw Error("dimension cap exceeded: " + std::to_string(c.dim) + "^" + std::to_string(n) +
                  " > " + std::to_string(cap));
  }

  const Report verdict = check_hybe(c);
  if (!verdict.pass())
    throw ValidationError(
        "cannot build braid generators: the candidate fails the twisted braid identity", verdict);

  BraidRep rep;
  rep.n = n;
  rep.m = c.dim;

  Matrix alpha_inv, b_inv;
  bool invertible = true;
  try {
    HybeCandidate inverted = invert_solution(c);
    alpha_inv = std::move(inverted.alpha);
    b_inv = std::move(inverted.B);
  } catch (const SingularMatrixError& e) {
    invertible = false;
    rep.note = std::string("inverses omitted: ") + e.what();
  }

  for (std::size_t i = 1; i + 1 <= n; ++i) {
    // σ_i acts as B on tensor slots i, i+1 and as α elsewhere.
    const Matrix left = kron_power(c.alpha, i - 1);
    const Matrix right = kron_power(c.alpha, n - i - 1);
    rep.generators.push_back(kron(left, kron(c.B, right)));
    if (invertible) {
      const Matrix left_inv = kron_power(alpha_inv, i - 1);
      const Matrix right_inv = kron_power(alpha_inv, n - i - 1);
      rep.inverses.push_back(kron(left_inv, kron(b_inv, right_inv)));
    }
  }
  return rep;
}

Report check_braid_relations(const BraidRep& rep) {
  Report report;
  const std::size_t count = rep.generators.size();
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const Matrix& a = rep.generators[i];
    const Matrix& b = rep.generators[i + 1];
    const Matrix lhs = a * b * a;
    const Matrix rhs = b * a * b;
    const std::string name = "adjacent-braid-" + std::to_string(i + 1);
    if (lhs == rhs)
      report.ok(name);
    else
      report.fail(name, entry_difference(lhs, rhs));
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 2; j < count; ++j) {
      const Matrix lhs = rep.generators[i] * rep.generators[j];
      const Matrix rhs = rep.generators[j] * rep.generators[i];
      const std::string name =
          "far-commutation-" + std::to_string(i + 1) + "-" + std::to_string(j + 1);
      if (lhs == rhs)
        report.ok(name);
      else
        report.fail(name, entry_difference(lhs, rhs));
    }
  }
  if (!rep.inverses.empty()) {
    const Matrix id = Matrix::identity(rep.generators.empty() ? 1 : rep.generators[0].rows());
    for (std::size_t i = 0; i < count && i < rep.inverses.size(); ++i) {
      const Matrix product = rep.generators[i] * rep.inverses[i];
      const std::string name = "generator-inverse-" + std::to_string(i + 1);
      if (product == id)
        report.ok(name);
      else
        report.fail(name, entry_difference(product, id));
    }
  }
  return report;
}

Matrix evaluate_braid_word(const BraidRep& rep, const BraidWord& w) {
  if (w.n != rep.n)
    throw DimensionError("word is on " + std::to_string(w.n) +
                         " strands but the representation has " + std::to_string(rep.n));
  require_letter_range(w);
  bool needs_inverses = false;
  for (int letter : w.letters)
    if (letter < 0) needs_inverses = true;
  if (needs_inverses && rep.inverses.empty())
    throw Error("the word contains inverse letters but the representation has no inverses" +
                (rep.note.empty() ? std::string() : " (" + rep.note + ")"));

  const std::size_t dim = rep.generators.empty() ? 1 : rep.generators[0].rows();
  Matrix result = Matrix::identity(dim);
  for (int letter : w.letters) {
    const std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    result = result * (letter > 0 ? rep.generators[idx] : rep.inverses[idx]);
  }
  return result;
}

BraidRep specialize_rep(const BraidRep& rep, const Rational& c) {
  if (c == 0) throw Error("cannot specialize the parameter at 0");
  BraidRep out;
  out.n = rep.n;
  out.m = rep.m;
  out.note = rep.note;
  for (const Matrix& g : rep.generators) out.generators.push_back(specialize(g, c));
  for (const Matrix& g : rep.inverses) out.inverses.push_back(specialize(g, c));
  return out;
}

}  // namespace hombraid
