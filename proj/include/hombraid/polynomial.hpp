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

#ifndef HOMBRAID_POLYNOMIAL_HPP
#define HOMBRAID_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hombraid/rational.hpp"

namespace hombraid {

/// Dense univariate polynomial over the rationals, in the formal parameter λ
/// (written "l" in text form).  Coefficients are stored in ascending degree
/// order with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  /// Constant polynomial.
  explicit Poly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  /// From ascending coefficients; trailing zeros are trimmed.
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  /// The monomial c·λ^k.
  static Poly monomial(const Rational& c, std::size_t k) {
    if (c == 0) return Poly{};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of λ^k (zero beyond the degree).
  const Rational& coeff(std::size_t k) const {
    static const Rational kZero(0);
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }
  const Rational& leading() const { return coeffs_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

  /// Euclidean division: a = q·b + r with deg r < deg b.  b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
      const Rational factor = r.leading() / b.leading();
      const Poly t = monomial(factor, shift);
      q = q + t;
      r = r - t * b;
    }
    return {std::move(q), std::move(r)};
  }

  /// Monic greatest common divisor; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) {
      const Rational inv = Rational(1) / a.leading();
      a = inv * a;
    }
    return a;
  }

  /// Horner evaluation at a rational point.
  Rational eval(const Rational& c) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * c + coeffs_[i];
    return acc;
  }

  /// Number of nonzero terms (used by the text emitter to decide parentheses).
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
      if (c != 0) ++n;
    return n;
  }

  /// Canonical compact text: descending terms joined without spaces, unit
  /// coefficients elided, e.g. "l^2-1", "2*l", "1/2*l", "-l+3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      std::string term;
      if (i == 0) {
        term = c.get_str();
      } else {
        if (c == 1) {
          /* bare power */
        } else if (c == -1) {
          term = "-";
        } else {
          term = c.get_str() + "*";
        }
        term += "l";
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace hombraid

#endif  // HOMBRAID_POLYNOMIAL_HPP
