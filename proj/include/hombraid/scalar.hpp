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

#ifndef HOMBRAID_SCALAR_HPP
#define HOMBRAID_SCALAR_HPP

#include <string>
#include <string_view>
#include <utility>

#include "hombraid/errors.hpp"
#include "hombraid/polynomial.hpp"
#include "hombraid/rational.hpp"

namespace hombraid {

/// An exact field element: either a rational number or a rational function in
/// the formal parameter λ with rational coefficients.
///
/// Values are kept in canonical form at all times: the fraction num/den is
/// gcd-reduced with a monic denominator, zero is 0/1, and an element whose
/// reduced form is constant is stored as a plain rational.  Equality is
/// therefore a structural comparison, and a constant rational function
/// compares equal to the corresponding rational.
class Scalar {
 public:
  /// Zero.
  Scalar() : rat_(0) {}
  Scalar(int n) : rat_(n) {}  // NOLINT(google-explicit-constructor): field literals
  Scalar(Rational q) : rat_(std::move(q)) {}  // NOLINT(google-explicit-constructor)

  /// The formal parameter λ.
  static Scalar lambda() { return from_fraction(Poly::monomial(Rational(1), 1), Poly(Rational(1))); }

  /// Builds num/den and canonicalizes.  Throws DivisionByZeroError when den
  /// is the zero polynomial.
  static Scalar from_fraction(Poly num, Poly den);

  /// True when the value lies in ℚ (i.e., does not involve λ).
  bool is_constant() const { return constant_; }
  bool is_zero() const { return constant_ && rat_ == 0; }
  bool is_one() const { return constant_ && rat_ == 1; }

  /// The rational value; only meaningful when is_constant().
  const Rational& rational() const { return rat_; }
  /// Numerator polynomial (the constant itself when is_constant()).
  Poly numerator() const { return constant_ ? Poly(rat_) : num_; }
  /// Denominator polynomial (1 when is_constant()).
  Poly denominator() const { return constant_ ? Poly(Rational(1)) : den_; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.constant_ != b.constant_) return false;
    if (a.constant_) return a.rat_ == b.rat_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.constant_ && b.constant_) return Scalar(a.rat_ + b.rat_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_fraction(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                         a.denominator() * b.denominator());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  Scalar operator-() const {
    if (constant_) return Scalar(-rat_);
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.constant_ && b.constant_) return Scalar(a.rat_ * b.rat_);
    if (a.is_zero() || b.is_zero()) return Scalar();
    return from_fraction(a.numerator() * b.numerator(), a.denominator() * b.denominator());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Multiplicative inverse.  Throws DivisionByZeroError on zero.
  Scalar inverse() const {
    if (is_zero()) throw DivisionByZeroError("division by the zero field element");
    if (constant_) return Scalar(Rational(1) / rat_);
    return from_fraction(den_, num_);
  }

  /// Nonnegative integer power; pow(0) = 1.
  Scalar pow(unsigned k) const {
    Scalar acc(1);
    Scalar base = *this;
    for (unsigned e = k; e > 0; e >>= 1) {
      if (e & 1u) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  }

  /// Exact substitution λ := c.  Throws PoleError when c is a root of the
  /// denominator (which, by canonicality, is a genuine pole).
  Rational eval_at(const Rational& c) const;

  /// Canonical text form, re-parseable bit-exactly by parse().
  std::string to_string() const;

  /// Parses the scalar text encoding: integers, "p/q" fractions, the token
  /// "l" for λ, and +, -, *, /, ^ with parentheses.  Throws ParseError on
  /// malformed input, including division by a subexpression equal to zero.
  static Scalar parse(std::string_view text);

 private:
  bool constant_ = true;
  Rational rat_;  ///< value when constant_
  Poly num_, den_;  ///< reduced fraction when !constant_; den_ monic, non-constant pair

  friend struct ScalarParser;
};

}  // namespace hombraid

#endif  // HOMBRAID_SCALAR_HPP
