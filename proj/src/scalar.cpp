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

#include "hombraid/scalar.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace hombraid {

Scalar Scalar::from_fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZeroError("division by the zero field element");
  Scalar out;
  if (num.is_zero()) return out;  // canonical zero: the rational 0
  const Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  if (den.leading() != 1) {
    const Rational inv = Rational(1) / den.leading();
    num = inv * num;
    den = inv * den;
  }
  if (num.is_constant() && den.is_constant()) {
    out.rat_ = num.coeff(0);  // den is now the monic constant 1
    return out;
  }
  out.constant_ = false;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

Rational Scalar::eval_at(const Rational& c) const {
  if (constant_) return rat_;
  const Rational d = den_.eval(c);
  if (d == 0) throw PoleError("pole of rational function at l = " + c.get_str());
  return num_.eval(c) / d;
}

std::string Scalar::to_string() const {
  if (constant_) return rat_.get_str();
  const auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return p.term_count() >= 2 ? "(" + s + ")" : s;
  };
  if (den_ == Poly(Rational(1))) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

enum class Tok { kInt, kLambda, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;  ///< digits for kInt
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kInt, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    switch (ch) {
      case 'l': out.push_back({Tok::kLambda, "l"}); break;
      case '+': out.push_back({Tok::kPlus, "+"}); break;
      case '-': out.push_back({Tok::kMinus, "-"}); break;
      case '*': out.push_back({Tok::kStar, "*"}); break;
      case '/': out.push_back({Tok::kSlash, "/"}); break;
      case '^': out.push_back({Tok::kCaret, "^"}); break;
      case '(': out.push_back({Tok::kLParen, "("}); break;
      case ')': out.push_back({Tok::kRParen, ")"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "' in scalar literal");
    }
    ++i;
  }
  out.push_back({Tok::kEnd, ""});
  return out;
}

}  // namespace

/// Recursive-descent parser over the token stream.  Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ('-' | '+') factor | atom ('^' INT)?
///   atom   := INT | 'l' | '(' expr ')'
struct ScalarParser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos;
    return true;
  }

  Scalar expr() {
    Scalar value = term();
    while (true) {
      if (accept(Tok::kPlus)) {
        value = value + term();
      } else if (accept(Tok::kMinus)) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      if (accept(Tok::kStar)) {
        value = value * factor();
      } else if (accept(Tok::kSlash)) {
        const Scalar rhs = factor();
        if (rhs.is_zero()) throw ParseError("division by zero in scalar literal");
        value = value / rhs;
      } else {
        return value;
      }
    }
  }

  Scalar factor() {
    if (accept(Tok::kMinus)) return -factor();
    if (accept(Tok::kPlus)) return factor();
    Scalar value = atom();
    if (accept(Tok::kCaret)) {
      if (peek().kind != Tok::kInt)
        throw ParseError("exponent must be a nonnegative integer literal");
      const unsigned long k = std::stoul(take().text);
      value = value.pow(static_cast<unsigned>(k));
    }
    return value;
  }

  Scalar atom() {
    if (peek().kind == Tok::kInt) {
      return Scalar(Rational(mpz_class(take().text, 10)));
    }
    if (accept(Tok::kLambda)) return Scalar::lambda();
    if (accept(Tok::kLParen)) {
      Scalar value = expr();
      if (!accept(Tok::kRParen)) throw ParseError("expected ')' in scalar literal");
      return value;
    }
    throw ParseError("expected a number, 'l', or '(' in scalar literal");
  }
};

Scalar Scalar::parse(std::string_view text) {
  const std::vector<Token> toks = lex(text);
  if (toks.size() == 1) throw ParseError("empty scalar literal");
  ScalarParser parser{toks};
  Scalar value = parser.expr();
  if (parser.peek().kind != Tok::kEnd)
    throw ParseError("trailing input after scalar literal: '" + parser.peek().text + "'");
  return value;
}

}  // namespace hombraid
