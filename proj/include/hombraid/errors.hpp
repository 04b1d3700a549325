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

#ifndef HOMBRAID_ERRORS_HPP
#define HOMBRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "hombraid/report.hpp"

namespace hombraid {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ill-formed textual input: scalar literals, JSON schemas, unknown kinds.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Operands whose shapes do not conform.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Division by the zero element of the field.
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

/// Inversion of a rank-deficient matrix; carries the rank found.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& msg, std::size_t rank, std::size_t size)
      : Error(msg), rank_(rank), size_(size) {}
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t rank_;
  std::size_t size_;
};

/// A constructor precondition failed; carries the report naming the axiom.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& msg, Report report)
      : Error(msg + "\n" + report.summary()), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace hombraid

#endif  // HOMBRAID_ERRORS_HPP
