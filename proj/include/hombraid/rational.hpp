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

#ifndef HOMBRAID_RATIONAL_HPP
#define HOMBRAID_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hombraid {

/// Exact rational number.  GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Canonical text form: "p" when the denominator is one, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hombraid

#endif  // HOMBRAID_RATIONAL_HPP
