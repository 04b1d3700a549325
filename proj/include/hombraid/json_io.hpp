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

#ifndef HOMBRAID_JSON_IO_HPP
#define HOMBRAID_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hombraid/bialgebra.hpp"
#include "hombraid/homalg.hpp"
#include "hombraid/hybe.hpp"

namespace hombraid {

/// All emitted documents preserve insertion order so that re-emission after a
/// parse reproduces the input byte for byte.
using Json = nlohmann::ordered_json;

/// Parses a JSON document; malformed text raises ParseError.
Json parse_json_text(const std::string& text);

/// Reads and parses a JSON file; missing or unreadable files raise ParseError.
Json load_json_file(const std::string& path);

/// Writes `dump(2)` plus a trailing newline; I/O failure raises Error.
void write_json_file(const std::string& path, const Json& j);

/// Canonical rendering used for stdout as well as files.
std::string json_text(const Json& j);

// Matrices: {"rows": r, "cols": c, "entries": [[scalar-string, ...], ...]}.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Structure-constant tensors are nested arrays with the first index outermost:
// bracket/mu as [k][i][j] (output first), comultiplication as [i][j][k]
// (input first), module action as [k][h][u].
Json to_json(const Tensor3& t);
Tensor3 tensor_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// Algebras: {"kind": "hom-lie"|"hom-assoc", "dim", "field": "Q"|"Q(l)",
// "basis": [names], "bracket"|"mu": tensor, "alpha": matrix}.  A file
// declaring field "Q" may not contain any non-constant entry.
Json to_json(const HomLieAlgebra& lie);
Json to_json(const HomAssociativeAlgebra& alg);
HomLieAlgebra hom_lie_from_json(const Json& j);
HomAssociativeAlgebra hom_assoc_from_json(const Json& j);

// Bialgebra files: {"kind": "bialgebra", "dim", "basis"?, "mu", "unit",
// "delta", "counit", "qt_R"?: vector(d²), "dual_R"?: matrix}.
struct BialgebraFile {
  Bialgebra bialgebra;
  std::optional<QTStructure> qt;
  std::optional<DualQTStructure> dual;
};
Json to_json(const BialgebraFile& file);
BialgebraFile bialgebra_from_json(const Json& j);

// Module files: {"kind": "module", "dim", "action": tensor, "alpha": matrix,
// "bialgebra": {...}}; the embedded bialgebra is required because no check on
// a module is expressible without it.  Comodule files carry "rho" instead.
struct ModuleFile {
  Bialgebra bialgebra;
  std::optional<QTStructure> qt;
  HModule module;
  Matrix alpha;
};
struct ComoduleFile {
  Bialgebra bialgebra;
  std::optional<DualQTStructure> dual;
  HComodule comodule;
  Matrix alpha;
};
Json to_json(const ModuleFile& file);
Json to_json(const ComoduleFile& file);
ModuleFile module_from_json(const Json& j);
ComoduleFile comodule_from_json(const Json& j);

// Carrier-with-map files: {"kind": "hom-module", "dim", "basis"?, "alpha"}.
Json to_json(const HomModule& m);
HomModule hom_module_from_json(const Json& j);

// Candidates: {"kind": "hybe-candidate", "dim", "B": matrix, "alpha": matrix}.
Json to_json(const HybeCandidate& c);
HybeCandidate candidate_from_json(const Json& j);

// Reports: {"pass": bool, "checks": [{"name", "pass", "witness"?}]}.
Json to_json(const Report& report);

}  // namespace hombraid

#endif  // HOMBRAID_JSON_IO_HPP
