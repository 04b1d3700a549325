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

#include "hombraid/json_io.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hombraid {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(what) + " is missing the required key \"" + key + "\"");
  return *it;
}

std::size_t require_count(const Json& j, const char* key, const char* what) {
  const Json& value = require_key(j, key, what);
  if (!value.is_number_integer() || value.get<long long>() <= 0)
    throw ParseError(std::string(what) + ": \"" + key + "\" must be a positive integer");
  return value.get<std::size_t>();
}

std::string require_string(const Json& j, const char* key, const char* what) {
  const Json& value = require_key(j, key, what);
  if (!value.is_string())
    throw ParseError(std::string(what) + ": \"" + key + "\" must be a string");
  return value.get<std::string>();
}

void require_kind(const Json& j, const char* kind, const char* what) {
  const std::string found = require_string(j, "kind", what);
  if (found != kind)
    throw ParseError(std::string(what) + ": expected kind \"" + kind + "\", found \"" + found +
                     "\"");
}

Scalar scalar_from(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": scalar entries must be strings");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::string> labels_from(const Json& j, const char* what) {
  const auto it = j.find("basis");
  if (it == j.end()) return {};
  if (!it->is_array()) throw ParseError(std::string(what) + ": \"basis\" must be an array");
  std::vector<std::string> labels;
  for (const Json& entry : *it) {
    if (!entry.is_string())
      throw ParseError(std::string(what) + ": basis labels must be strings");
    labels.push_back(entry.get<std::string>());
  }
  return labels;
}

bool all_constant(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

bool all_constant(const Tensor3& t) {
  for (std::size_t a = 0; a < t.out_dim(); ++a)
    for (std::size_t b = 0; b < t.in1_dim(); ++b)
      for (std::size_t c = 0; c < t.in2_dim(); ++c)
        if (!t(a, b, c).is_constant()) return false;
  return true;
}

void enforce_field(const std::string& field, bool constant, const char* what) {
  if (field != "Q" && field != "Q(l)")
    throw ParseError(std::string(what) + ": \"field\" must be \"Q\" or \"Q(l)\", found \"" +
                     field + "\"");
  if (field == "Q" && !constant)
    throw ParseError(std::string(what) +
                     ": field is \"Q\" but an entry involves the parameter l");
}

Matrix matrix_member(const Json& j, const char* key, const char* what) {
  try {
    return matrix_from_json(require_key(j, key, what));
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ", key \"" + key + "\": " + e.what());
  }
}

Tensor3 tensor_member(const Json& j, const char* key, const char* what) {
  try {
    return tensor_from_json(require_key(j, key, what));
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ", key \"" + key + "\": " + e.what());
  }
}

Vector vector_member(const Json& j, const char* key, const char* what) {
  try {
    return vector_from_json(require_key(j, key, what));
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ", key \"" + key + "\": " + e.what());
  }
}

void require_cube(const Tensor3& t, std::size_t dim, const char* key, const char* what) {
  if (t.out_dim() != dim || t.in1_dim() != dim || t.in2_dim() != dim)
    throw ParseError(std::string(what) + ": \"" + key + "\" must be a " + std::to_string(dim) +
                     "^3 tensor");
}

void require_square(const Matrix& m, std::size_t dim, const char* key, const char* what) {
  if (!m.is_square() || m.rows() != dim)
    throw ParseError(std::string(what) + ": \"" + key + "\" must be a " + std::to_string(dim) +
                     "x" + std::to_string(dim) + " matrix, got " + m.shape());
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << json_text(j);
  if (!out) throw Error("write failed: " + path);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = require_count(j, "rows", "matrix");
  const std::size_t cols = require_count(j, "cols", "matrix");
  const Json& entries = require_key(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("matrix: \"entries\" must be an array of " + std::to_string(rows) +
                     " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix: row " + std::to_string(i) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = scalar_from(row[c], "matrix entry (" + std::to_string(i) + "," +
                                        std::to_string(c) + ")");
  }
  return m;
}

Json to_json(const Tensor3& t) {
  Json outer = Json::array();
  for (std::size_t a = 0; a < t.out_dim(); ++a) {
    Json middle = Json::array();
    for (std::size_t b = 0; b < t.in1_dim(); ++b) {
      Json inner = Json::array();
      for (std::size_t c = 0; c < t.in2_dim(); ++c) inner.push_back(t(a, b, c).to_string());
      middle.push_back(std::move(inner));
    }
    outer.push_back(std::move(middle));
  }
  return outer;
}

Tensor3 tensor_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("tensor must be a non-empty array");
  const std::size_t a_dim = j.size();
  const std::size_t b_dim = j[0].is_array() ? j[0].size() : 0;
  if (b_dim == 0) throw ParseError("tensor must be a triply nested array");
  const std::size_t c_dim = j[0][0].is_array() ? j[0][0].size() : 0;
  if (c_dim == 0) throw ParseError("tensor must be a triply nested array");
  Tensor3 t(a_dim, b_dim, c_dim);
  for (std::size_t a = 0; a < a_dim; ++a) {
    if (!j[a].is_array() || j[a].size() != b_dim)
      throw ParseError("tensor: ragged array at index " + std::to_string(a));
    for (std::size_t b = 0; b < b_dim; ++b) {
      const Json& inner = j[a][b];
      if (!inner.is_array() || inner.size() != c_dim)
        throw ParseError("tensor: ragged array at index " + std::to_string(a) + "," +
                         std::to_string(b));
      for (std::size_t c = 0; c < c_dim; ++c)
        t(a, b, c) = scalar_from(inner[c], "tensor entry [" + std::to_string(a) + "][" +
                                               std::to_string(b) + "][" + std::to_string(c) +
                                               "]");
    }
  }
  return t;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& entry : v) out.push_back(entry.to_string());
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(scalar_from(j[i], "vector entry " + std::to_string(i)));
  return v;
}

namespace {

Json algebra_to_json(const char* kind, std::size_t dim, const std::vector<std::string>& labels,
                     const char* product_key, const Tensor3& product, const Matrix& alpha) {
  Json j;
  j["kind"] = kind;
  j["dim"] = dim;
  j["field"] = (all_constant(product) && all_constant(alpha)) ? "Q" : "Q(l)";
  j["basis"] = labels;
  j[product_key] = to_json(product);
  j["alpha"] = to_json(alpha);
  return j;
}

}  // namespace

Json to_json(const HomLieAlgebra& lie) {
  return algebra_to_json("hom-lie", lie.dim, lie.basis_labels, "bracket", lie.bracket,
                         lie.alpha);
}

Json to_json(const HomAssociativeAlgebra& alg) {
  return algebra_to_json("hom-assoc", alg.dim, alg.basis_labels, "mu", alg.mu, alg.alpha);
}

HomLieAlgebra hom_lie_from_json(const Json& j) {
  const char* what = "hom-lie algebra";
  require_kind(j, "hom-lie", what);
  HomLieAlgebra lie;
  lie.dim = require_count(j, "dim", what);
  lie.basis_labels = labels_from(j, what);
  lie.bracket = tensor_member(j, "bracket", what);
  lie.alpha = matrix_member(j, "alpha", what);
  require_cube(lie.bracket, lie.dim, "bracket", what);
  require_square(lie.alpha, lie.dim, "alpha", what);
  enforce_field(require_string(j, "field", what),
                all_constant(lie.bracket) && all_constant(lie.alpha), what);
  return lie;
}

HomAssociativeAlgebra hom_assoc_from_json(const Json& j) {
  const char* what = "hom-assoc algebra";
  require_kind(j, "hom-assoc", what);
  HomAssociativeAlgebra alg;
  alg.dim = require_count(j, "dim", what);
  alg.basis_labels = labels_from(j, what);
  alg.mu = tensor_member(j, "mu", what);
  alg.alpha = matrix_member(j, "alpha", what);
  require_cube(alg.mu, alg.dim, "mu", what);
  require_square(alg.alpha, alg.dim, "alpha", what);
  enforce_field(require_string(j, "field", what),
                all_constant(alg.mu) && all_constant(alg.alpha), what);
  return alg;
}

namespace {

Json bialgebra_body(const Bialgebra& h) {
  Json j;
  j["kind"] = "bialgebra";
  j["dim"] = h.dim;
  j["basis"] = h.basis_labels;
  j["mu"] = to_json(h.mu);
  j["unit"] = to_json(h.unit);
  j["delta"] = to_json(h.delta);
  j["counit"] = to_json(h.counit);
  return j;
}

Bialgebra bialgebra_core_from(const Json& j, const char* what) {
  Bialgebra h;
  h.dim = require_count(j, "dim", what);
  h.basis_labels = labels_from(j, what);
  h.mu = tensor_member(j, "mu", what);
  h.unit = vector_member(j, "unit", what);
  h.delta = tensor_member(j, "delta", what);
  h.counit = vector_member(j, "counit", what);
  require_cube(h.mu, h.dim, "mu", what);
  require_cube(h.delta, h.dim, "delta", what);
  if (h.unit.size() != h.dim)
    throw ParseError(std::string(what) + ": \"unit\" must have length " + std::to_string(h.dim));
  if (h.counit.size() != h.dim)
    throw ParseError(std::string(what) + ": \"counit\" must have length " +
                     std::to_string(h.dim));
  return h;
}

}  // namespace

Json to_json(const BialgebraFile& file) {
  Json j = bialgebra_body(file.bialgebra);
  if (file.qt.has_value()) j["qt_R"] = to_json(file.qt->R);
  if (file.dual.has_value()) j["dual_R"] = to_json(file.dual->R);
  return j;
}

BialgebraFile bialgebra_from_json(const Json& j) {
  const char* what = "bialgebra";
  require_kind(j, "bialgebra", what);
  BialgebraFile file;
  file.bialgebra = bialgebra_core_from(j, what);
  const std::size_t d = file.bialgebra.dim;
  if (j.contains("qt_R")) {
    QTStructure qt;
    qt.R = vector_member(j, "qt_R", what);
    if (qt.R.size() != d * d)
      throw ParseError(std::string(what) + ": \"qt_R\" must have length dim^2 = " +
                       std::to_string(d * d));
    file.qt = std::move(qt);
  }
  if (j.contains("dual_R")) {
    DualQTStructure dual;
    dual.R = matrix_member(j, "dual_R", what);
    require_square(dual.R, d, "dual_R", what);
    file.dual = std::move(dual);
  }
  return file;
}

Json to_json(const ModuleFile& file) {
  Json j;
  j["kind"] = "module";
  j["dim"] = file.module.dim;
  j["action"] = to_json(file.module.action);
  j["alpha"] = to_json(file.alpha);
  BialgebraFile host;
  host.bialgebra = file.bialgebra;
  host.qt = file.qt;
  j["bialgebra"] = to_json(host);
  return j;
}

Json to_json(const ComoduleFile& file) {
  Json j;
  j["kind"] = "comodule";
  j["dim"] = file.comodule.dim;
  j["rho"] = to_json(file.comodule.rho);
  j["alpha"] = to_json(file.alpha);
  BialgebraFile host;
  host.bialgebra = file.bialgebra;
  host.dual = file.dual;
  j["bialgebra"] = to_json(host);
  return j;
}

ModuleFile module_from_json(const Json& j) {
  const char* what = "module";
  require_kind(j, "module", what);
  ModuleFile file;
  const BialgebraFile host = bialgebra_from_json(require_key(j, "bialgebra", what));
  file.bialgebra = host.bialgebra;
  file.qt = host.qt;
  file.module.dim = require_count(j, "dim", what);
  file.module.action = tensor_member(j, "action", what);
  file.alpha = matrix_member(j, "alpha", what);
  const std::size_t m = file.module.dim;
  if (file.module.action.out_dim() != m || file.module.action.in1_dim() != file.bialgebra.dim ||
      file.module.action.in2_dim() != m)
    throw ParseError(std::string(what) + ": \"action\" must have shape (" + std::to_string(m) +
                     "; " + std::to_string(file.bialgebra.dim) + ", " + std::to_string(m) + ")");
  require_square(file.alpha, m, "alpha", what);
  return file;
}

ComoduleFile comodule_from_json(const Json& j) {
  const char* what = "comodule";
  require_kind(j, "comodule", what);
  ComoduleFile file;
  const BialgebraFile host = bialgebra_from_json(require_key(j, "bialgebra", what));
  file.bialgebra = host.bialgebra;
  file.dual = host.dual;
  file.comodule.dim = require_count(j, "dim", what);
  file.comodule.rho = matrix_member(j, "rho", what);
  file.alpha = matrix_member(j, "alpha", what);
  const std::size_t m = file.comodule.dim;
  if (file.comodule.rho.rows() != file.bialgebra.dim * m || file.comodule.rho.cols() != m)
    throw ParseError(std::string(what) + ": \"rho\" must be a " +
                     std::to_string(file.bialgebra.dim * m) + "x" + std::to_string(m) +
                     " matrix, got " + file.comodule.rho.shape());
  require_square(file.alpha, m, "alpha", what);
  return file;
}

Json to_json(const HomModule& m) {
  Json j;
  j["kind"] = "hom-module";
  j["dim"] = m.dim;
  j["basis"] = m.basis_labels;
  j["alpha"] = to_json(m.alpha);
  return j;
}

HomModule hom_module_from_json(const Json& j) {
  const char* what = "hom-module";
  require_kind(j, "hom-module", what);
  HomModule m;
  m.dim = require_count(j, "dim", what);
  m.basis_labels = labels_from(j, what);
  m.alpha = matrix_member(j, "alpha", what);
  require_square(m.alpha, m.dim, "alpha", what);
  return m;
}

Json to_json(const HybeCandidate& c) {
  Json j;
  j["kind"] = "hybe-candidate";
  j["dim"] = c.dim;
  j["B"] = to_json(c.B);
  j["alpha"] = to_json(c.alpha);
  return j;
}

HybeCandidate candidate_from_json(const Json& j) {
  const char* what = "hybe-candidate";
  require_kind(j, "hybe-candidate", what);
  HybeCandidate c;
  c.dim = require_count(j, "dim", what);
  c.B = matrix_member(j, "B", what);
  c.alpha = matrix_member(j, "alpha", what);
  require_square(c.B, c.dim * c.dim, "B", what);
  require_square(c.alpha, c.dim, "alpha", what);
  return c;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const CheckItem& item : report.items()) {
    Json entry;
    entry["name"] = item.name;
    entry["pass"] = item.pass;
    if (!item.pass) entry["witness"] = item.witness;
    checks.push_back(std::move(entry));
  }
  return Json{{"pass", report.pass()}, {"checks", std::move(checks)}};
}

}  // namespace hombraid
