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

#include <doctest.h>

#include <cstdio>
#include <string>

#include "hombraid/fixtures.hpp"
#include "hombraid/homalg.hpp"
#include "hombraid/json_io.hpp"

namespace hombraid {
namespace {

/// Emits, reparses with `parse`, re-emits, and demands byte-identical text.
template <typename T, typename Parse>
T roundtrip(const T& value, Parse parse) {
  const std::string text = json_text(to_json(value));
  const T back = parse(parse_json_text(text));
  CHECK(json_text(to_json(back)) == text);
  return back;
}

TEST_CASE("matrices round-trip byte-for-byte") {
  const Matrix alpha = sl2_lambda().alpha;
  const Matrix back = roundtrip(alpha, matrix_from_json);
  CHECK(back == alpha);

  const Json j = to_json(alpha);
  CHECK(j["rows"] == 3);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"][1][1] == "l");
  CHECK(j["entries"][2][2] == "1/l");
  CHECK(j["entries"][0][1] == "0");
}

TEST_CASE("vectors and tensors round-trip") {
  const Bialgebra h = fixtures::z2_bialgebra();
  CHECK(vector_from_json(to_json(h.counit)) == h.counit);
  CHECK(tensor_from_json(to_json(h.mu)) == h.mu);

  // The outermost JSON index is the first tensor slot.
  const Json j = to_json(sl2_lambda().bracket);
  CHECK(j[1][0][1] == "2*l");   // coefficient of e in [h,e]
  CHECK(j[0][1][2] == "1");     // coefficient of h in [e,f]
}

TEST_CASE("hom-lie files round-trip and carry the right field tag") {
  const HomLieAlgebra lie = sl2_lambda();
  const HomLieAlgebra back = roundtrip(lie, hom_lie_from_json);
  CHECK(back.bracket == lie.bracket);
  CHECK(back.alpha == lie.alpha);
  CHECK(back.basis_labels == std::vector<std::string>{"h", "e", "f"});

  CHECK(to_json(sl2_lambda())["field"] == "Q(l)");
  CHECK(to_json(sl2())["field"] == "Q");
  CHECK(to_json(fixtures::abelian_hom_lie())["field"] == "Q");
}

TEST_CASE("hom-assoc files round-trip") {
  const HomAssociativeAlgebra twisted = fixtures::upper_triangular_twisted();
  const HomAssociativeAlgebra back = roundtrip(twisted, hom_assoc_from_json);
  CHECK(back.mu == twisted.mu);
  CHECK(back.alpha == twisted.alpha);
  CHECK(to_json(twisted)["field"] == "Q(l)");
  CHECK(to_json(fixtures::dual_numbers())["field"] == "Q");
}

TEST_CASE("a field-Q file may not contain the parameter") {
  Json j = to_json(sl2_lambda());
  j["field"] = "Q";
  CHECK_THROWS_WITH_AS(hom_lie_from_json(j), doctest::Contains("parameter l"), ParseError);
  j["field"] = "R";
  CHECK_THROWS_WITH_AS(hom_lie_from_json(j), doctest::Contains("\"field\""), ParseError);
}

TEST_CASE("kind mismatches are rejected") {
  const Json lie = to_json(sl2_lambda());
  CHECK_THROWS_WITH_AS(hom_assoc_from_json(lie), doctest::Contains("expected kind"),
                       ParseError);
  CHECK_THROWS_WITH_AS(candidate_from_json(lie), doctest::Contains("hybe-candidate"),
                       ParseError);
}

TEST_CASE("missing keys and malformed scalars are rejected") {
  Json j = to_json(sl2_lambda());
  j.erase("bracket");
  CHECK_THROWS_WITH_AS(hom_lie_from_json(j), doctest::Contains("\"bracket\""), ParseError);

  Json m = to_json(Matrix::identity(2));
  m["entries"][0][0] = 1;  // numbers are not accepted, only strings
  CHECK_THROWS_WITH_AS(matrix_from_json(m), doctest::Contains("strings"), ParseError);
  m["entries"][0][0] = "1//2";
  CHECK_THROWS_WITH_AS(matrix_from_json(m), doctest::Contains("entry (0,0)"), ParseError);
}

TEST_CASE("shape violations are rejected") {
  Json m = to_json(Matrix::identity(2));
  m["entries"][0].push_back("0");
  CHECK_THROWS_WITH_AS(matrix_from_json(m), doctest::Contains("row 0"), ParseError);

  Json lie = to_json(sl2_lambda());
  lie["dim"] = 2;
  CHECK_THROWS_WITH_AS(hom_lie_from_json(lie), doctest::Contains("2^3"), ParseError);

  Json t = to_json(sl2_lambda().bracket);
  t[1].erase(0);
  CHECK_THROWS_WITH_AS(tensor_from_json(t), doctest::Contains("ragged"), ParseError);
}

TEST_CASE("bialgebra files carry optional structures only when present") {
  BialgebraFile plain;
  plain.bialgebra = fixtures::z2_bialgebra();
  const Json bare = to_json(plain);
  CHECK(!bare.contains("qt_R"));
  CHECK(!bare.contains("dual_R"));
  const BialgebraFile back = roundtrip(plain, bialgebra_from_json);
  CHECK(!back.qt.has_value());
  CHECK(!back.dual.has_value());

  BialgebraFile full = plain;
  full.qt = fixtures::z2_qt();
  full.dual = fixtures::z2_dual_qt();
  const BialgebraFile both = roundtrip(full, bialgebra_from_json);
  REQUIRE(both.qt.has_value());
  REQUIRE(both.dual.has_value());
  CHECK(both.qt->R == full.qt->R);
  CHECK(both.dual->R == full.dual->R);
  CHECK(to_json(full)["qt_R"][3] == "-1/2");
}

TEST_CASE("qt_R and dual_R must match the bialgebra dimension") {
  BialgebraFile file;
  file.bialgebra = fixtures::z2_bialgebra();
  file.qt = fixtures::z2_qt();
  Json j = to_json(file);
  j["qt_R"].push_back("0");
  CHECK_THROWS_WITH_AS(bialgebra_from_json(j), doctest::Contains("dim^2"), ParseError);

  file.qt.reset();
  file.dual = fixtures::z2_dual_qt();
  Json k = to_json(file);
  k["dual_R"]["rows"] = 3;
  CHECK_THROWS_WITH_AS(bialgebra_from_json(k), doctest::Contains("dual_R"), ParseError);
}

TEST_CASE("module and comodule files embed their bialgebra") {
  ModuleFile mod;
  mod.bialgebra = fixtures::z2_bialgebra();
  mod.qt = fixtures::z2_qt();
  mod.module = fixtures::z2_sign_module();
  mod.alpha = Matrix::identity(mod.module.dim);
  const ModuleFile mback = roundtrip(mod, module_from_json);
  CHECK(mback.module.action == mod.module.action);
  CHECK(mback.qt.has_value());
  CHECK(to_json(mod)["bialgebra"]["kind"] == "bialgebra");

  ComoduleFile com;
  com.bialgebra = fixtures::z2_bialgebra();
  com.dual = fixtures::z2_dual_qt();
  com.comodule = fixtures::z2_regular_comodule();
  com.alpha = Matrix::identity(com.comodule.dim);
  const ComoduleFile cback = roundtrip(com, comodule_from_json);
  CHECK(cback.comodule.rho == com.comodule.rho);
  CHECK(cback.dual.has_value());

  Json j = to_json(mod);
  j.erase("bialgebra");
  CHECK_THROWS_WITH_AS(module_from_json(j), doctest::Contains("\"bialgebra\""), ParseError);

  Json k = to_json(com);
  k["dim"] = 3;
  CHECK_THROWS_WITH_AS(comodule_from_json(k), doctest::Contains("rho"), ParseError);
}

TEST_CASE("action shape is validated against both dimensions") {
  ModuleFile mod;
  mod.bialgebra = fixtures::z2_bialgebra();
  mod.module = fixtures::z2_sign_module();
  mod.alpha = Matrix::identity(mod.module.dim);
  Json j = to_json(mod);
  j["dim"] = 3;  // the sign module is two-dimensional
  CHECK_THROWS_WITH_AS(module_from_json(j), doctest::Contains("action"), ParseError);
}

TEST_CASE("carrier files round-trip") {
  HomModule carrier;
  carrier.dim = 2;
  carrier.alpha = Matrix::identity(2);
  carrier.alpha(0, 1) = Scalar::lambda();
  carrier.basis_labels = {"u", "v"};
  const HomModule back = roundtrip(carrier, hom_module_from_json);
  CHECK(back.alpha == carrier.alpha);
  CHECK(back.basis_labels == carrier.basis_labels);
}

TEST_CASE("candidate files round-trip") {
  const HybeCandidate cand = build_B_alpha(sl2_lambda());
  const HybeCandidate back = roundtrip(cand, candidate_from_json);
  CHECK(back.B == cand.B);
  CHECK(back.alpha == cand.alpha);

  Json j = to_json(cand);
  j["dim"] = 3;  // B stays 16x16 but must now be 9x9
  CHECK_THROWS_WITH_AS(candidate_from_json(j), doctest::Contains("9x9"), ParseError);
}

TEST_CASE("reports serialize witnesses only on failure") {
  Report report;
  report.ok("first");
  report.fail("second", "something went wrong");
  const Json j = to_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["witness"] == "something went wrong");

  Report clean;
  clean.ok("only");
  CHECK(to_json(clean)["pass"] == true);
}

TEST_CASE("files can be written and read back") {
  const std::string path = "test_json_scratch.json";
  const Json out = to_json(sl2_lambda());
  write_json_file(path, out);
  const Json in = load_json_file(path);
  CHECK(in == out);
  CHECK(json_text(in) == json_text(out));
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(load_json_file("does_not_exist.json"),
                       doctest::Contains("cannot open"), ParseError);
  CHECK_THROWS_WITH_AS(parse_json_text("{not json"), doctest::Contains("invalid JSON"),
                       ParseError);
}

}  // namespace
}  // namespace hombraid
