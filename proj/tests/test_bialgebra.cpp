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

#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"
#include "hombraid/bialgebra.hpp"
#include "hombraid/fixtures.hpp"
#include "hombraid/hybe.hpp"
#include "support/generators.hpp"

namespace hombraid {
using namespace testsupport;
namespace {

const CheckItem* find_item(const Report& report, const std::string& name) {
  for (const auto& item : report.items())
    if (item.name == name) return &item;
  return nullptr;
}

bool item_passes(const Report& report, const std::string& name) {
  const CheckItem* item = find_item(report, name);
  REQUIRE(item != nullptr);
  return item->pass;
}

/// The four-dimensional bialgebra generated by a group-like g and a skew
/// primitive x with g² = 1, x² = 0, xg = −gx, Δ(x) = x⊗1 + g⊗x.  Neither
/// commutative nor cocommutative, so it exercises order-sensitive code paths.
Bialgebra anticommuting_pair() {
  Bialgebra h;
  h.dim = 4;
  h.basis_labels = {"1", "g", "x", "gx"};
  h.mu = Tensor3(4, 4, 4);
  for (std::size_t b = 0; b < 4; ++b) h.mu(b, 0, b) = Scalar(1);  // 1·b = b
  for (std::size_t a = 1; a < 4; ++a) h.mu(a, a, 0) = Scalar(1);  // a·1 = a
  h.mu(0, 1, 1) = Scalar(1);   // g·g = 1
  h.mu(3, 1, 2) = Scalar(1);   // g·x = gx
  h.mu(2, 1, 3) = Scalar(1);   // g·gx = x
  h.mu(3, 2, 1) = Scalar(-1);  // x·g = −gx
  h.mu(2, 3, 1) = Scalar(-1);  // gx·g = −x
  h.unit = Vector(4);
  h.unit[0] = Scalar(1);
  h.delta = Tensor3(4, 4, 4);
  h.delta(0, 0, 0) = Scalar(1);
  h.delta(1, 1, 1) = Scalar(1);
  h.delta(2, 2, 0) = Scalar(1);  // Δ(x) = x⊗1 + g⊗x
  h.delta(2, 1, 2) = Scalar(1);
  h.delta(3, 3, 1) = Scalar(1);  // Δ(gx) = gx⊗g + 1⊗gx
  h.delta(3, 0, 3) = Scalar(1);
  h.counit = Vector(4);
  h.counit[0] = Scalar(1);
  h.counit[1] = Scalar(1);
  return h;
}

TEST_CASE("the order-2 group bialgebra satisfies all six compatibility axioms") {
  const Report report = check_bialgebra(fixtures::z2_bialgebra());
  CHECK(report.pass());
  REQUIRE(report.items().size() == 6);
  CHECK(report.items()[0].name == "associativity");
  CHECK(report.items()[1].name == "unit-laws");
  CHECK(report.items()[2].name == "coassociativity");
  CHECK(report.items()[3].name == "counit-laws");
  CHECK(report.items()[4].name == "comultiplication-morphism");
  CHECK(report.items()[5].name == "counit-morphism");
}

TEST_CASE("the anticommuting-pair bialgebra passes despite being noncommutative") {
  CHECK(check_bialgebra(anticommuting_pair()).pass());
}

TEST_CASE("bialgebra defects are pinpointed to the violated axiom") {
  // Δ(g) = g⊗1 breaks only the counit laws.
  Bialgebra skewed = fixtures::z2_bialgebra();
  skewed.delta(1, 1, 1) = Scalar(0);
  skewed.delta(1, 1, 0) = Scalar(1);
  const Report counit_report = check_bialgebra(skewed);
  CHECK_FALSE(counit_report.pass());
  CHECK(item_passes(counit_report, "associativity"));
  CHECK(item_passes(counit_report, "coassociativity"));
  CHECK_FALSE(item_passes(counit_report, "counit-laws"));

  // g² = −1 is a perfectly associative algebra whose comultiplication is no
  // longer multiplicative: Δ(g²) = −1⊗1 but Δ(g)² = 1⊗1.
  Bialgebra sign = fixtures::z2_bialgebra();
  sign.mu(0, 1, 1) = Scalar(-1);
  const Report sign_report = check_bialgebra(sign);
  CHECK(item_passes(sign_report, "associativity"));
  CHECK(item_passes(sign_report, "unit-laws"));
  CHECK(item_passes(sign_report, "coassociativity"));
  CHECK(item_passes(sign_report, "counit-laws"));
  CHECK_FALSE(item_passes(sign_report, "comultiplication-morphism"));
  CHECK_FALSE(item_passes(sign_report, "counit-morphism"));

  // Δ(g) = g⊗g + 1⊗1 is not coassociative.
  Bialgebra lopsided = fixtures::z2_bialgebra();
  lopsided.delta(1, 0, 0) = Scalar(1);
  CHECK_FALSE(item_passes(check_bialgebra(lopsided), "coassociativity"));
}

TEST_CASE("tensor-power products have the correct unit and relations") {
  const Bialgebra h = anticommuting_pair();
  const Vector x = {Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
  const Vector g = {Scalar(0), Scalar(1), Scalar(0), Scalar(0)};

  // x·g = −gx while g·x = +gx.
  const Vector xg = tensor_algebra_mul(h, 1, x, g);
  const Vector gx = tensor_algebra_mul(h, 1, g, x);
  CHECK(xg[3] == Scalar(-1));
  CHECK(gx[3] == Scalar(1));
  CHECK(tensor_algebra_mul(h, 1, x, x) == Vector(4));
  CHECK(tensor_algebra_mul(h, 1, xg, gx) == Vector(4));

  Rng rng(31337);
  for (std::size_t p = 1; p <= 3; ++p) {
    const Vector unit = tensor_algebra_unit(h, p);
    Vector v(unit.size());
    for (auto& entry : v) entry = Scalar(random_rational(rng, 3));
    CHECK(tensor_algebra_mul(h, p, unit, v) == v);
    CHECK(tensor_algebra_mul(h, p, v, unit) == v);
  }
}

TEST_CASE("both distinguished elements of the group bialgebra are quasi-triangular") {
  const Bialgebra h = fixtures::z2_bialgebra();
  for (const QTStructure& qt : {fixtures::z2_qt_trivial(), fixtures::z2_qt()}) {
    const Report report = check_qt(h, qt);
    CHECK(report.pass());
    REQUIRE(report.items().size() == 4);
    CHECK(report.items()[0].name == "qt-invertibility");
    CHECK(report.items()[1].name == "qt-almost-cocommutativity");
    CHECK(report.items()[2].name == "qt-hexagon-1");
    CHECK(report.items()[3].name == "qt-hexagon-2");
  }
}

TEST_CASE("the nontrivial element is its own inverse and a supplied inverse is verified") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const QTStructure qt = fixtures::z2_qt();

  const auto inv = qt_inverse(h, qt.R);
  REQUIRE(inv.has_value());
  CHECK(*inv == qt.R);

  QTStructure with_inverse = qt;
  with_inverse.R_inv = qt.R;
  CHECK(check_qt(h, with_inverse).pass());

  // A wrong supplied inverse must be caught, not trusted.
  QTStructure wrong = qt;
  wrong.R_inv = fixtures::z2_qt_trivial().R;
  CHECK_FALSE(item_passes(check_qt(h, wrong), "qt-invertibility"));

  const auto trivial_inv = qt_inverse(h, fixtures::z2_qt_trivial().R);
  REQUIRE(trivial_inv.has_value());
  CHECK(*trivial_inv == fixtures::z2_qt_trivial().R);
}

TEST_CASE("the perturbed element fails invertibility and both hexagon identities") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const QTStructure bad = fixtures::z2_qt_perturbed();
  CHECK_FALSE(qt_inverse(h, bad.R).has_value());

  const Report report = check_qt(h, bad);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(item_passes(report, "qt-invertibility"));
  CHECK(item_passes(report, "qt-almost-cocommutativity"));
  CHECK_FALSE(item_passes(report, "qt-hexagon-1"));
  CHECK_FALSE(item_passes(report, "qt-hexagon-2"));
}

TEST_CASE("a non-cocommutative bialgebra rejects the trivial element") {
  const Bialgebra h = anticommuting_pair();
  QTStructure trivial;
  trivial.R = Vector(16);
  trivial.R[0] = Scalar(1);  // 1⊗1
  const Report report = check_qt(h, trivial);
  CHECK(item_passes(report, "qt-invertibility"));
  CHECK_FALSE(item_passes(report, "qt-almost-cocommutativity"));
}

TEST_CASE("the braid-equation check accepts the group-bialgebra elements") {
  const Bialgebra h = fixtures::z2_bialgebra();
  for (const QTStructure& qt : {fixtures::z2_qt_trivial(), fixtures::z2_qt()}) {
    const Report report = check_qybe(h, qt.R);
    CHECK(report.pass());
    REQUIRE(report.items().size() == 2);
    CHECK(report.items()[0].name == "qybe");
    CHECK(report.items()[1].name == "qybe-flipped");
  }
}

TEST_CASE("over a commutative algebra every element satisfies the braid equation") {
  // All triple products commute, so both sides of the equation coincide for
  // any element whatsoever — including the perturbed one, which fails the
  // quasi-triangular axioms but can never fail this particular identity.
  const Bialgebra h = fixtures::z2_bialgebra();
  CHECK(check_qybe(h, fixtures::z2_qt_perturbed().R).pass());

  Rng rng(96001);
  for (int trial = 0; trial < 8; ++trial) {
    Vector r(4);
    for (auto& entry : r) entry = Scalar(random_rational(rng, 3));
    CHECK(check_qybe(h, r).pass());
  }
}

TEST_CASE("a noncommutative algebra separates the two sides of the braid equation") {
  const Bialgebra h = anticommuting_pair();

  // 1⊗1 + x⊗g fails: the sides differ by 2·x⊗gx⊗g.
  Vector r(16);
  r[0] = Scalar(1);
  r[2 * 4 + 1] = Scalar(1);
  const Report report = check_qybe(h, r);
  CHECK_FALSE(item_passes(report, "qybe"));
  CHECK_FALSE(item_passes(report, "qybe-flipped"));

  // Scalar multiples of 1⊗1 are central, so they still pass.
  Vector central(16);
  central[0] = Scalar(3);
  CHECK(check_qybe(h, central).pass());
  CHECK(check_qybe(h, Vector(16)).pass());

  // The two formulations are equivalent, so their verdicts must agree on
  // arbitrary elements (random dense samples essentially always fail).
  Rng rng(481516);
  int failures = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Vector sample(16);
    for (auto& entry : sample) entry = Scalar(random_rational(rng, 2));
    const Report verdict = check_qybe(h, sample);
    CHECK(item_passes(verdict, "qybe") == item_passes(verdict, "qybe-flipped"));
    if (!verdict.pass()) ++failures;
  }
  CHECK(failures > 0);
}

TEST_CASE("the sign form on the group bialgebra is dual quasi-triangular") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const DualQTStructure dual = fixtures::z2_dual_qt();
  const Report report = check_dual_qt(h, dual);
  CHECK(report.pass());
  REQUIRE(report.items().size() == 4);
  CHECK(report.items()[0].name == "dual-qt-convolution-invertibility");
  CHECK(report.items()[1].name == "dual-qt-almost-commutativity");
  CHECK(report.items()[2].name == "dual-qt-mult-rule-1");
  CHECK(report.items()[3].name == "dual-qt-mult-rule-2");

  const auto inv = dual_qt_inverse(h, dual.R);
  REQUIRE(inv.has_value());
  CHECK(*inv == dual.R);  // the sign form is its own convolution inverse

  DualQTStructure with_inverse = dual;
  with_inverse.R_inv = dual.R;
  CHECK(check_dual_qt(h, with_inverse).pass());
}

TEST_CASE("defective bilinear forms fail the dual axioms where expected") {
  const Bialgebra h = fixtures::z2_bialgebra();

  // On group-likes, convolution is the entrywise product, so a zero entry
  // kills invertibility.
  DualQTStructure degenerate;
  degenerate.R = Matrix(2, 2);
  degenerate.R(0, 0) = Scalar(1);
  degenerate.R(0, 1) = Scalar(1);
  degenerate.R(1, 0) = Scalar(1);
  const Report degenerate_report = check_dual_qt(h, degenerate);
  CHECK_FALSE(item_passes(degenerate_report, "dual-qt-convolution-invertibility"));
  CHECK_FALSE(dual_qt_inverse(h, degenerate.R).has_value());

  // All entries nonzero, but R(g·g ⊗ g) = 1 while R(g⊗g)·R(g⊗g) = 4.
  DualQTStructure skewed;
  skewed.R = Matrix(2, 2);
  skewed.R(0, 0) = Scalar(1);
  skewed.R(0, 1) = Scalar(1);
  skewed.R(1, 0) = Scalar(1);
  skewed.R(1, 1) = Scalar(2);
  const Report skewed_report = check_dual_qt(h, skewed);
  CHECK(item_passes(skewed_report, "dual-qt-convolution-invertibility"));
  CHECK_FALSE(item_passes(skewed_report, "dual-qt-mult-rule-1"));
}

TEST_CASE("module and comodule fixtures satisfy their structure axioms") {
  const Bialgebra h = fixtures::z2_bialgebra();
  CHECK(check_module(h, fixtures::z2_sign_module()).pass());
  CHECK(check_comodule(h, fixtures::z2_regular_comodule()).pass());

  // 1 acting by 2·Id breaks the unit axiom.
  HModule doubled = fixtures::z2_sign_module();
  doubled.action(0, 0, 0) = Scalar(2);
  CHECK_FALSE(item_passes(check_module(h, doubled), "module-unit"));

  // g acting by a projection breaks associativity: g·(g·m1) = 0 ≠ m1.
  HModule projected = fixtures::z2_sign_module();
  projected.action(1, 1, 1) = Scalar(0);
  const Report projected_report = check_module(h, projected);
  CHECK(item_passes(projected_report, "module-unit"));
  CHECK_FALSE(item_passes(projected_report, "module-associativity"));

  // ρ(m0) = (1+g)⊗m0 fails both comodule axioms.
  HComodule doubled_rho = fixtures::z2_regular_comodule();
  doubled_rho.rho(2, 0) = Scalar(1);
  const Report rho_report = check_comodule(h, doubled_rho);
  CHECK_FALSE(item_passes(rho_report, "comodule-coassociativity"));
  CHECK_FALSE(item_passes(rho_report, "comodule-counit"));
}

TEST_CASE("structure-preserving maps are accepted and the swap is rejected") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const HModule mod = fixtures::z2_sign_module();
  const HComodule comod = fixtures::z2_regular_comodule();

  Matrix diag(2, 2);
  diag(0, 0) = Scalar(2);
  diag(1, 1) = Scalar(3);
  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);

  CHECK(check_module_morphism(h, mod, Matrix::identity(2)).pass());
  CHECK(check_module_morphism(h, mod, diag).pass());
  const Report mod_swap = check_module_morphism(h, mod, swap);
  CHECK_FALSE(mod_swap.pass());
  REQUIRE(mod_swap.first_failure() != nullptr);
  CHECK(mod_swap.first_failure()->name == "module-morphism");

  CHECK(check_comodule_morphism(h, comod, Matrix::identity(2)).pass());
  CHECK(check_comodule_morphism(h, comod, diag).pass());
  CHECK_FALSE(check_comodule_morphism(h, comod, swap).pass());
}

TEST_CASE("the action matrix of the nontrivial element is the sign diagonal") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const HModule mod = fixtures::z2_sign_module();

  CHECK(module_action_matrix(h, mod, fixtures::z2_qt_trivial().R) == Matrix::identity(4));

  Matrix expected = Matrix::identity(4);
  expected(3, 3) = Scalar(-1);
  CHECK(module_action_matrix(h, mod, fixtures::z2_qt().R) == expected);
}

TEST_CASE("the module-side braiding is the signed swap and satisfies the braid identity") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const HModule mod = fixtures::z2_sign_module();

  const HybeCandidate trivial =
      build_B_R(h, fixtures::z2_qt_trivial(), mod, Matrix::identity(2));
  CHECK(trivial.B == permutation_tau(2));

  const HybeCandidate cand = build_B_R(h, fixtures::z2_qt(), mod, Matrix::identity(2));
  // m_a⊗m_b ↦ (−1)^{ab} m_b⊗m_a.
  Matrix expected(4, 4);
  expected(0, 0) = Scalar(1);
  expected(2, 1) = Scalar(1);
  expected(1, 2) = Scalar(1);
  expected(3, 3) = Scalar(-1);
  CHECK(cand.B == expected);
  CHECK(check_hybe(cand).pass());

  // The inverse action composed with the swap undoes the braiding.
  const auto r_inv = qt_inverse(h, fixtures::z2_qt().R);
  REQUIRE(r_inv.has_value());
  const Matrix binv = module_action_matrix(h, mod, *r_inv) * permutation_tau(2);
  CHECK(binv * cand.B == Matrix::identity(4));
  CHECK(cand.B * binv == Matrix::identity(4));

  Matrix diag(2, 2);
  diag(0, 0) = Scalar(2);
  diag(1, 1) = Scalar(3);
  CHECK(check_hybe(build_B_R(h, fixtures::z2_qt(), mod, diag)).pass());

  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  CHECK_THROWS_WITH_AS(build_B_R(h, fixtures::z2_qt(), mod, swap),
                       doctest::Contains("module-morphism"), ValidationError);
}

TEST_CASE("the comodule-side braiding reproduces the module-side matrix") {
  const Bialgebra h = fixtures::z2_bialgebra();
  const HComodule comod = fixtures::z2_regular_comodule();

  const HybeCandidate cand = build_B_dual_R(h, fixtures::z2_dual_qt(), comod,
                                            Matrix::identity(2));
  const HybeCandidate module_side =
      build_B_R(h, fixtures::z2_qt(), fixtures::z2_sign_module(), Matrix::identity(2));
  CHECK(cand.B == module_side.B);
  CHECK(check_hybe(cand).pass());

  // The all-ones form is the counit squared, whose braiding is the plain swap.
  DualQTStructure ones;
  ones.R = Matrix(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones.R(i, j) = Scalar(1);
  CHECK(build_B_dual_R(h, ones, comod, Matrix::identity(2)).B == permutation_tau(2));

  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  CHECK_THROWS_WITH_AS(build_B_dual_R(h, fixtures::z2_dual_qt(), comod, swap),
                       doctest::Contains("comodule-morphism"), ValidationError);
}

TEST_CASE("shape violations raise dimension errors before any axiom runs") {
  const Bialgebra h = fixtures::z2_bialgebra();
  QTStructure short_r;
  short_r.R = Vector(3);
  CHECK_THROWS_AS(check_qt(h, short_r), DimensionError);
  CHECK_THROWS_AS(check_qybe(h, Vector(5)), DimensionError);
  DualQTStructure bad_form;
  bad_form.R = Matrix(2, 3);
  CHECK_THROWS_AS(check_dual_qt(h, bad_form), DimensionError);

  Bialgebra torn = h;
  torn.counit = Vector(3);
  CHECK_THROWS_AS(check_bialgebra(torn), DimensionError);
}

}  // namespace
}  // namespace hombraid
