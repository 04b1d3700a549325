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

// Command-line front end.  Every invocation writes exactly one JSON document
// to stdout (a report, a candidate, or a matrix), prose to stderr, and exits
// 0 (all checks pass), 1 (a check or precondition failed), or 2 (the input
// could not be parsed or does not conform to its schema).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hombraid/braid.hpp"
#include "hombraid/errors.hpp"
#include "hombraid/fixtures.hpp"
#include "hombraid/homalg.hpp"
#include "hombraid/hybe.hpp"
#include "hombraid/json_io.hpp"

namespace {

using namespace hombraid;
namespace fx = hombraid::fixtures;

void emit(const Json& j) { std::cout << json_text(j); }

int finish_report(const Report& report, const std::string& headline) {
  emit(to_json(report));
  std::cerr << headline << ": " << (report.pass() ? "pass" : "FAIL") << "\n"
            << report.summary();
  return report.pass() ? 0 : 1;
}

int finish_error(const std::string& stage, const std::string& message, int code) {
  Report report;
  report.fail(stage, message);
  emit(to_json(report));
  std::cerr << "error: " << message << "\n";
  return code;
}

/// --cap beats HOMBRAID_CAP beats the built-in default.
std::size_t effective_cap(const std::optional<std::size_t>& flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("HOMBRAID_CAP")) {
    const std::string text(env);
    std::size_t parsed = 0;
    std::size_t consumed = 0;
    try {
      parsed = std::stoull(text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != text.size() || parsed == 0)
      throw ParseError("HOMBRAID_CAP must be a positive integer, found \"" + text + "\"");
    return parsed;
  }
  return kDefaultDimensionCap;
}

Rational parse_rational(const std::string& text, const char* flag) {
  const Scalar value = Scalar::parse(text);
  if (!value.is_constant())
    throw ParseError(std::string(flag) + " must be a rational number, found \"" + text + "\"");
  return value.rational();
}

Matrix diagonal2(const Scalar& a, const Scalar& b) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Report run_check(const std::string& target, const std::string& input, std::size_t n,
                 const std::optional<std::size_t>& cap) {
  const Json j = load_json_file(input);
  if (target == "hom-lie") return check_hom_lie(hom_lie_from_json(j));
  if (target == "hom-assoc") return check_hom_assoc(hom_assoc_from_json(j));
  if (target == "bialgebra") return check_bialgebra(bialgebra_from_json(j).bialgebra);
  if (target == "qt") {
    const BialgebraFile file = bialgebra_from_json(j);
    if (!file.qt.has_value()) throw ParseError(input + ": no \"qt_R\" entry to check");
    return check_qt(file.bialgebra, *file.qt);
  }
  if (target == "dual-qt") {
    const BialgebraFile file = bialgebra_from_json(j);
    if (!file.dual.has_value()) throw ParseError(input + ": no \"dual_R\" entry to check");
    return check_dual_qt(file.bialgebra, *file.dual);
  }
  if (target == "qybe") {
    const BialgebraFile file = bialgebra_from_json(j);
    if (!file.qt.has_value()) throw ParseError(input + ": no \"qt_R\" entry to check");
    return check_qybe(file.bialgebra, file.qt->R);
  }
  if (target == "module") {
    const ModuleFile file = module_from_json(j);
    Report report = check_module(file.bialgebra, file.module);
    report.absorb(check_module_morphism(file.bialgebra, file.module, file.alpha));
    return report;
  }
  if (target == "comodule") {
    const ComoduleFile file = comodule_from_json(j);
    Report report = check_comodule(file.bialgebra, file.comodule);
    report.absorb(check_comodule_morphism(file.bialgebra, file.comodule, file.alpha));
    return report;
  }
  if (target == "hybe") return check_hybe(candidate_from_json(j));
  if (target == "braid") {
    const HybeCandidate c = candidate_from_json(j);
    const BraidRep rep = build_braid_generators(c, n, effective_cap(cap));
    if (!rep.note.empty()) std::cerr << "note: " << rep.note << "\n";
    return check_braid_relations(rep);
  }
  throw ParseError("unknown check target \"" + target + "\"");
}

HybeCandidate run_build(const std::string& target, const std::string& input) {
  const Json j = load_json_file(input);
  if (target == "b-alpha") return build_B_alpha(hom_lie_from_json(j));
  if (target == "b-alpha-inv") return invert_B_alpha(hom_lie_from_json(j));
  if (target == "tau-alpha") return tau_alpha(hom_module_from_json(j).alpha);
  if (target == "b-r") {
    const ModuleFile file = module_from_json(j);
    if (!file.qt.has_value())
      throw ParseError(input + ": the embedded bialgebra carries no \"qt_R\"; b-r needs one");
    return build_B_R(file.bialgebra, *file.qt, file.module, file.alpha);
  }
  if (target == "b-dual-r") {
    const ComoduleFile file = comodule_from_json(j);
    if (!file.dual.has_value())
      throw ParseError(input +
                       ": the embedded bialgebra carries no \"dual_R\"; b-dual-r needs one");
    return build_B_dual_R(file.bialgebra, *file.dual, file.comodule, file.alpha);
  }
  throw ParseError("unknown build target \"" + target + "\"");
}

int run_braid(const std::string& input, std::size_t n, const std::optional<std::string>& word,
              const std::optional<std::string>& lambda,
              const std::optional<std::size_t>& cap) {
  HybeCandidate cand = candidate_from_json(load_json_file(input));
  if (lambda.has_value()) cand = specialize(cand, parse_rational(*lambda, "--lambda"));
  const BraidRep rep = build_braid_generators(cand, n, effective_cap(cap));
  if (!rep.note.empty()) std::cerr << "note: " << rep.note << "\n";
  if (!word.has_value())
    return finish_report(check_braid_relations(rep),
                         "braid relations on " + std::to_string(n) + " strands");
  const BraidWord w = parse_braid_word(n, *word);
  const Matrix result = evaluate_braid_word(rep, w);
  emit(to_json(result));
  std::cerr << "evaluated a word of length " << w.letters.size() << " on " << n
            << " strands: " << result.shape() << " matrix\n";
  return 0;
}

std::vector<std::pair<std::string, Json>> fixture_corpus() {
  const Scalar l = Scalar::lambda();
  std::vector<std::pair<std::string, Json>> out;

  out.emplace_back("sl2_lambda.json", to_json(sl2_lambda()));
  out.emplace_back("sl2.json", to_json(sl2()));
  out.emplace_back("sl2_broken.json", to_json(fx::sl2_lambda_broken()));
  out.emplace_back("abelian_homlie.json", to_json(fx::abelian_hom_lie()));
  out.emplace_back("upper_triangular_twisted.json", to_json(fx::upper_triangular_twisted()));

  BialgebraFile qt_file;
  qt_file.bialgebra = fx::z2_bialgebra();
  qt_file.qt = fx::z2_qt();
  out.emplace_back("z2_qt.json", to_json(qt_file));
  qt_file.qt = fx::z2_qt_trivial();
  out.emplace_back("z2_qt_trivial.json", to_json(qt_file));
  qt_file.qt = fx::z2_qt_perturbed();
  out.emplace_back("z2_qt_perturbed.json", to_json(qt_file));

  BialgebraFile dual_file;
  dual_file.bialgebra = fx::z2_bialgebra();
  dual_file.dual = fx::z2_dual_qt();
  out.emplace_back("z2_dual_qt.json", to_json(dual_file));

  ModuleFile mod;
  mod.bialgebra = fx::z2_bialgebra();
  mod.qt = fx::z2_qt();
  mod.module = fx::z2_sign_module();
  mod.alpha = Matrix::identity(2);
  out.emplace_back("z2_qt_module.json", to_json(mod));
  mod.alpha = diagonal2(Scalar(2), Scalar(3));
  out.emplace_back("z2_qt_module_scaled.json", to_json(mod));
  mod.alpha = Matrix(2, 2);
  mod.alpha(0, 1) = Scalar(1);
  mod.alpha(1, 0) = Scalar(1);
  out.emplace_back("z2_qt_module_swap.json", to_json(mod));

  ComoduleFile com;
  com.bialgebra = fx::z2_bialgebra();
  com.dual = fx::z2_dual_qt();
  com.comodule = fx::z2_regular_comodule();
  com.alpha = Matrix::identity(2);
  out.emplace_back("z2_dual_comodule.json", to_json(com));

  out.emplace_back("tau_identity.json", to_json(tau_alpha(Matrix::identity(2))));
  out.emplace_back("tau_alpha_lambda.json", to_json(tau_alpha(diagonal2(l, l.inverse()))));

  HybeCandidate bad;
  bad.dim = 2;
  bad.B = Matrix::identity(4);
  bad.B(3, 3) = Scalar(2);
  bad.alpha = diagonal2(Scalar(1), Scalar(3));
  out.emplace_back("hybe_diag_fail.json", to_json(bad));

  out.emplace_back("sl2_balpha.json", to_json(build_B_alpha(sl2_lambda())));

  HomModule carrier;
  carrier.dim = 2;
  carrier.alpha = diagonal2(l, l.inverse());
  carrier.basis_labels = {"u", "v"};
  out.emplace_back("hom_module_diag.json", to_json(carrier));

  return out;
}

int run_fixtures(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir + ": " + ec.message());
  Report report;
  for (const auto& [name, body] : fixture_corpus()) {
    write_json_file((std::filesystem::path(dir) / name).string(), body);
    report.ok(name);
  }
  emit(to_json(report));
  std::cerr << "wrote " << report.items().size() << " fixture files to " << dir << "\n";
  return 0;
}

int run_build_command(const std::string& target, const std::string& input,
                      const std::string& out) {
  const HybeCandidate cand = run_build(target, input);
  const Report verdict = check_hybe(cand);
  if (!out.empty()) {
    write_json_file(out, to_json(cand));
    std::cerr << "wrote " << out << ": " << cand.B.shape() << " candidate on a carrier of dim "
              << cand.dim << "\n";
    emit(to_json(verdict));
  } else {
    emit(to_json(cand));
  }
  std::cerr << "twisted braid identity: " << (verdict.pass() ? "pass" : "FAIL") << "\n"
            << verdict.summary();
  return verdict.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and constructions for twisted Yang-Baxter operators"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));

  std::string check_target, check_input;
  CLI::App* check = app.add_subcommand("check", "verify the axioms of a structure file");
  check
      ->add_option("target", check_target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"hom-lie", "hom-assoc", "bialgebra", "qt", "dual-qt", "module",
                             "comodule", "hybe", "qybe", "braid"}));
  check->add_option("input", check_input, "structure file (JSON)")->required();

  std::string build_target, build_input, build_out;
  CLI::App* build = app.add_subcommand("build", "construct an operator from a structure file");
  build
      ->add_option("target", build_target, "what to construct")
      ->required()
      ->check(CLI::IsMember({"b-alpha", "b-alpha-inv", "b-r", "b-dual-r", "tau-alpha"}));
  build->add_option("input", build_input, "structure file (JSON)")->required();
  build->add_option("--out", build_out,
                    "write the candidate here and report the verdict on stdout; without "
                    "--out the candidate itself goes to stdout");

  std::string braid_input;
  std::size_t strands = 3;
  std::string word_text, lambda_text;
  std::size_t cap_value = 0;
  CLI::App* braid = app.add_subcommand("braid", "build braid generators from a candidate file");
  braid->add_option("input", braid_input, "candidate file (JSON)")->required();
  braid->add_option("--n", strands, "strand count (default 3)");
  CLI::Option* word_opt =
      braid->add_option("--word", word_text, "evaluate this word, e.g. \"1 2 -1\"");
  CLI::Option* lambda_opt =
      braid->add_option("--lambda", lambda_text, "specialize the parameter first");
  CLI::Option* cap_opt =
      braid->add_option("--cap", cap_value, "maximum total dimension m^n");
  // `check braid` accepts the same tuning flags.
  std::size_t check_strands = 3;
  std::size_t check_cap_value = 0;
  check->add_option("--n", check_strands, "strand count for the braid target (default 3)");
  CLI::Option* check_cap_opt =
      check->add_option("--cap", check_cap_value, "maximum total dimension m^n");

  std::string fixtures_dir;
  CLI::App* fixtures = app.add_subcommand("fixtures", "write the built-in fixture corpus");
  fixtures->add_option("--out", fixtures_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return finish_error("usage", e.what(), 2);
  }

  try {
    if (check->parsed()) {
      const std::optional<std::size_t> cap =
          check_cap_opt->count() ? std::optional<std::size_t>(check_cap_value) : std::nullopt;
      return finish_report(run_check(check_target, check_input, check_strands, cap),
                           "check " + check_target + " " + check_input);
    }
    if (build->parsed()) return run_build_command(build_target, build_input, build_out);
    if (braid->parsed()) {
      const std::optional<std::string> word =
          word_opt->count() ? std::optional<std::string>(word_text) : std::nullopt;
      const std::optional<std::string> lambda =
          lambda_opt->count() ? std::optional<std::string>(lambda_text) : std::nullopt;
      const std::optional<std::size_t> cap =
          cap_opt->count() ? std::optional<std::size_t>(cap_value) : std::nullopt;
      return run_braid(braid_input, strands, word, lambda, cap);
    }
    if (fixtures->parsed()) return run_fixtures(fixtures_dir);
    return finish_error("usage", "no subcommand given", 2);
  } catch (const ValidationError& e) {
    if (!e.report().pass()) {
      emit(to_json(e.report()));
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return finish_error("precondition", e.what(), 1);
  } catch (const ParseError& e) {
    return finish_error("parse", e.what(), 2);
  } catch (const DimensionError& e) {
    return finish_error("shape", e.what(), 2);
  } catch (const Error& e) {
    return finish_error("precondition", e.what(), 1);
  } catch (const std::exception& e) {
    return finish_error("internal", e.what(), 1);
  }
}
