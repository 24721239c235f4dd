#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "varjet/brackets.hpp"
#include "varjet/calculus.hpp"
#include "varjet/cohomology.hpp"
#include "varjet/dsl.hpp"
#include "varjet/geometric.hpp"
#include "varjet/suite.hpp"

namespace {

using namespace varjet;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;  // a mathematical check came out negative
constexpr int kExitUsage = 2;    // bad flags or unparseable input

// Inputs are either paths to .fun files or inline sources.
std::string load_source(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Functional read_functional(const std::string& arg) {
  return parse_functional(load_source(arg));
}

Expression read_expression(const std::string& arg) {
  return parse_expression(load_source(arg));
}

struct OutputOptions {
  std::string format = "text";
};

template <typename T>
void emit(const T& value, const OutputOptions& out, const std::string& operation) {
  if (out.format == "latex") {
    std::cout << render_latex(value) << "\n";
  } else if (out.format == "structured") {
    nlohmann::json doc = {{"schema", "varjet/result@1"},
                          {"operation", operation},
                          {"result", render_structured(value)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_text(value) << "\n";
  }
}

void add_output_flag(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output", out.format, "output format")
      ->check(CLI::IsMember({"text", "structured", "latex"}))
      ->capture_default_str();
}

void emit_identity_report(const IdentityReport& report, const OutputOptions& out,
                          const std::string& operation) {
  if (out.format == "structured") {
    nlohmann::json doc = {{"schema", "varjet/identity-report@1"},
                          {"operation", operation},
                          {"lhs", render_structured(report.lhs)},
                          {"rhs", render_structured(report.rhs)},
                          {"difference", render_structured(report.difference)},
                          {"exactly_equal", report.exactly_equal},
                          {"cohomologically_equal", report.cohomologically_equal}};
    if (report.primitive) doc["primitive"] = render_structured(*report.primitive);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  auto render = out.format == "latex"
                    ? +[](const Expression& e) { return render_latex(e); }
                    : +[](const Expression& e) { return render_text(e); };
  std::cout << "lhs: " << render(report.lhs) << "\n";
  std::cout << "rhs: " << render(report.rhs) << "\n";
  std::cout << "difference: " << render(report.difference) << "\n";
  std::cout << "exactly equal: " << (report.exactly_equal ? "yes" : "no") << "\n";
  std::cout << "cohomologically equal: "
            << (report.cohomologically_equal ? "yes" : "no") << "\n";
  if (report.primitive)
    std::cout << "primitive: " << render(*report.primitive) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"varjet: graded variational calculus on jet spaces"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string mode = "old";
  std::string base = "x";
  std::string field = "q";
  int field_index = 1;
  bool diagonal = false;
  bool assert_holds = false;
  std::vector<std::string> inputs;

  auto* bracket = app.add_subcommand("bracket", "odd Poisson bracket of two functionals");
  bracket->add_option("--mode", mode, "old|multibase|geometric")
      ->check(CLI::IsMember({"old", "multibase", "geometric"}))
      ->capture_default_str();
  bracket->add_option("inputs", inputs, "two functionals (.fun files or inline)")
      ->expected(2)->required();
  add_output_flag(bracket, out);

  auto* laplacian = app.add_subcommand("laplacian", "naive odd Laplacian of a functional");
  laplacian->add_option("inputs", inputs, "one functional")->expected(1)->required();
  add_output_flag(laplacian, out);

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi residual of three functionals");
  jacobi->add_option("--mode", mode, "old|multibase|geometric")
      ->check(CLI::IsMember({"old", "multibase", "geometric"}))
      ->capture_default_str();
  jacobi->add_flag("--diagonal", diagonal, "restrict a multibase residual to --base");
  jacobi->add_option("--base", base, "target base label")->capture_default_str();
  jacobi->add_option("inputs", inputs, "three functionals")->expected(3)->required();
  add_output_flag(jacobi, out);

  auto* euler_cmd = app.add_subcommand("euler", "variational derivative of a functional");
  euler_cmd->add_option("--field", field, "q|qd")
      ->check(CLI::IsMember({"q", "qd"}))
      ->capture_default_str();
  euler_cmd->add_option("--index", field_index, "field index")->capture_default_str();
  euler_cmd->add_option("inputs", inputs, "one functional")->expected(1)->required();
  add_output_flag(euler_cmd, out);

  auto* exact = app.add_subcommand("exact", "test whether a density is a total derivative");
  exact->add_option("inputs", inputs, "one functional")->expected(1)->required();
  add_output_flag(exact, out);

  auto* primitive = app.add_subcommand("primitive", "produce eta with D(eta) equal to the density");
  primitive->add_option("inputs", inputs, "one functional")->expected(1)->required();
  add_output_flag(primitive, out);

  auto* zimes = app.add_subcommand(
      "zimes", "Leibniz compatibility of the Laplacian with the bracket");
  zimes->add_flag("--assert-holds", assert_holds,
                  "exit nonzero when the identity fails cohomologically");
  zimes->add_option("inputs", inputs, "two functionals")->expected(2)->required();
  add_output_flag(zimes, out);

  auto* delta2 = app.add_subcommand("delta2", "square of the naive Laplacian");
  delta2->add_option("inputs", inputs, "one functional")->expected(1)->required();
  add_output_flag(delta2, out);

  auto* commutator = app.add_subcommand(
      "commutator", "bracket of one-vectors against the evolutionary commutator");
  commutator->add_option("--base", base, "base label")->capture_default_str();
  commutator->add_option("inputs", inputs, "two parity-even characteristics")
      ->expected(2)->required();
  add_output_flag(commutator, out);

  auto* paper_suite =
      app.add_subcommand("paper-suite", "run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bracket->parsed()) {
      Functional A = read_functional(inputs[0]);
      Functional B = read_functional(inputs[1]);
      if (mode == "geometric") {
        CompositeExpression result = canonicalize_composite(
            geometric_bracket(lift(A), lift(B)));
        emit(result, out, "bracket");
      } else {
        if (mode == "multibase") {
          A = Functional(relabel(A.density, {{A.base, "x"}}), "x");
          B = Functional(relabel(B.density, {{B.base, "y"}}), "y");
        }
        emit(schouten_old(A, B).density, out, "bracket");
      }
      return kExitOk;
    }
    if (laplacian->parsed()) {
      emit(bv_laplacian(read_functional(inputs[0])).density, out, "laplacian");
      return kExitOk;
    }
    if (jacobi->parsed()) {
      Functional F = read_functional(inputs[0]);
      Functional G = read_functional(inputs[1]);
      Functional H = read_functional(inputs[2]);
      if (mode == "geometric") {
        GeometricJacobiReport report = jacobiator_geometric(F, G, H);
        if (report.empty && out.format == "text") {
          std::cout << "0 (empty composite)\n";
        } else {
          emit(report.residual, out, "jacobi");
        }
        return report.empty ? kExitOk : kExitVerdict;
      }
      Functional J = jacobiator(
          F, G, H, mode == "multibase" ? JacobiMode::MultiBase : JacobiMode::SingleBase);
      Expression density = J.density;
      if (diagonal && mode == "multibase") density = restrict_diagonal(density, base);
      emit(density, out, "jacobi");
      return kExitOk;
    }
    if (euler_cmd->parsed()) {
      Functional F = read_functional(inputs[0]);
      emit(euler(F.density, field == "qd", field_index, Side::Right), out, "euler");
      return kExitOk;
    }
    if (exact->parsed()) {
      Functional F = read_functional(inputs[0]);
      TrivialityReport report = is_exact(F.density, F.base);
      if (out.format == "structured") {
        nlohmann::json doc = {{"schema", "varjet/triviality-report@1"},
                              {"trivial", report.is_trivial}};
        if (report.primitive) doc["primitive"] = render_structured(*report.primitive);
        std::cout << doc.dump(2) << "\n";
      } else if (report.is_trivial) {
        std::cout << "trivial; primitive: " << render_text(*report.primitive) << "\n";
      } else {
        std::cout << "not trivial\n";
      }
      return report.is_trivial ? kExitOk : kExitVerdict;
    }
    if (primitive->parsed()) {
      Functional F = read_functional(inputs[0]);
      emit(find_primitive(F.density, F.base), out, "primitive");
      return kExitOk;
    }
    if (zimes->parsed()) {
      IdentityReport report =
          check_zimes(read_functional(inputs[0]), read_functional(inputs[1]));
      emit_identity_report(report, out, "zimes");
      if (assert_holds && !report.cohomologically_equal) return kExitVerdict;
      return kExitOk;
    }
    if (delta2->parsed()) {
      IdentityReport report = delta_squared(read_functional(inputs[0]));
      emit_identity_report(report, out, "delta2");
      return report.cohomologically_equal ? kExitOk : kExitVerdict;
    }
    if (commutator->parsed()) {
      IdentityReport report = evolutionary_commutator(
          read_expression(inputs[0]), read_expression(inputs[1]), base);
      emit_identity_report(report, out, "commutator");
      return report.cohomologically_equal ? kExitOk : kExitVerdict;
    }
    if (paper_suite->parsed()) {
      bool all_pass = true;
      for (const suite::CheckResult& r : suite::run_all()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::printf("  [%.2f s]\n", r.seconds);
        all_pass &= r.pass;
      }
      return all_pass ? kExitOk : kExitVerdict;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
