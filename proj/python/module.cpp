#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "varjet/brackets.hpp"
#include "varjet/calculus.hpp"
#include "varjet/cohomology.hpp"
#include "varjet/dsl.hpp"
#include "varjet/geometric.hpp"
#include "varjet/suite.hpp"

namespace py = pybind11;
using namespace varjet;

namespace {

std::string json_text(const nlohmann::json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(varjet, m) {
  m.doc() = "graded variational calculus on jet spaces (exact arithmetic)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ExprError>(m, "ExprError", PyExc_ValueError);

  py::class_<Expression>(m, "Expression")
      .def(py::init([](const std::string& src) { return parse_expression(src); }),
           py::arg("source"))
      .def_property_readonly("is_zero", &Expression::is_zero)
      .def_property_readonly("term_count", &Expression::term_count)
      .def("__eq__", [](const Expression& a, const Expression& b) { return a == b; })
      .def("__add__", [](const Expression& a, const Expression& b) { return a + b; })
      .def("__sub__", [](const Expression& a, const Expression& b) { return a - b; })
      .def("__mul__", [](const Expression& a, const Expression& b) { return a * b; })
      .def("__neg__", [](const Expression& a) { return -a; })
      .def("__str__", [](const Expression& e) { return render_text(e); })
      .def("__repr__",
           [](const Expression& e) { return "Expression('" + render_text(e) + "')"; })
      .def("latex", [](const Expression& e) { return render_latex(e); })
      .def("structured", [](const Expression& e) { return json_text(render_structured(e)); });

  py::class_<Functional>(m, "Functional")
      .def(py::init([](const std::string& src) { return parse_functional(src); }),
           py::arg("source"))
      .def_readonly("density", &Functional::density)
      .def_readonly("base", &Functional::base)
      .def_property_readonly("grading", &Functional::grading)
      .def("__eq__", [](const Functional& a, const Functional& b) {
        return a.base == b.base && a.density == b.density;
      })
      .def("__str__", [](const Functional& f) { return render_text(f); })
      .def("__repr__",
           [](const Functional& f) { return "Functional('" + render_text(f) + "')"; })
      .def("latex", [](const Functional& f) { return render_latex(f); });

  py::class_<CompositeExpression>(m, "CompositeExpression")
      .def_property_readonly("empty", &CompositeExpression::empty)
      .def_property_readonly("term_count", &CompositeExpression::term_count)
      .def("__str__", [](const CompositeExpression& e) { return render_text(e); })
      .def("structured",
           [](const CompositeExpression& e) { return json_text(render_structured(e)); });

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("lhs", &IdentityReport::lhs)
      .def_readonly("rhs", &IdentityReport::rhs)
      .def_readonly("difference", &IdentityReport::difference)
      .def_readonly("exactly_equal", &IdentityReport::exactly_equal)
      .def_readonly("cohomologically_equal", &IdentityReport::cohomologically_equal);

  py::class_<TrivialityReport>(m, "TrivialityReport")
      .def_readonly("is_trivial", &TrivialityReport::is_trivial)
      .def_property_readonly("primitive", [](const TrivialityReport& r) {
        return r.primitive ? py::cast(*r.primitive) : py::object(py::none());
      });

  py::class_<GeometricJacobiReport>(m, "GeometricJacobiReport")
      .def_readonly("lhs", &GeometricJacobiReport::lhs)
      .def_readonly("rhs", &GeometricJacobiReport::rhs)
      .def_readonly("residual", &GeometricJacobiReport::residual)
      .def_readonly("lhs_raw_terms", &GeometricJacobiReport::lhs_raw_terms)
      .def_readonly("rhs_raw_terms", &GeometricJacobiReport::rhs_raw_terms)
      .def_readonly("rhs_merged_terms", &GeometricJacobiReport::rhs_merged_terms)
      .def_readonly("empty", &GeometricJacobiReport::empty);

  m.def("parse_expression", &parse_expression, py::arg("source"));
  m.def("parse_functional", &parse_functional, py::arg("source"));

  m.def(
      "total_derivative",
      [](const Expression& e, const std::string& label) {
        return total_derivative(e, label);
      },
      py::arg("expression"), py::arg("label"));
  m.def(
      "euler",
      [](const Expression& e, bool odd, int index) {
        return euler(e, odd, index, Side::Right);
      },
      py::arg("expression"), py::arg("odd"), py::arg("index") = 1);
  m.def(
      "restrict_diagonal",
      [](const Expression& e, const std::string& target) {
        return restrict_diagonal(e, target);
      },
      py::arg("expression"), py::arg("target"));

  m.def("schouten_old", &schouten_old, py::arg("f"), py::arg("g"));
  m.def("bv_laplacian", &bv_laplacian, py::arg("f"));
  m.def(
      "jacobiator",
      [](const Functional& f, const Functional& g, const Functional& h, bool multibase) {
        return jacobiator(f, g, h,
                          multibase ? JacobiMode::MultiBase : JacobiMode::SingleBase);
      },
      py::arg("f"), py::arg("g"), py::arg("h"), py::arg("multibase") = false);
  m.def("check_zimes", &check_zimes, py::arg("f"), py::arg("g"));
  m.def("delta_squared", &delta_squared, py::arg("f"));
  m.def("evolutionary_commutator", &evolutionary_commutator, py::arg("x"), py::arg("y"),
        py::arg("base") = "x");

  m.def(
      "is_exact",
      [](const Expression& d, const std::string& base) { return is_exact(d, base); },
      py::arg("density"), py::arg("base") = "x");
  m.def("find_primitive", &find_primitive, py::arg("density"), py::arg("base") = "x");
  m.def("cohomologous", &cohomologous, py::arg("a"), py::arg("b"),
        py::arg("base") = "x");

  m.def("lift", &lift, py::arg("f"));
  m.def("geometric_bracket", &geometric_bracket, py::arg("a"), py::arg("b"));
  m.def(
      "canonicalize_composite",
      [](const CompositeExpression& e) { return canonicalize_composite(e); },
      py::arg("composite"));
  m.def("jacobiator_geometric", &jacobiator_geometric, py::arg("f"), py::arg("g"),
        py::arg("h"));
  m.def("evaluate_terminal", &evaluate_terminal, py::arg("composite"),
        py::arg("target"));

  m.def("run_suite", []() {
    py::list results;
    for (const suite::CheckResult& r : suite::run_all()) {
      py::dict entry;
      entry["name"] = r.name;
      entry["pass"] = r.pass;
      entry["detail"] = r.detail;
      entry["seconds"] = r.seconds;
      results.append(entry);
    }
    return results;
  });
}
