#pragma once

#include <string>

#include "json.hpp"
#include "varjet/expr.hpp"
#include "varjet/geometric.hpp"

namespace varjet {

class ParseError : public ExprError {
 public:
  ParseError(const std::string& what, int line, int column)
      : ExprError(what + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line(line),
        column(column) {}

  int line;
  int column;
};

// Expression grammar (ASCII): sums of products of rationals, jet variables
// and atoms exp/sin/cos. "q" is the even field, "qd" its odd antifield; an
// optional field index follows ("q2"), then an underscore subscript whose
// letters (each with an optional numeric suffix) name base labels, repeats
// giving the derivative order: q_xx, qd_xy, q_{y1 y1}.
Expression parse_expression(const std::string& source);

// "int <expression> d<label>".
Functional parse_functional(const std::string& source);

std::string render_text(const Expression& e);
std::string render_text(const Functional& F);
std::string render_text(const CompositeExpression& e);

std::string render_latex(const Expression& e);
std::string render_latex(const Functional& F);
std::string render_latex(const CompositeExpression& e);

nlohmann::json render_structured(const Expression& e);
nlohmann::json render_structured(const Functional& F);
nlohmann::json render_structured(const CompositeExpression& e);

}  // namespace varjet
