#pragma once

#include <optional>

#include "varjet/calculus.hpp"
#include "varjet/expr.hpp"

namespace varjet {

class NotExactError : public ExprError {
 public:
  explicit NotExactError(const std::string& what) : ExprError(what) {}
};

class UnsupportedPrimitiveError : public ExprError {
 public:
  explicit UnsupportedPrimitiveError(const std::string& what) : ExprError(what) {}
};

struct TrivialityReport {
  EulerResult eulers;
  Rational constant_part = 0;  // coefficient of the variable-free monomial
  bool has_jet_free_terms = false;
  bool is_trivial = false;
  std::optional<Expression> primitive;
};

// Decide whether the single-base density d is a total derivative in `base`.
// The verdict requires every variational derivative to vanish and, when
// with_primitive is set, find_primitive to actually produce a witness.
TrivialityReport is_exact(const Expression& d, const std::string& base,
                          bool with_primitive = true);

// Produce eta with D_base(eta) == d exactly, or throw NotExactError /
// UnsupportedPrimitiveError. The result is verified before returning.
Expression find_primitive(const Expression& d, const std::string& base);

// Whether a and b differ by an exact density (witness included).
bool cohomologous(const Expression& a, const Expression& b, const std::string& base);

}  // namespace varjet
