#pragma once

#include <cstddef>

#include "varjet/expr.hpp"

namespace varjet {

// Fresh shift direction introduced by one bracket application; `side` is 'y'
// for the first argument and 'z' for the second, `level` counts nesting.
struct ShiftLabel {
  char side = 'y';
  int level = 1;

  std::string name() const { return std::string(1, side) + std::to_string(level); }
  auto operator<=>(const ShiftLabel&) const = default;
};

// One postponed application of (-d/dw)^order; `sign` is (-1)^order.
struct DeferredRecord {
  int sign = 1;
  int order = 1;
  ShiftLabel label;

  auto operator<=>(const DeferredRecord&) const = default;
};

// A differential-function core decorated by a stack of deferred operators.
struct DeferredFactor {
  Expression core;
  std::vector<DeferredRecord> records;
};

struct CompositeTerm {
  Rational scalar = 1;
  std::vector<DeferredFactor> factors;
};

// Signed sum of factor lists; the geometric counterpart of a density.
struct CompositeExpression {
  std::vector<CompositeTerm> terms;

  bool empty() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }
};

CompositeExpression composite_add(const CompositeExpression& a,
                                  const CompositeExpression& b);
CompositeExpression composite_scale(const Rational& c, const CompositeExpression& e);

// A functional as a one-term composite (empty when the density vanishes).
CompositeExpression lift(const Functional& F);

// Geometric bracket: pairs every q-variable of one operand with every
// q+-variable of the other (equal field indices), records nonzero derivative
// orders as deferred operators in a fresh pair of shift directions, and never
// expands them. Couplings of the shift frames contribute bare signs only.
CompositeExpression geometric_bracket(const CompositeExpression& A,
                                      const CompositeExpression& B);

// Merge terms that agree up to relabeling the (pairwise interchangeable)
// shift directions, with monic cores and graded factor ordering. Terms whose
// scalar sums to zero are dropped; merged_count, when given, receives the
// number of distinct classes before that drop.
CompositeExpression canonicalize_composite(const CompositeExpression& e,
                                           std::size_t* merged_count = nullptr);

struct GeometricJacobiReport {
  CompositeExpression lhs;       // canonical [[F,[[G,H]]]]
  CompositeExpression rhs;       // canonical [[[[F,G]],H]] + s [[G,[[F,H]]]]
  CompositeExpression residual;  // canonical lhs - rhs
  std::size_t lhs_raw_terms = 0;
  std::size_t rhs_raw_terms = 0;
  std::size_t rhs_merged_terms = 0;  // classes in rhs before cancellation
  bool empty = false;
};

GeometricJacobiReport jacobiator_geometric(const Functional& F, const Functional& G,
                                           const Functional& H);

// Collapse a composite onto one base: restrict cores to `target`, expand the
// deferred operators as signed total derivatives there, and multiply out.
Expression evaluate_terminal(const CompositeExpression& e, const std::string& target);

}  // namespace varjet
