#pragma once

#include <map>

#include "varjet/expr.hpp"

namespace varjet {

// Total derivative in the named base direction: a parity-even derivation
// obeying the Leibniz rule and the chain rule through function atoms.
Expression total_derivative(const Expression& e, const std::string& label);

// Apply the composition of total derivatives prescribed by the multi-index;
// with `with_sign`, multiply by (-1)^|sigma|.
Expression iterated_total_derivative(const Expression& e, const MultiIndex& sigma,
                                     bool with_sign);

// Variational derivative with respect to the field (odd, index). The sum
// runs over exactly the multi-indices realized in the expression, and the
// signed derivatives (-D)^sigma use the labels of each sigma itself.
Expression euler(const Expression& e, bool odd, int index, Side side);

// (odd?, field index) -> variational derivative, over every field present.
struct EulerResult {
  std::map<std::pair<bool, int>, Expression> components;

  const Expression* find(bool odd, int index) const {
    auto it = components.find({odd, index});
    return it == components.end() ? nullptr : &it->second;
  }
  bool all_zero() const;
};

EulerResult euler_all(const Expression& e, Side side);

// Common odd degree of the monomials; throws ExprError when inhomogeneous.
int odd_degree(const Expression& e);

// Highest derivative order in `label` over every variable occurrence,
// including those inside atom arguments. Zero for label-free expressions.
int highest_order(const Expression& e, const std::string& label);

// Field indices present, separately for even and odd variables.
std::set<int> field_indices(const Expression& e);

}  // namespace varjet
