#pragma once

#include "varjet/calculus.hpp"
#include "varjet/cohomology.hpp"
#include "varjet/expr.hpp"

namespace varjet {

// Odd Poisson bracket of local functionals in its classical single-copy
// form: sum over fields of (dF/dq . dG/dq+ - dF/dq+ . dG/dq), with the
// F-side variational derivatives taken from the left and the G-side from
// the right. The result lives over the base of the second argument.
Functional schouten_old(const Functional& F, const Functional& G);

// Naive odd Laplacian: sum over fields of the q-variational derivative of
// the q+-variational derivative of the density.
Functional bv_laplacian(const Functional& F);

enum class JacobiMode { SingleBase, MultiBase };

// Jacobi residual [[F,[[G,H]]]] - [[[[F,G]],H]] - s [[G,[[F,H]]]] with
// s = (-1)^((|F|-1)(|G|-1)), computed with the single-copy bracket. In
// MultiBase mode the three arguments are first moved to bases x, y, z; the
// result is returned un-restricted.
Functional jacobiator(const Functional& F, const Functional& G, const Functional& H,
                      JacobiMode mode = JacobiMode::SingleBase);

struct IdentityReport {
  Expression lhs;
  Expression rhs;
  Expression difference;
  bool exactly_equal = false;
  bool cohomologically_equal = false;
  std::optional<Expression> primitive;  // witness when cohomologically equal
};

// Leibniz-type compatibility of the naive Laplacian with the bracket:
// lhs = Delta [[F,G]], rhs = [[Delta F, G]] + (-1)^(|F|-1) [[F, Delta G]].
IdentityReport check_zimes(const Functional& F, const Functional& G);

// lhs = Delta(Delta F) against rhs = 0.
IdentityReport delta_squared(const Functional& F);

// For parity-even X, Y in the variables of the field q (index 1, one base):
// lhs is the density of [[ int X q+ , int Y q+ ]], rhs the density
// -( ev_X(Y) - ev_Y(X) ) q+ built from the prolonged evolutionary action.
IdentityReport evolutionary_commutator(const Expression& X, const Expression& Y,
                                       const std::string& base);

}  // namespace varjet
