#include "varjet/brackets.hpp"

#include <algorithm>

namespace varjet {

namespace {

std::set<int> joint_field_indices(const Expression& a, const Expression& b) {
  std::set<int> out = field_indices(a);
  std::set<int> more = field_indices(b);
  out.insert(more.begin(), more.end());
  return out;
}

IdentityReport make_report(Expression lhs, Expression rhs, const std::string& base) {
  IdentityReport report;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.difference = report.lhs - report.rhs;
  report.exactly_equal = report.difference.is_zero();
  TrivialityReport triv = is_exact(report.difference, base);
  report.cohomologically_equal = triv.is_trivial;
  report.primitive = std::move(triv.primitive);
  return report;
}

}  // namespace

Functional schouten_old(const Functional& F, const Functional& G) {
  Expression density;
  for (int i : joint_field_indices(F.density, G.density)) {
    density += euler(F.density, /*odd=*/false, i, Side::Left) *
               euler(G.density, /*odd=*/true, i, Side::Right);
    density -= euler(F.density, /*odd=*/true, i, Side::Left) *
               euler(G.density, /*odd=*/false, i, Side::Right);
  }
  return Functional(density, G.base);
}

Functional bv_laplacian(const Functional& F) {
  Expression density;
  for (int i : field_indices(F.density)) {
    Expression inner = euler(F.density, /*odd=*/true, i, Side::Right);
    density += euler(inner, /*odd=*/false, i, Side::Right);
  }
  return Functional(density, F.base);
}

Functional jacobiator(const Functional& F, const Functional& G, const Functional& H,
                      JacobiMode mode) {
  Functional f = F, g = G, h = H;
  if (mode == JacobiMode::MultiBase) {
    f = Functional(relabel(F.density, {{F.base, "x"}}), "x");
    g = Functional(relabel(G.density, {{G.base, "y"}}), "y");
    h = Functional(relabel(H.density, {{H.base, "z"}}), "z");
  } else {
    // Single-copy computation needs one common base; use the base of F.
    g = Functional(relabel(G.density, {{G.base, F.base}}), F.base);
    h = Functional(relabel(H.density, {{H.base, F.base}}), F.base);
  }
  Functional lhs = schouten_old(f, schouten_old(g, h));
  Functional rhs1 = schouten_old(schouten_old(f, g), h);
  int s = parity_sign((f.grading() - 1) * (g.grading() - 1));
  Functional rhs2 = schouten_old(g, schouten_old(f, h));
  Expression density = lhs.density - rhs1.density - Rational(s) * rhs2.density;
  return Functional(density, h.base);
}

IdentityReport check_zimes(const Functional& F, const Functional& G) {
  if (F.base != G.base)
    throw ExprError("Leibniz check requires both functionals over one base");
  Functional lhs = bv_laplacian(schouten_old(F, G));
  Functional dF = bv_laplacian(F);
  Functional dG = bv_laplacian(G);
  Expression rhs = schouten_old(dF, G).density +
                   Rational(parity_sign(F.grading() - 1)) * schouten_old(F, dG).density;
  return make_report(lhs.density, rhs, F.base);
}

IdentityReport delta_squared(const Functional& F) {
  Functional lhs = bv_laplacian(bv_laplacian(F));
  return make_report(lhs.density, Expression(), F.base);
}

namespace {

// Prolonged action of the evolutionary field with characteristic X on Y:
// sum over the multi-indices sigma realized in Y of D^sigma(X) dY/dq_sigma.
Expression evolutionary_action(const Expression& X, const Expression& Y) {
  std::set<MultiIndex> sigmas;
  for (const JetVariable& v : variables_of(Y))
    if (!v.odd && v.index == 1) sigmas.insert(v.deriv);
  Expression out;
  for (const MultiIndex& sigma : sigmas) {
    Expression dY = partial(Y, JetVariable{false, 1, sigma}, Side::Right);
    if (dY.is_zero()) continue;
    out += iterated_total_derivative(X, sigma, /*with_sign=*/false) * dY;
  }
  return out;
}

}  // namespace

IdentityReport evolutionary_commutator(const Expression& X, const Expression& Y,
                                       const std::string& base) {
  for (const Expression* e : {&X, &Y}) {
    if (odd_degree(*e) != 0)
      throw ExprError("evolutionary characteristics must be parity even");
    for (const JetVariable& v : variables_of(*e))
      if (v.index != 1)
        throw ExprError("evolutionary commutator supports a single field");
  }
  Expression qd = Expression::variable(JetVariable{true, 1, MultiIndex{}});
  Functional F(X * qd, base);
  Functional G(Y * qd, base);
  Expression lhs = schouten_old(F, G).density;
  Expression commutator = evolutionary_action(X, Y) - evolutionary_action(Y, X);
  Expression rhs = -(commutator * qd);
  return make_report(std::move(lhs), std::move(rhs), base);
}

}  // namespace varjet
