#include "varjet/cohomology.hpp"

#include <algorithm>

namespace varjet {

namespace {

bool term_is_jet_free(const Term& t) {
  if (!t.odd.empty() || !t.even.empty()) return false;
  for (auto& [a, p] : t.atoms)
    if (!variables_of(*a.argument).empty()) return false;
  return true;
}

bool depends_on(const Expression& e, const JetVariable& v) {
  return variables_of(e).count(v) != 0;
}

// Integral over the even variable u of coeff * u^n * rest, where rest is
// u-free and atom-free in u.
Expression poly_antiderivative(const Rational& coeff, int n, const Term& rest,
                               const JetVariable& u) {
  Term up;
  up.even[u] = n + 1;
  auto prod = term_mul(rest, up);
  return Expression::from_term(prod->first, coeff / (n + 1));
}

// Integral of u^n * exp(arg)^p du where d(arg)/du == alpha (a nonzero
// rational), by repeated integration by parts.
Expression exp_antiderivative(int n, const FunctionAtom& a, int p,
                              const Rational& alpha, const JetVariable& u) {
  Rational beta = alpha * p;  // slope of exp(arg)^p in u
  Term atom_term;
  atom_term.atoms.emplace_back(a, p);
  Expression acc;
  Rational c = Rational(1) / beta;
  for (int m = n; m >= 0; --m) {
    Term t = atom_term;
    if (m > 0) t.even[u] = m;
    acc.add_term(t, c);
    if (m > 0) c = -c * m / beta;
  }
  return acc;
}

// Mutually recursive integrals of u^n sin(arg) and u^n cos(arg).
Expression trig_antiderivative(int n, AtomKind kind, const Expression& arg,
                               const Rational& alpha, const JetVariable& u) {
  Expression sin_atom = Expression::atom(AtomKind::Sin, arg);
  Expression cos_atom = Expression::atom(AtomKind::Cos, arg);
  Expression u_pow = Expression::variable(u);
  if (kind == AtomKind::Sin) {
    Expression head = (Rational(-1) / alpha) * (u_pow.pow(n) * cos_atom);
    if (n == 0) return head;
    return head + (Rational(n) / alpha) *
                      trig_antiderivative(n - 1, AtomKind::Cos, arg, alpha, u);
  }
  Expression head = (Rational(1) / alpha) * (u_pow.pow(n) * sin_atom);
  if (n == 0) return head;
  return head - (Rational(n) / alpha) *
                    trig_antiderivative(n - 1, AtomKind::Sin, arg, alpha, u);
}

// Exact antiderivative of c with respect to the even variable u. Handles
// monomials of the form u^n * A(arg)^p * rest with rest u-free and arg
// affine in u with rational slope; everything else is rejected.
Expression antiderivative(const Expression& c, const JetVariable& u) {
  Expression out;
  for (auto& [t, coeff] : c.terms()) {
    Term rest = t;
    int n = 0;
    auto it = rest.even.find(u);
    if (it != rest.even.end()) {
      n = it->second;
      rest.even.erase(it);
    }
    // At most one atom may depend on u.
    int found = -1;
    for (std::size_t ai = 0; ai < rest.atoms.size(); ++ai)
      if (depends_on(*rest.atoms[ai].first.argument, u)) {
        if (found >= 0)
          throw UnsupportedPrimitiveError(
              "two function atoms depend on the integration variable");
        found = static_cast<int>(ai);
      }
    if (found < 0) {
      out += poly_antiderivative(coeff, n, rest, u);
      continue;
    }
    auto [a, p] = rest.atoms[static_cast<std::size_t>(found)];
    rest.atoms.erase(rest.atoms.begin() + found);
    Expression alpha_expr = partial(*a.argument, u, Side::Right);
    auto alpha = alpha_expr.as_constant();
    if (!alpha || *alpha == 0)
      throw UnsupportedPrimitiveError(
          "atom argument is not affine in the integration variable");
    Expression integral;
    if (a.kind == AtomKind::Exp) {
      integral = exp_antiderivative(n, a, p, *alpha, u);
    } else {
      if (p != 1)
        throw UnsupportedPrimitiveError(
            "cannot integrate powers of trigonometric atoms");
      integral = trig_antiderivative(n, a.kind, *a.argument, *alpha, u);
    }
    out += Expression::from_term(rest, coeff) * integral;
  }
  return out;
}

}  // namespace

Expression find_primitive(const Expression& d, const std::string& base) {
  for (const std::string& label : base_labels(d))
    if (label != base)
      throw ExprError("primitive search requires a single-base density, found label '" +
                      label + "'");

  Expression remainder = d;
  Expression primitive;
  constexpr int kMaxRounds = 10000;
  for (int round = 0; round < kMaxRounds; ++round) {
    if (remainder.is_zero()) {
      if (!(total_derivative(primitive, base) == d))
        throw UnsupportedPrimitiveError("internal check failed: primitive does not differentiate back");
      return primitive;
    }
    int k = highest_order(remainder, base);
    if (k == 0)
      throw NotExactError("remainder has no derivatives in the base direction");

    // Highest-order variable in canonical order.
    std::optional<JetVariable> v;
    for (const JetVariable& w : variables_of(remainder))
      if (w.deriv.count(base) == k && (!v || *v < w)) v = w;

    Expression c = partial(remainder, *v, Side::Right);
    if (c.is_zero())
      throw UnsupportedPrimitiveError(
          "top-order variable occurs only inside atom arguments");
    for (const JetVariable& w : variables_of(c))
      if (w.deriv.count(base) == k)
        throw NotExactError("density is nonlinear in its top-order variables");

    JetVariable u = v->bumped(base, -1);
    Expression g;
    if (v->odd) {
      if (depends_on(c, u))
        throw UnsupportedPrimitiveError(
            "coefficient of the top odd variable depends on its antiderivative");
      g = c * Expression::variable(u);
    } else {
      g = antiderivative(c, u);
    }
    primitive += g;
    remainder -= total_derivative(g, base);
    if (depends_on(remainder, *v))
      throw UnsupportedPrimitiveError("primitive search made no progress");
  }
  throw UnsupportedPrimitiveError("primitive search did not converge");
}

TrivialityReport is_exact(const Expression& d, const std::string& base,
                          bool with_primitive) {
  for (const std::string& label : base_labels(d))
    if (label != base)
      throw ExprError("exactness test requires a single-base density, found label '" +
                      label + "'");

  TrivialityReport report;
  report.eulers = euler_all(d, Side::Right);
  for (auto& [t, c] : d.terms()) {
    if (t.is_empty()) report.constant_part = c;
    if (term_is_jet_free(t)) report.has_jet_free_terms = true;
  }
  report.is_trivial = report.eulers.all_zero() && !report.has_jet_free_terms;
  if (report.is_trivial && with_primitive) {
    try {
      report.primitive = find_primitive(d, base);
    } catch (const ExprError&) {
      report.is_trivial = false;
    }
  }
  return report;
}

bool cohomologous(const Expression& a, const Expression& b, const std::string& base) {
  return is_exact(a - b, base).is_trivial;
}

}  // namespace varjet
