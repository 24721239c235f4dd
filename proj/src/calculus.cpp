#include "varjet/calculus.hpp"

#include <algorithm>

namespace varjet {

namespace {

// d(atom)/d(argument); duplicated from expr.cpp on purpose to keep the two
// translation units independent data-wise (it is three lines of dispatch).
Expression atom_derivative(const FunctionAtom& a) {
  switch (a.kind) {
    case AtomKind::Exp:
      return Expression::atom(AtomKind::Exp, *a.argument);
    case AtomKind::Sin:
      return Expression::atom(AtomKind::Cos, *a.argument);
    case AtomKind::Cos:
      return -Expression::atom(AtomKind::Sin, *a.argument);
  }
  throw ExprError("unknown atom kind");
}

}  // namespace

Expression total_derivative(const Expression& e, const std::string& label) {
  Expression out;
  for (auto& [t, c] : e.terms()) {
    // Odd factors: replace the j-th variable in place, then re-sort. The
    // replacement itself introduces no sign because D is parity even.
    for (std::size_t j = 0; j < t.odd.size(); ++j) {
      std::vector<JetVariable> vars = t.odd;
      vars[j] = vars[j].bumped(label);
      auto sign = normalize_odd(vars);
      if (!sign) continue;
      Term t2 = t;
      t2.odd = std::move(vars);
      out.add_term(t2, c * *sign);
    }
    // Even powers.
    for (auto& [v, p] : t.even) {
      Term t2 = t;
      if (p == 1)
        t2.even.erase(v);
      else
        t2.even[v] = p - 1;
      Term bump;
      bump.even[v.bumped(label)] = 1;
      auto prod = term_mul(t2, bump);
      out.add_term(prod->first, c * p);
    }
    // Atoms, via the chain rule on their arguments.
    for (std::size_t ai = 0; ai < t.atoms.size(); ++ai) {
      const auto& [a, p] = t.atoms[ai];
      Expression darg = total_derivative(*a.argument, label);
      if (darg.is_zero()) continue;
      Term t2 = t;
      if (p == 1)
        t2.atoms.erase(t2.atoms.begin() + static_cast<std::ptrdiff_t>(ai));
      else
        t2.atoms[ai].second = p - 1;
      out += Expression::from_term(t2, c * p) * atom_derivative(a) * darg;
    }
  }
  return out;
}

Expression iterated_total_derivative(const Expression& e, const MultiIndex& sigma,
                                     bool with_sign) {
  Expression out = e;
  for (auto& [label, n] : sigma.counts)
    for (int i = 0; i < n; ++i) out = total_derivative(out, label);
  if (with_sign && sigma.order() % 2 != 0) out = -out;
  return out;
}

Expression euler(const Expression& e, bool odd, int index, Side side) {
  std::set<MultiIndex> sigmas;
  for (const JetVariable& v : variables_of(e))
    if (v.odd == odd && v.index == index) sigmas.insert(v.deriv);
  Expression out;
  for (const MultiIndex& sigma : sigmas) {
    Expression p = partial(e, JetVariable{odd, index, sigma}, side);
    if (p.is_zero()) continue;
    out += iterated_total_derivative(p, sigma, /*with_sign=*/true);
  }
  return out;
}

bool EulerResult::all_zero() const {
  for (auto& [field, e] : components)
    if (!e.is_zero()) return false;
  return true;
}

EulerResult euler_all(const Expression& e, Side side) {
  std::set<std::pair<bool, int>> fields;
  for (const JetVariable& v : variables_of(e)) fields.insert({v.odd, v.index});
  EulerResult out;
  for (auto& [odd, index] : fields)
    out.components[{odd, index}] = euler(e, odd, index, side);
  return out;
}

int odd_degree(const Expression& e) {
  auto d = homogeneous_odd_degree(e);
  if (!d) throw ExprError("expression is not homogeneous in odd degree");
  return *d;
}

int highest_order(const Expression& e, const std::string& label) {
  int best = 0;
  for (const JetVariable& v : variables_of(e))
    best = std::max(best, v.deriv.count(label));
  return best;
}

std::set<int> field_indices(const Expression& e) {
  std::set<int> out;
  for (const JetVariable& v : variables_of(e)) out.insert(v.index);
  return out;
}

}  // namespace varjet
