#include "varjet/expr.hpp"

#include <algorithm>

namespace varjet {

MultiIndex::MultiIndex(std::map<std::string, int> c) {
  for (auto& [label, n] : c) {
    if (n < 0) throw ExprError("negative derivative order for label '" + label + "'");
    if (n > 0) counts.emplace(label, n);
  }
}

int MultiIndex::order() const {
  int total = 0;
  for (auto& [label, n] : counts) total += n;
  return total;
}

int MultiIndex::count(const std::string& label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

MultiIndex MultiIndex::bumped(const std::string& label, int by) const {
  MultiIndex out = *this;
  int n = out.count(label) + by;
  if (n < 0) throw ExprError("derivative order underflow for label '" + label + "'");
  if (n == 0)
    out.counts.erase(label);
  else
    out.counts[label] = n;
  return out;
}

MultiIndex MultiIndex::collapsed(const std::string& target) const {
  MultiIndex out;
  int total = order();
  if (total > 0) out.counts[target] = total;
  return out;
}

MultiIndex MultiIndex::relabeled(const std::map<std::string, std::string>& ren) const {
  MultiIndex out;
  for (auto& [label, n] : counts) {
    auto it = ren.find(label);
    const std::string& name = it == ren.end() ? label : it->second;
    out.counts[name] += n;
  }
  return out;
}

namespace {

template <typename T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int cmp(const FunctionAtom& a, const FunctionAtom& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  return cmp(*a.argument, *b.argument);
}

int cmp(const Term& a, const Term& b) {
  if (int c = cmp3(a.odd, b.odd)) return c;
  if (int c = cmp3(a.even, b.even)) return c;
  if (int c = cmp3(a.atoms.size(), b.atoms.size())) return c;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    if (int c = cmp(a.atoms[i].first, b.atoms[i].first)) return c;
    if (int c = cmp3(a.atoms[i].second, b.atoms[i].second)) return c;
  }
  return 0;
}

int cmp(const Expression& a, const Expression& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (int c = cmp(ia->first, ib->first)) return c;
    if (int c = cmp3(ia->second, ib->second)) return c;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

std::optional<int> normalize_odd(std::vector<JetVariable>& vars) {
  // Insertion sort with transposition counting; small lists in practice.
  int sign = 1;
  for (std::size_t i = 1; i < vars.size(); ++i) {
    JetVariable v = vars[i];
    std::size_t j = i;
    while (j > 0 && v < vars[j - 1]) {
      vars[j] = vars[j - 1];
      --j;
      sign = -sign;
    }
    vars[j] = v;
  }
  for (std::size_t i = 1; i < vars.size(); ++i)
    if (vars[i - 1] == vars[i]) return std::nullopt;  // odd square is zero
  return sign;
}

std::optional<std::pair<Term, int>> term_mul(const Term& a, const Term& b) {
  Term out;
  out.odd = a.odd;
  // Each b-factor crosses all the a-factors it ends up left of.
  out.odd.insert(out.odd.end(), b.odd.begin(), b.odd.end());
  auto sign = normalize_odd(out.odd);
  if (!sign) return std::nullopt;

  out.even = a.even;
  for (auto& [v, p] : b.even) out.even[v] += p;

  // Merge the two sorted atom lists, adding powers of equal atoms.
  auto ia = a.atoms.begin(), ib = b.atoms.begin();
  while (ia != a.atoms.end() || ib != b.atoms.end()) {
    if (ib == b.atoms.end()) {
      out.atoms.push_back(*ia++);
    } else if (ia == a.atoms.end()) {
      out.atoms.push_back(*ib++);
    } else {
      int c = cmp(ia->first, ib->first);
      if (c < 0)
        out.atoms.push_back(*ia++);
      else if (c > 0)
        out.atoms.push_back(*ib++);
      else {
        out.atoms.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
  }
  return std::make_pair(out, *sign);
}

Expression Expression::constant(const Rational& c) {
  Expression e;
  e.add_term(Term{}, c);
  return e;
}

Expression Expression::variable(const JetVariable& v) {
  Term t;
  if (v.odd)
    t.odd.push_back(v);
  else
    t.even[v] = 1;
  Expression e;
  e.add_term(t, 1);
  return e;
}

Expression Expression::atom(AtomKind kind, const Expression& argument) {
  for (auto& [t, c] : argument.terms())
    if (t.odd_degree() != 0)
      throw ExprError("function atom argument must be parity even");
  Term t;
  t.atoms.emplace_back(FunctionAtom{kind, std::make_shared<Expression>(argument)}, 1);
  Expression e;
  e.add_term(t, 1);
  return e;
}

Expression Expression::from_term(const Term& t, const Rational& coeff) {
  Expression e;
  e.add_term(t, coeff);
  return e;
}

std::optional<Rational> Expression::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_empty())
    return terms_.begin()->second;
  return std::nullopt;
}

Rational Expression::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

void Expression::add_term(const Term& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Expression Expression::operator-() const {
  Expression out;
  for (auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

Expression& Expression::operator+=(const Expression& o) {
  for (auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& o) {
  for (auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  Expression out;
  for (auto& [ta, ca] : a.terms_)
    for (auto& [tb, cb] : b.terms_) {
      auto prod = term_mul(ta, tb);
      if (!prod) continue;
      out.add_term(prod->first, ca * cb * prod->second);
    }
  return out;
}

Expression operator*(const Rational& c, const Expression& e) {
  Expression out;
  if (c == 0) return out;
  for (auto& [t, k] : e.terms_) out.terms_.emplace(t, c * k);
  return out;
}

Expression Expression::pow(int n) const {
  if (n < 0) throw ExprError("negative exponent");
  Expression out = constant(1);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

namespace {

// d(atom)/d(argument) as an expression in the same argument.
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

Expression partial(const Expression& e, const JetVariable& v, Side side) {
  Expression out;
  for (auto& [t, c] : e.terms()) {
    if (v.odd) {
      auto it = std::find(t.odd.begin(), t.odd.end(), v);
      if (it == t.odd.end()) continue;
      auto j = static_cast<std::size_t>(it - t.odd.begin());
      std::size_t crossings = side == Side::Left ? j : t.odd.size() - 1 - j;
      Term t2 = t;
      t2.odd.erase(t2.odd.begin() + static_cast<std::ptrdiff_t>(j));
      out.add_term(t2, (crossings % 2 ? -c : c));
      continue;
    }
    auto it = t.even.find(v);
    if (it != t.even.end()) {
      Term t2 = t;
      int p = it->second;
      if (p == 1)
        t2.even.erase(v);
      else
        t2.even[v] = p - 1;
      out.add_term(t2, c * p);
    }
    // Chain rule through atom arguments (arguments are even, so the side
    // does not matter there).
    for (std::size_t ai = 0; ai < t.atoms.size(); ++ai) {
      const auto& [a, p] = t.atoms[ai];
      Expression darg = partial(*a.argument, v, side);
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

Expression restrict_diagonal(const Expression& e, const std::string& target) {
  Expression out;
  for (auto& [t, c] : e.terms()) {
    Term t2;
    t2.odd.reserve(t.odd.size());
    for (const JetVariable& v : t.odd)
      t2.odd.push_back(JetVariable{true, v.index, v.deriv.collapsed(target)});
    auto sign = normalize_odd(t2.odd);
    if (!sign) continue;
    for (auto& [v, p] : t.even)
      t2.even[JetVariable{false, v.index, v.deriv.collapsed(target)}] += p;
    std::vector<std::pair<FunctionAtom, int>> collapsed;
    for (auto& [a, p] : t.atoms) {
      Expression arg = restrict_diagonal(*a.argument, target);
      collapsed.emplace_back(FunctionAtom{a.kind, std::make_shared<Expression>(arg)}, p);
    }
    // Collapsing can make previously distinct atoms equal; re-merge.
    Term merged;
    merged.odd = std::move(t2.odd);
    merged.even = std::move(t2.even);
    for (auto& [a, p] : collapsed) {
      Term single;
      single.atoms.emplace_back(a, p);
      auto prod = term_mul(merged, single);
      merged = prod->first;  // even factors only, never zero
    }
    out.add_term(merged, c * *sign);
  }
  return out;
}

Expression relabel(const Expression& e, const std::map<std::string, std::string>& ren) {
  Expression out;
  for (auto& [t, c] : e.terms()) {
    Term t2;
    for (const JetVariable& v : t.odd)
      t2.odd.push_back(JetVariable{true, v.index, v.deriv.relabeled(ren)});
    auto sign = normalize_odd(t2.odd);
    if (!sign) throw ExprError("relabeling collided two odd variables");
    for (auto& [v, p] : t.even)
      t2.even[JetVariable{false, v.index, v.deriv.relabeled(ren)}] += p;
    for (auto& [a, p] : t.atoms) {
      Expression arg = relabel(*a.argument, ren);
      t2.atoms.emplace_back(FunctionAtom{a.kind, std::make_shared<Expression>(arg)}, p);
    }
    std::sort(t2.atoms.begin(), t2.atoms.end(),
              [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
    out.add_term(t2, c * *sign);
  }
  return out;
}

void collect_variables(const Expression& e, std::set<JetVariable>& out) {
  for (auto& [t, c] : e.terms()) {
    for (const JetVariable& v : t.odd) out.insert(v);
    for (auto& [v, p] : t.even) out.insert(v);
    for (auto& [a, p] : t.atoms) collect_variables(*a.argument, out);
  }
}

std::set<JetVariable> variables_of(const Expression& e) {
  std::set<JetVariable> out;
  collect_variables(e, out);
  return out;
}

std::set<std::string> base_labels(const Expression& e) {
  std::set<std::string> out;
  for (const JetVariable& v : variables_of(e))
    for (auto& [label, n] : v.deriv.counts) out.insert(label);
  return out;
}

std::optional<int> homogeneous_odd_degree(const Expression& e) {
  int degree = 0;
  bool first = true;
  for (auto& [t, c] : e.terms()) {
    if (first) {
      degree = t.odd_degree();
      first = false;
    } else if (t.odd_degree() != degree) {
      return std::nullopt;
    }
  }
  return degree;
}

Functional::Functional(Expression d, std::string b)
    : density(std::move(d)), base(std::move(b)) {
  auto degree = homogeneous_odd_degree(density);
  if (!degree)
    throw ExprError("functional density is not homogeneous in odd degree");
  grading_ = *degree;
}

}  // namespace varjet
