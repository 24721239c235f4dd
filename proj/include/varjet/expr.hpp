#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace varjet {

// Exact rational coefficients; no floating point anywhere in the engine.
using Rational = boost::multiprecision::cpp_rational;

class ExprError : public std::runtime_error {
 public:
  explicit ExprError(const std::string& what) : std::runtime_error(what) {}
};

// Derivative multi-index over named base labels. Absent label means order 0.
struct MultiIndex {
  std::map<std::string, int> counts;

  MultiIndex() = default;
  explicit MultiIndex(std::map<std::string, int> c);

  int order() const;
  int count(const std::string& label) const;
  bool empty() const { return counts.empty(); }

  // One more (or, with by = -1, one fewer) derivative in `label`.
  MultiIndex bumped(const std::string& label, int by = 1) const;
  // Collapse every label onto `target`, preserving the total order.
  MultiIndex collapsed(const std::string& target) const;
  MultiIndex relabeled(const std::map<std::string, std::string>& ren) const;

  auto operator<=>(const MultiIndex&) const = default;
};

// A jet coordinate: parity-even q^i or parity-odd q†_i carrying a multi-index.
struct JetVariable {
  bool odd = false;
  int index = 1;
  MultiIndex deriv;

  int parity() const { return odd ? 1 : 0; }
  JetVariable bumped(const std::string& label, int by = 1) const {
    return JetVariable{odd, index, deriv.bumped(label, by)};
  }

  auto operator<=>(const JetVariable&) const = default;
};

class Expression;

enum class AtomKind { Exp, Sin, Cos };

// Opaque transcendental factor. No identities are applied: two atoms are
// equal iff their kinds and canonical arguments are equal.
struct FunctionAtom {
  AtomKind kind = AtomKind::Exp;
  std::shared_ptr<const Expression> argument;  // canonical, parity-even
};

int cmp(const FunctionAtom& a, const FunctionAtom& b);
int cmp(const Expression& a, const Expression& b);

// Coefficient-free part of a monomial.
struct Term {
  std::vector<JetVariable> odd;                    // strictly increasing
  std::map<JetVariable, int> even;                 // variable -> power >= 1
  std::vector<std::pair<FunctionAtom, int>> atoms; // sorted, power >= 1

  int odd_degree() const { return static_cast<int>(odd.size()); }
  int parity() const { return odd_degree() % 2; }
  bool is_empty() const { return odd.empty() && even.empty() && atoms.empty(); }
};

int cmp(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return cmp(a, b) < 0; }
};

// Sort an odd-factor list, returning the transposition sign, or nullopt when
// a repeated odd variable forces the product to zero.
std::optional<int> normalize_odd(std::vector<JetVariable>& vars);

// Graded product of two coefficient-free parts: nullopt means zero.
std::optional<std::pair<Term, int>> term_mul(const Term& a, const Term& b);

enum class Side { Left, Right };

// Canonical sum of graded monomials with exact rational coefficients.
class Expression {
 public:
  using TermMap = std::map<Term, Rational, TermLess>;

  Expression() = default;

  static Expression constant(const Rational& c);
  static Expression variable(const JetVariable& v);
  // Throws ExprError when the argument contains an odd variable.
  static Expression atom(AtomKind kind, const Expression& argument);
  static Expression from_term(const Term& t, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Returns the rational value when the expression is a plain constant.
  std::optional<Rational> as_constant() const;
  // Coefficient of the leading (smallest) term; 0 for the zero expression.
  Rational leading_coefficient() const;

  void add_term(const Term& t, const Rational& c);

  Expression operator-() const;
  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator*(const Rational& c, const Expression& e);
  Expression pow(int n) const;  // n >= 0

  friend bool operator==(const Expression& a, const Expression& b) {
    return cmp(a, b) == 0;
  }

 private:
  TermMap terms_;
};

// Graded partial derivative with respect to the jet coordinate v.
Expression partial(const Expression& e, const JetVariable& v, Side side);

// Collapse every multi-index onto `target`, preserving total orders.
Expression restrict_diagonal(const Expression& e, const std::string& target);

// Rename base labels (applied to jet variables and atom arguments alike).
Expression relabel(const Expression& e, const std::map<std::string, std::string>& ren);

// All jet variables occurring anywhere, including inside atom arguments.
void collect_variables(const Expression& e, std::set<JetVariable>& out);
std::set<JetVariable> variables_of(const Expression& e);
std::set<std::string> base_labels(const Expression& e);

// Common odd degree of every monomial; nullopt when inhomogeneous. Zero
// expression reports degree 0.
std::optional<int> homogeneous_odd_degree(const Expression& e);

// A density together with its integration base label.
struct Functional {
  Expression density;
  std::string base;

  Functional() : base("x") {}
  // Throws ExprError when the density is not homogeneously graded.
  Functional(Expression d, std::string b);

  int grading() const { return grading_; }
  bool is_zero() const { return density.is_zero(); }

 private:
  int grading_ = 0;
};

inline int parity_sign(int exponent) {
  return (((exponent % 2) + 2) % 2) ? -1 : 1;
}

}  // namespace varjet
