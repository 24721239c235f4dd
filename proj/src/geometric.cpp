#include "varjet/geometric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "varjet/calculus.hpp"

namespace varjet {

CompositeExpression composite_add(const CompositeExpression& a,
                                  const CompositeExpression& b) {
  CompositeExpression out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

CompositeExpression composite_scale(const Rational& c, const CompositeExpression& e) {
  CompositeExpression out;
  if (c == 0) return out;
  out = e;
  for (CompositeTerm& t : out.terms) t.scalar *= c;
  return out;
}

CompositeExpression lift(const Functional& F) {
  CompositeExpression out;
  if (F.is_zero()) return out;
  CompositeTerm t;
  t.factors.push_back(DeferredFactor{F.density, {}});
  out.terms.push_back(std::move(t));
  return out;
}

namespace {

int max_level(const CompositeExpression& e) {
  int level = 0;
  for (const CompositeTerm& t : e.terms)
    for (const DeferredFactor& f : t.factors)
      for (const DeferredRecord& r : f.records) level = std::max(level, r.label.level);
  return level;
}

int factor_parity(const DeferredFactor& f) {
  auto d = homogeneous_odd_degree(f.core);
  if (!d) throw ExprError("composite factor core is not homogeneous");
  return *d % 2;
}

// Sign collected by an odd derivation reaching `target` inside the factor
// list: a left derivative crosses the factors before it, a right derivative
// the factors after it.
int pass_sign(const std::vector<DeferredFactor>& factors, std::size_t target,
              Side side) {
  int crossed = 0;
  if (side == Side::Left) {
    for (std::size_t l = 0; l < target; ++l) crossed += factor_parity(factors[l]);
  } else {
    for (std::size_t l = target + 1; l < factors.size(); ++l)
      crossed += factor_parity(factors[l]);
  }
  return parity_sign(crossed);
}

struct PairingHalf {
  std::size_t factor;
  JetVariable var;
  Expression derivative;
  int sign;
};

// Every way of differentiating one factor core of `t` by one jet variable of
// the requested parity, together with the graded sign of reaching it.
std::vector<PairingHalf> pairing_halves(const CompositeTerm& t, bool odd, Side side) {
  std::vector<PairingHalf> out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    for (const JetVariable& v : variables_of(t.factors[i].core)) {
      if (v.odd != odd) continue;
      Expression d = partial(t.factors[i].core, v, side);
      if (d.is_zero()) continue;
      int sign = odd ? pass_sign(t.factors, i, side) : 1;
      out.push_back(PairingHalf{i, v, std::move(d), sign});
    }
  }
  return out;
}

DeferredFactor with_record(const DeferredFactor& f, Expression core,
                           const MultiIndex& sigma, const ShiftLabel& label) {
  DeferredFactor out;
  out.core = std::move(core);
  out.records = f.records;
  int order = sigma.order();
  if (order > 0)
    out.records.push_back(DeferredRecord{parity_sign(order), order, label});
  return out;
}

}  // namespace

CompositeExpression geometric_bracket(const CompositeExpression& A,
                                      const CompositeExpression& B) {
  int level = std::max(max_level(A), max_level(B)) + 1;
  ShiftLabel ylabel{'y', level}, zlabel{'z', level};

  CompositeExpression out;
  for (const CompositeTerm& ta : A.terms) {
    for (const CompositeTerm& tb : B.terms) {
      // mode 0: q on the first argument against q+ on the second (plus);
      // mode 1: q+ against q (minus).
      for (int mode = 0; mode < 2; ++mode) {
        int mode_sign = mode == 0 ? 1 : -1;
        auto lefts = pairing_halves(ta, /*odd=*/mode == 1, Side::Left);
        auto rights = pairing_halves(tb, /*odd=*/mode == 0, Side::Right);
        for (const PairingHalf& lh : lefts) {
          for (const PairingHalf& rh : rights) {
            if (lh.var.index != rh.var.index) continue;  // diagonal couplings
            CompositeTerm t;
            t.scalar = ta.scalar * tb.scalar * mode_sign * lh.sign * rh.sign;
            t.factors.reserve(ta.factors.size() + tb.factors.size());
            for (std::size_t i = 0; i < ta.factors.size(); ++i) {
              if (i == lh.factor)
                t.factors.push_back(
                    with_record(ta.factors[i], lh.derivative, lh.var.deriv, ylabel));
              else
                t.factors.push_back(ta.factors[i]);
            }
            for (std::size_t j = 0; j < tb.factors.size(); ++j) {
              if (j == rh.factor)
                t.factors.push_back(
                    with_record(tb.factors[j], rh.derivative, rh.var.deriv, zlabel));
              else
                t.factors.push_back(tb.factors[j]);
            }
            out.terms.push_back(std::move(t));
          }
        }
      }
    }
  }
  return out;
}

namespace {

// Side-erased record: shift directions are pairwise interchangeable test
// shifts, so only the nesting class, order and sign distinguish them.
struct CanonRecord {
  int level;
  int order;
  int sign;
  auto operator<=>(const CanonRecord&) const = default;
};

struct CanonFactor {
  Expression core;
  std::vector<CanonRecord> records;
  int parity = 0;
};

int cmp(const CanonFactor& a, const CanonFactor& b) {
  if (int c = varjet::cmp(a.core, b.core)) return c;
  if (a.records < b.records) return -1;
  if (b.records < a.records) return 1;
  return 0;
}

using Signature = std::vector<CanonFactor>;

int cmp(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = cmp(a[i], b[i])) return c;
  return 0;
}

struct SignatureLess {
  bool operator()(const Signature& a, const Signature& b) const {
    return cmp(a, b) < 0;
  }
};

// Stable insertion sort with graded transposition signs; nullopt when two
// identical odd factors make the term vanish.
std::optional<int> sort_factors(Signature& factors) {
  int sign = 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    CanonFactor f = factors[i];
    std::size_t j = i;
    while (j > 0 && cmp(f, factors[j - 1]) < 0) {
      if (f.parity && factors[j - 1].parity) sign = -sign;
      factors[j] = std::move(factors[j - 1]);
      --j;
    }
    factors[j] = std::move(f);
  }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i - 1].parity && factors[i].parity &&
        cmp(factors[i - 1], factors[i]) == 0)
      return std::nullopt;
  return sign;
}

}  // namespace

CompositeExpression canonicalize_composite(const CompositeExpression& e,
                                           std::size_t* merged_count) {
  std::map<Signature, Rational, SignatureLess> classes;
  for (const CompositeTerm& t : e.terms) {
    Rational scalar = t.scalar;
    Signature base;
    base.reserve(t.factors.size());
    bool zero = scalar == 0;
    std::set<int> levels;
    for (const DeferredFactor& f : t.factors) {
      if (f.core.is_zero()) {
        zero = true;
        break;
      }
      CanonFactor cf;
      Rational lead = f.core.leading_coefficient();
      scalar *= lead;
      cf.core = (Rational(1) / lead) * f.core;
      cf.parity = factor_parity(f);
      for (const DeferredRecord& r : f.records) {
        cf.records.push_back(CanonRecord{r.label.level, r.order, r.sign});
        levels.insert(r.label.level);
      }
      base.push_back(std::move(cf));
    }
    if (zero) continue;

    // Minimize over all reassignments of the nesting classes to 1..m; a
    // minimal signature reachable with both swap signs means the term is
    // antisymmetric under a relabeling and therefore vanishes.
    std::vector<int> order(levels.begin(), levels.end());
    std::vector<int> target(order.size());
    std::iota(target.begin(), target.end(), 1);
    std::optional<Signature> best;
    int best_sign = 1;
    bool ambivalent = false;
    do {
      Signature cand = base;
      for (CanonFactor& cf : cand) {
        for (CanonRecord& r : cf.records) {
          auto it = std::find(order.begin(), order.end(), r.level);
          r.level = target[static_cast<std::size_t>(it - order.begin())];
        }
        std::sort(cf.records.begin(), cf.records.end());
      }
      auto sign = sort_factors(cand);
      if (!sign) {
        best.reset();
        ambivalent = false;
        break;  // zero term regardless of relabeling
      }
      if (!best || cmp(cand, *best) < 0) {
        best = std::move(cand);
        best_sign = *sign;
        ambivalent = false;
      } else if (cmp(cand, *best) == 0 && *sign != best_sign) {
        ambivalent = true;
      }
    } while (std::next_permutation(target.begin(), target.end()));

    if (!best || ambivalent) continue;
    Rational& acc = classes[*best];
    acc += scalar * best_sign;
  }

  if (merged_count) *merged_count = classes.size();

  CompositeExpression out;
  for (auto& [sig, scalar] : classes) {
    if (scalar == 0) continue;
    CompositeTerm t;
    t.scalar = scalar;
    for (const CanonFactor& cf : sig) {
      DeferredFactor f;
      f.core = cf.core;
      for (const CanonRecord& r : cf.records)
        f.records.push_back(DeferredRecord{r.sign, r.order, ShiftLabel{'y', r.level}});
      t.factors.push_back(std::move(f));
    }
    out.terms.push_back(std::move(t));
  }
  return out;
}

GeometricJacobiReport jacobiator_geometric(const Functional& F, const Functional& G,
                                           const Functional& H) {
  CompositeExpression f = lift(F), g = lift(G), h = lift(H);
  CompositeExpression lhs_raw = geometric_bracket(f, geometric_bracket(g, h));
  CompositeExpression rhs1 = geometric_bracket(geometric_bracket(f, g), h);
  int s = parity_sign((F.grading() - 1) * (G.grading() - 1));
  CompositeExpression rhs2 = geometric_bracket(g, geometric_bracket(f, h));
  CompositeExpression rhs_raw = composite_add(rhs1, composite_scale(s, rhs2));

  GeometricJacobiReport report;
  report.lhs_raw_terms = lhs_raw.term_count();
  report.rhs_raw_terms = rhs_raw.term_count();
  report.lhs = canonicalize_composite(lhs_raw);
  report.rhs = canonicalize_composite(rhs_raw, &report.rhs_merged_terms);
  report.residual = canonicalize_composite(
      composite_add(lhs_raw, composite_scale(-1, rhs_raw)));
  report.empty = report.residual.empty();
  return report;
}

Expression evaluate_terminal(const CompositeExpression& e, const std::string& target) {
  Expression total;
  for (const CompositeTerm& t : e.terms) {
    Expression acc = Expression::constant(t.scalar);
    for (const DeferredFactor& f : t.factors) {
      Expression val = restrict_diagonal(f.core, target);
      for (const DeferredRecord& r : f.records) {
        for (int k = 0; k < r.order; ++k) val = total_derivative(val, target);
        if (r.sign < 0) val = -val;
      }
      acc = acc * val;
    }
    total += acc;
  }
  return total;
}

}  // namespace varjet
