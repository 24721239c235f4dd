#include "varjet/generate.hpp"

#include <algorithm>
#include <numeric>

namespace varjet {
namespace gen {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

JetVariable jet(const Options& opt, bool odd, int order) {
  MultiIndex mi;
  if (order > 0) mi.counts[opt.base] = order;
  return JetVariable{odd, 1, mi};
}

}  // namespace

Rational random_coefficient(std::mt19937& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -4, 4);
  int den = uniform(rng, 0, 3) == 0 ? 2 : 1;
  return Rational(num, den);
}

Expression random_monomial(std::mt19937& rng, const Options& opt, int odd_degree) {
  Expression acc = Expression::constant(random_coefficient(rng));

  // Distinct orders keep the odd factors from squaring to zero.
  std::vector<int> orders(static_cast<std::size_t>(opt.max_order) + 1);
  std::iota(orders.begin(), orders.end(), 0);
  std::shuffle(orders.begin(), orders.end(), rng);
  for (int i = 0; i < odd_degree; ++i)
    acc = acc * Expression::variable(jet(opt, true, orders[static_cast<std::size_t>(i)]));

  int factors = uniform(rng, odd_degree > 0 ? 0 : 1, opt.max_even_factors);
  for (int i = 0; i < factors; ++i) {
    Expression v = Expression::variable(jet(opt, false, uniform(rng, 0, opt.max_order)));
    acc = acc * v.pow(uniform(rng, 1, opt.max_power));
  }
  if (opt.allow_atoms && uniform(rng, 0, 2) == 0) {
    AtomKind kind = static_cast<AtomKind>(uniform(rng, 0, 2));
    Expression arg = Expression::variable(
        jet(opt, false, uniform(rng, 0, std::max(0, opt.max_order - 1))));
    acc = acc * Expression::atom(kind, arg);
  }
  return acc;
}

Expression random_density(std::mt19937& rng, const Options& opt, int odd_degree) {
  Expression acc;
  while (acc.is_zero()) {
    int terms = uniform(rng, 1, opt.max_terms);
    for (int i = 0; i < terms; ++i) acc += random_monomial(rng, opt, odd_degree);
  }
  return acc;
}

Expression random_expression(std::mt19937& rng, const Options& opt, int max_odd) {
  Expression acc;
  int terms = uniform(rng, 1, opt.max_terms);
  for (int i = 0; i < terms; ++i)
    acc += random_monomial(rng, opt, uniform(rng, 0, max_odd));
  return acc;
}

Functional random_functional(std::mt19937& rng, const Options& opt, int odd_degree) {
  return Functional(random_density(rng, opt, odd_degree), opt.base);
}

}  // namespace gen
}  // namespace varjet
