#pragma once

#include <random>

#include "varjet/expr.hpp"

namespace varjet {
namespace gen {

// Knobs for the randomized test-case generators. Atom arguments are kept to
// a single jet variable so that differences of derived densities stay inside
// the class find_primitive can integrate.
struct Options {
  std::string base = "x";
  int max_order = 2;
  int max_terms = 3;
  int max_even_factors = 2;
  int max_power = 2;
  bool allow_atoms = true;
};

Rational random_coefficient(std::mt19937& rng);

// One monomial with exactly `odd_degree` distinct odd factors.
Expression random_monomial(std::mt19937& rng, const Options& opt, int odd_degree);

// Homogeneous density of the given odd degree (never zero).
Expression random_density(std::mt19937& rng, const Options& opt, int odd_degree);

// Possibly inhomogeneous expression with odd degrees up to `max_odd`.
Expression random_expression(std::mt19937& rng, const Options& opt, int max_odd);

Functional random_functional(std::mt19937& rng, const Options& opt, int odd_degree);

}  // namespace gen
}  // namespace varjet
