#include <random>

#include "doctest.h"
#include "varjet/cohomology.hpp"
#include "varjet/dsl.hpp"
#include "varjet/generate.hpp"

using namespace varjet;

namespace {

Expression E(const std::string& src) { return parse_expression(src); }

}  // namespace

TEST_CASE("find_primitive inverts simple total derivatives") {
  CHECK(find_primitive(E("q_x"), "x") == E("q"));
  CHECK(find_primitive(E("2*q*q_x"), "x") == E("q^2"));
  CHECK(find_primitive(E("q_xx*exp(q_x)"), "x") == E("exp(q_x)"));
  CHECK(find_primitive(E("-q_x*sin(q)"), "x") == E("cos(q)"));
  CHECK(find_primitive(Expression(), "x").is_zero());
}

TEST_CASE("find_primitive handles odd densities") {
  Expression d = total_derivative(E("qd*q"), "x");
  Expression p = find_primitive(d, "x");
  CHECK(total_derivative(p, "x") == d);
  d = total_derivative(E("qd*qd_x*q_x"), "x");
  p = find_primitive(d, "x");
  CHECK(total_derivative(p, "x") == d);
}

TEST_CASE("find_primitive integrates polynomial-times-atom coefficients") {
  // D(q * exp(q)) = q_x exp(q) + q q_x exp(q): coefficient of q_x is (1+q)exp(q).
  Expression d = total_derivative(E("q*exp(q)"), "x");
  CHECK(total_derivative(find_primitive(d, "x"), "x") == d);
  d = total_derivative(E("q^2*sin(q)"), "x");
  CHECK(total_derivative(find_primitive(d, "x"), "x") == d);
  d = total_derivative(E("q_x*cos(q_x)"), "x");
  CHECK(total_derivative(find_primitive(d, "x"), "x") == d);
  d = total_derivative(E("exp(q_x)^2*q"), "x");
  CHECK(total_derivative(find_primitive(d, "x"), "x") == d);
}

TEST_CASE("find_primitive rejects non-exact densities") {
  CHECK_THROWS_AS(find_primitive(E("q"), "x"), NotExactError);
  CHECK_THROWS_AS(find_primitive(E("1"), "x"), NotExactError);
  CHECK_THROWS_AS(find_primitive(E("q_x^2"), "x"), NotExactError);
  CHECK_THROWS_AS(find_primitive(E("qd_x*q_x"), "x"), ExprError);
}

TEST_CASE("is_exact verdicts") {
  CHECK(is_exact(E("q_x"), "x").is_trivial);
  CHECK(is_exact(total_derivative(E("q*q_x*exp(q)"), "x"), "x").is_trivial);
  CHECK_FALSE(is_exact(E("q_x^2"), "x").is_trivial);
  // A nonzero constant term blocks exactness even with vanishing Eulers.
  TrivialityReport with_const = is_exact(E("q_x + 3"), "x");
  CHECK_FALSE(with_const.is_trivial);
  CHECK(with_const.constant_part == 3);
  CHECK(with_const.eulers.all_zero());
}

TEST_CASE("is_exact requires a single base label") {
  CHECK_THROWS_AS(is_exact(E("q_y"), "x"), ExprError);
}

TEST_CASE("primitive round-trip on randomized densities") {
  std::mt19937 rng(17);
  gen::Options opt;
  for (int i = 0; i < 100; ++i) {
    Expression eta = gen::random_expression(rng, opt, 2);
    Expression d = total_derivative(eta, "x");
    Expression p = find_primitive(d, "x");
    CHECK(total_derivative(p, "x") == d);
  }
}

TEST_CASE("cohomologous detects equality modulo exact terms") {
  CHECK(cohomologous(E("q*q_x"), E("q*q_x + q_xx*exp(q_x)"), "x"));
  CHECK_FALSE(cohomologous(E("q*q_x"), E("q^2"), "x"));
}
