#include <random>

#include "doctest.h"
#include "varjet/dsl.hpp"
#include "varjet/expr.hpp"
#include "varjet/generate.hpp"

using namespace varjet;

namespace {

Expression E(const std::string& src) { return parse_expression(src); }

}  // namespace

TEST_CASE("odd variables anticommute and square to zero") {
  CHECK(E("qd_x*qd") == -E("qd*qd_x"));
  CHECK(E("qd*qd").is_zero());
  CHECK(E("qd_x*qd*qd_x").is_zero());
  // Three odd factors: one transposition flips the sign.
  CHECK(E("qd_x*qd*qd_xx") == -E("qd*qd_x*qd_xx"));
}

TEST_CASE("even variables commute and collect powers") {
  CHECK(E("q_x*q*q_x") == E("q*q_x^2"));
  CHECK(E("2*q + 3*q") == E("5*q"));
  CHECK((E("q") - E("q")).is_zero());
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(E("1/3*q + 1/6*q") == E("1/2*q"));
  CHECK(E("2/4") == E("1/2"));
}

TEST_CASE("atoms are opaque") {
  // No identities: sin^2 + cos^2 does not simplify.
  Expression s = E("sin(q)^2 + cos(q)^2");
  CHECK(s.term_count() == 2);
  // Equal arguments merge powers.
  CHECK(E("exp(q_x)*exp(q_x)") == E("exp(q_x)^2"));
  // Different arguments stay distinct.
  CHECK(E("exp(q)*exp(q_x)").term_count() == 1);
  CHECK_FALSE(E("exp(q)") == E("exp(q_x)"));
}

TEST_CASE("atom arguments must be parity even") {
  CHECK_THROWS_AS(Expression::atom(AtomKind::Exp, E("qd")), ExprError);
}

TEST_CASE("graded left and right partial derivatives") {
  JetVariable qd{true, 1, MultiIndex{}};
  JetVariable qdx{true, 1, MultiIndex{{{"x", 1}}}};
  Expression e = E("qd*qd_x*q");
  // qd sits first: left partial costs nothing, right partial crosses qd_x.
  CHECK(partial(e, qd, Side::Left) == E("qd_x*q"));
  CHECK(partial(e, qd, Side::Right) == -E("qd_x*q"));
  CHECK(partial(e, qdx, Side::Left) == -E("qd*q"));
  CHECK(partial(e, qdx, Side::Right) == E("qd*q"));
}

TEST_CASE("partial derivatives reach atom arguments") {
  JetVariable qx{false, 1, MultiIndex{{{"x", 1}}}};
  CHECK(partial(E("exp(q_x)"), qx, Side::Right) == E("exp(q_x)"));
  CHECK(partial(E("cos(q_x)"), qx, Side::Right) == -E("sin(q_x)"));
  CHECK(partial(E("sin(q_x)"), qx, Side::Right) == E("cos(q_x)"));
  CHECK(partial(E("exp(q_x)^2"), qx, Side::Right) == E("2*exp(q_x)^2"));
  CHECK(partial(E("q_x^3"), qx, Side::Right) == E("3*q_x^2"));
}

TEST_CASE("restrict_diagonal collapses labels and keeps orders") {
  CHECK(restrict_diagonal(E("q_y*q_z"), "x") == E("q_x^2"));
  CHECK(restrict_diagonal(E("q_{y y}*qd_z"), "x") == E("q_xx*qd_x"));
  // Two odd variables collapsing onto the same coordinate annihilate.
  CHECK(restrict_diagonal(E("qd_y*qd_z"), "x").is_zero());
  CHECK(restrict_diagonal(E("exp(q_y)"), "x") == E("exp(q_x)"));
}

TEST_CASE("relabel renames base directions") {
  CHECK(relabel(E("q_x*qd_xx"), {{"x", "y"}}) == E("q_y*qd_yy"));
  CHECK(relabel(E("cos(q_x)"), {{"x", "z"}}) == E("cos(q_z)"));
}

TEST_CASE("functionals require homogeneous odd degree") {
  CHECK_NOTHROW(Functional(E("qd*q + qd_x"), "x"));
  CHECK_THROWS_AS(Functional(E("qd*q_x + q"), "x"), ExprError);
  CHECK(Functional(E("qd*qd_x*q"), "x").grading() == 2);
  CHECK(Functional(Expression(), "x").grading() == 0);
}

TEST_CASE("graded commutativity holds for randomized expressions") {
  std::mt19937 rng(1234);
  gen::Options opt;
  for (int i = 0; i < 100; ++i) {
    int da = i % 3, db = (i / 3) % 3;
    Expression a = gen::random_density(rng, opt, da);
    Expression b = gen::random_density(rng, opt, db);
    CHECK(a * b == Rational(parity_sign(da * db)) * (b * a));
  }
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937 rng(99);
  gen::Options opt;
  for (int i = 0; i < 100; ++i) {
    Expression a = gen::random_expression(rng, opt, 2);
    Expression b = gen::random_expression(rng, opt, 2);
    Expression c = gen::random_expression(rng, opt, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
