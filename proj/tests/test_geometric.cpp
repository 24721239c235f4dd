#include <random>

#include "doctest.h"
#include "varjet/brackets.hpp"
#include "varjet/dsl.hpp"
#include "varjet/generate.hpp"
#include "varjet/geometric.hpp"

using namespace varjet;

namespace {

Expression E(const std::string& src) { return parse_expression(src); }
Functional F(const std::string& src) { return parse_functional(src); }

}  // namespace

TEST_CASE("lift wraps a density as a single composite term") {
  CompositeExpression c = lift(F("int qd*q dx"));
  REQUIRE(c.term_count() == 1);
  CHECK(c.terms[0].scalar == 1);
  REQUIRE(c.terms[0].factors.size() == 1);
  CHECK(c.terms[0].factors[0].core == E("qd*q"));
  CHECK(c.terms[0].factors[0].records.empty());
  CHECK(lift(Functional(Expression(), "x")).empty());
}

TEST_CASE("geometric bracket of the exp and cos one-vectors") {
  // Worked by hand: two terms, with the total derivatives deferred.
  Functional G = F("int qd_x*exp(q_x) dx");
  Functional H = F("int qd_xx*cos(q) dx");
  CompositeExpression raw = geometric_bracket(lift(G), lift(H));
  REQUIRE(raw.term_count() == 2);
  CompositeExpression c = canonicalize_composite(raw);
  REQUIRE(c.term_count() == 2);
  for (const CompositeTerm& t : c.terms) {
    REQUIRE(t.factors.size() == 2);
    CHECK(t.scalar == 1);  // monic cores absorb the subtrahend's signs
  }
  // Expected factor cores after monic normalization, with the deferred
  // operators still attached to the exp factors.
  auto has_cores = [&](const CompositeTerm& t, const Expression& a,
                       const Expression& b) {
    return (t.factors[0].core == a && t.factors[1].core == b) ||
           (t.factors[0].core == b && t.factors[1].core == a);
  };
  bool found_exp_cos = false, found_exp_sin = false;
  for (const CompositeTerm& t : c.terms) {
    if (has_cores(t, E("exp(q_x)"), E("qd_xx*sin(q)"))) found_exp_sin = true;
    if (has_cores(t, E("qd_x*exp(q_x)"), E("cos(q)"))) found_exp_cos = true;
  }
  CHECK(found_exp_cos);
  CHECK(found_exp_sin);
}

TEST_CASE("terminal evaluation reproduces the classical bracket") {
  Functional f = F("int qd*q*q_xx dx");
  Functional g = F("int qd_x*exp(q_x) dx");
  Functional h = F("int qd_xx*cos(q) dx");
  for (auto [a, b] : {std::pair{f, g}, {g, h}, {f, h}}) {
    Expression via_geometric = evaluate_terminal(geometric_bracket(lift(a), lift(b)), "x");
    CHECK(via_geometric == schouten_old(a, b).density);
  }
}

TEST_CASE("terminal evaluation agrees on randomized pairs") {
  std::mt19937 rng(31);
  gen::Options opt;
  for (int i = 0; i < 50; ++i) {
    Functional A = gen::random_functional(rng, opt, 1);
    Functional B = gen::random_functional(rng, opt, 1);
    Expression via_geometric =
        evaluate_terminal(geometric_bracket(lift(A), lift(B)), "x");
    CHECK(via_geometric == schouten_old(A, B).density);
  }
}

TEST_CASE("canonicalization merges terms equal up to shift relabeling") {
  Functional f = F("int qd*q*q_xx dx");
  Functional g = F("int qd_x*exp(q_x) dx");
  Functional h = F("int qd_xx*cos(q) dx");
  GeometricJacobiReport report = jacobiator_geometric(f, g, h);
  CHECK(report.lhs_raw_terms == 8);
  CHECK(report.rhs_raw_terms == 20);
  CHECK(report.rhs_merged_terms == 14);
  CHECK(report.rhs.term_count() == 8);
  CHECK(report.empty);
  // The two sides are the same composite, term by term.
  CHECK(render_text(report.lhs) == render_text(report.rhs));
}

TEST_CASE("geometric jacobiator is empty for randomized triples") {
  std::mt19937 rng(37);
  gen::Options opt;
  opt.max_terms = 2;
  for (int i = 0; i < 25; ++i) {
    Functional A = gen::random_functional(rng, opt, 1);
    Functional B = gen::random_functional(rng, opt, 1);
    Functional C = gen::random_functional(rng, opt, 1);
    CHECK(jacobiator_geometric(A, B, C).empty);
  }
}
