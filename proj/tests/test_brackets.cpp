#include <random>

#include "doctest.h"
#include "varjet/brackets.hpp"
#include "varjet/dsl.hpp"
#include "varjet/generate.hpp"

using namespace varjet;

namespace {

Expression E(const std::string& src) { return parse_expression(src); }
Functional F(const std::string& src) { return parse_functional(src); }

}  // namespace

TEST_CASE("bracket of one-vectors built by hand") {
  // A = int q qd dx, B = int q_x qd dx. dA/dq = qd, dA/dqd = q,
  // dB/dq = -qd_x, dB/dqd = q_x, so [[A,B]] = qd q_x + q qd_x = D_x(q qd).
  Functional A = F("int q*qd dx");
  Functional B = F("int q_x*qd dx");
  Expression expected = E("qd*q_x + q*qd_x");
  CHECK(schouten_old(A, B).density == expected);
  CHECK(is_exact(expected, "x").is_trivial);
}

TEST_CASE("bracket output lives over the base of the second argument") {
  Functional A = F("int q*qd dx");
  Functional B = F("int q_y*qd dy");
  CHECK(schouten_old(A, B).base == "y");
}

TEST_CASE("bracket grading adds up") {
  Functional A = F("int qd*q_x dx");          // |A| = 1
  Functional B = F("int qd*qd_x*q dx");       // |B| = 2
  CHECK(schouten_old(A, B).grading() == 2);   // |A| + |B| - 1
}

TEST_CASE("naive laplacian on hand-checked densities") {
  // Delta(int q qd dx): d/dqd -> q, then d/dq -> 1.
  CHECK(bv_laplacian(F("int q*qd dx")).density == E("1"));
  // Delta(int q q_xx qd dx) = 2 q_xx, exact but nonzero.
  Functional d = bv_laplacian(F("int qd*q*q_xx dx"));
  CHECK(d.density == E("2*q_xx"));
  CHECK(is_exact(d.density, "x").is_trivial);
}

TEST_CASE("laplacian lowers the grading by one") {
  Functional B = F("int qd*qd_x*q*q_x dx");
  CHECK(bv_laplacian(B).grading() == 1);
}

TEST_CASE("delta squared of a hand-checked degree-2 functional") {
  // Worked by hand: the first pass leaves qd_xx*q, whose second pass gives
  // the density q_xx with vanishing Euler derivative, so the square is zero.
  Functional B = F("int qd*qd_x*q*q_x dx");
  CHECK(bv_laplacian(B).density == E("qd_xx*q"));
  IdentityReport report = delta_squared(B);
  CHECK(report.rhs.is_zero());
  CHECK(report.lhs.is_zero());
  CHECK(report.exactly_equal);
}

TEST_CASE("evolutionary commutator matches the bracket of one-vectors") {
  IdentityReport report = evolutionary_commutator(E("q"), E("q_x"), "x");
  // Scaling and translation commute; both sides are exact.
  CHECK(report.rhs.is_zero());
  CHECK(report.cohomologically_equal);

  report = evolutionary_commutator(E("q^2"), E("q_x"), "x");
  CHECK(report.cohomologically_equal);

  std::mt19937 rng(23);
  gen::Options opt;
  opt.allow_atoms = false;
  for (int i = 0; i < 30; ++i) {
    Expression X = gen::random_density(rng, opt, 0);
    Expression Y = gen::random_density(rng, opt, 0);
    CHECK(evolutionary_commutator(X, Y, "x").cohomologically_equal);
  }
}

TEST_CASE("evolutionary commutator rejects odd characteristics") {
  CHECK_THROWS_AS(evolutionary_commutator(E("qd"), E("q"), "x"), ExprError);
}

TEST_CASE("jacobiator gradings and multibase relabeling") {
  Functional f = F("int qd*q*q_xx dx");
  Functional g = F("int qd_x*exp(q_x) dx");
  Functional h = F("int qd_xx*cos(q) dx");
  Functional Jm = jacobiator(f, g, h, JacobiMode::MultiBase);
  CHECK(Jm.base == "z");
  CHECK(Jm.grading() == 1);
  // Multibase mode must not restrict: three labels appear.
  CHECK(base_labels(Jm.density).size() == 3);
}

TEST_CASE("multi-field bracket sums over field indices") {
  // Two independent fields; the bracket couples each field with its own
  // conjugate only.
  Functional A = F("int q*qd + q2*qd2 dx");
  Functional B = F("int q_x*qd + q2_x*qd2 dx");
  Expression expected = E("qd*q_x + q*qd_x + qd2*q2_x + q2*qd2_x");
  CHECK(schouten_old(A, B).density == expected);
}
