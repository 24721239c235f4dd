#include <random>

#include "doctest.h"
#include "varjet/dsl.hpp"
#include "varjet/generate.hpp"

using namespace varjet;

TEST_CASE("parser handles the documented forms") {
  CHECK(parse_expression("qd*q*q_xx").term_count() == 1);
  CHECK(parse_expression("q_{y1 y1}") == parse_expression("q_y1y1"));
  CHECK(parse_expression("3/2*q^2") == Rational(3, 2) * parse_expression("q*q"));
  CHECK(parse_expression("q - q").is_zero());
  CHECK(parse_expression("-(q + q_x)") == -parse_expression("q + q_x"));
  CHECK(parse_expression("qd2_xy").term_count() == 1);
  Functional F = parse_functional("int qd_x*exp(q_x) dx");
  CHECK(F.base == "x");
  CHECK(F.grading() == 1);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expression("q +\n* q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
  CHECK_THROWS_AS(parse_expression("exp(qd)"), ParseError);
  CHECK_THROWS_AS(parse_functional("int q dx extra"), ParseError);
  CHECK_THROWS_AS(parse_functional("q_x"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
}

TEST_CASE("text rendering round-trips") {
  for (const char* src :
       {"0", "qd*q*q_xx", "q_xx*exp(q_x)", "-2*q + 1/2*q_x^2", "cos(q)^3",
        "q_xy*qd_z", "5"}) {
    Expression e = parse_expression(src);
    CHECK(parse_expression(render_text(e)) == e);
  }
}

TEST_CASE("randomized round-trip through the text renderer") {
  std::mt19937 rng(41);
  gen::Options opt;
  opt.max_terms = 4;
  for (int i = 0; i < 200; ++i) {
    Expression e = gen::random_expression(rng, opt, 2);
    CHECK(parse_expression(render_text(e)) == e);
  }
}

TEST_CASE("structured rendering is schema-tagged and lossless enough to diff") {
  Expression e = parse_expression("1/2*qd_x*q^2*exp(q_x)");
  nlohmann::json doc = render_structured(e);
  CHECK(doc["schema"] == "varjet/expression@1");
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["coefficient"]["numerator"] == "1");
  CHECK(doc["terms"][0]["coefficient"]["denominator"] == "2");
  CHECK(doc["terms"][0]["odd"].size() == 1);
  CHECK(doc["terms"][0]["atoms"][0]["kind"] == "exp");
}

TEST_CASE("latex rendering mentions the expected pieces") {
  std::string tex = render_latex(parse_functional("int qd_xx*cos(q) dx"));
  CHECK(tex.find("\\int") != std::string::npos);
  CHECK(tex.find("\\dagger") != std::string::npos);
  CHECK(tex.find("\\cos") != std::string::npos);
}
