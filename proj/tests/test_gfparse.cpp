#include <doctest.h>

#include "lclt/errors.hpp"
#include "lclt/gfparse.hpp"

using namespace lclt;

namespace {

MultiPoly var(const std::string& v) { return MultiPoly::variable(v); }
MultiPoly one() { return MultiPoly::constant(1); }

ErrorCode code_of(const std::string& text) {
  try {
    parse_gf(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("parse permutations") {
  RationalGF gf = parse_gf("1/(1 - z1*t - z2*t^2)");
  CHECK(gf.G == one());
  CHECK(gf.H == one() - var("z1") * var("t") - var("z2") * var("t").pow(2));
  CHECK(gf.d() == 2);
  CHECK(gf.tracked == std::vector<std::string>{"z1", "z2"});
}

TEST_CASE("parse clears the inner denominator") {
  RationalGF gf = parse_gf("1/(1 - z1*t - t^2/(1-t))");
  MultiPoly t = var("t"), z = var("z1");
  CHECK(gf.G == one() - t);
  CHECK(gf.H == one() - t - z * t + z * t.pow(2) - t.pow(2));
  CHECK(gf.d() == 1);
  CHECK(gf.combinatorial);
}

TEST_CASE("geometric series") {
  RationalGF gf = parse_gf("1/(1-t)");
  CHECK(gf.G == one());
  CHECK(gf.H == one() - var("t"));
  CHECK(gf.d() == 0);
}

TEST_CASE("parse errors") {
  CHECK(code_of("1/(1 - x*t)") == ErrorCode::NonRational);
  CHECK(code_of("exp(t)") == ErrorCode::NonRational);
  CHECK(code_of("1/(1 - t^(1/2))") == ErrorCode::NonRational);
  CHECK(code_of("1/(1 - 0.5*t)") == ErrorCode::SyntaxError);
  CHECK(code_of("1/(1 - t") == ErrorCode::SyntaxError);
  CHECK(code_of("1/t") == ErrorCode::ZeroDenominatorAtOrigin);
  CHECK(code_of("1/(1 - t)/0") == ErrorCode::DivisionByZero);
  CHECK(code_of("0/(1 - t)") == ErrorCode::InvalidGeneratingFunction);
  CHECK(code_of("1/(2)") == ErrorCode::InvalidGeneratingFunction);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_gf("1/(1 - t $ 2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("normalization scales H(0) to 1") {
  RationalGF gf = parse_gf("3/(2 - 4*t)");
  CHECK(gf.H.constant_term() == 1);
  CHECK(gf.G == MultiPoly::constant(Rational(3, 2)));
}

TEST_CASE("round trip") {
  for (const char* text : {"1/(1 - z1*t - z2*t^2)", "1/(1 - z1*t - t^2/(1-t))", "(1 + z1*t)/(1 - 3/2*t + z1*z2*t^3)",
                           "1/(1 - z1*t - 2*z2*t^2 - 2*t^3/(1-t) - t^3/(1-t)^2)"}) {
    RationalGF a = parse_gf(text);
    RationalGF b = parse_gf(a.to_string());
    CHECK(a.G == b.G);
    CHECK(a.H == b.H);
    CHECK(a.tracked == b.tracked);
  }
}

TEST_CASE("linear family detection") {
  SUBCASE("q vanishes") {
    auto lf = detect_linear_family(parse_gf("1/(1 - z1*t - z2*t^2)"));
    REQUIRE(lf);
    CHECK(lf->q_vanishes);
    CHECK(lf->q.num.is_zero());
    REQUIRE(lf->q_list.size() == 2);
    CHECK(lf->q_list[0].num == UniPoly(std::vector<Rational>{0, 1}));
    CHECK(lf->q_list[1].num == UniPoly(std::vector<Rational>{0, 0, 1}));
  }
  SUBCASE("cleared compositions") {
    auto lf = detect_linear_family(make_gf(one(), one() - var("t") - var("z1") * var("t") +
                                                      var("z1") * var("t").pow(2) - var("t").pow(2)));
    REQUIRE(lf);
    CHECK(lf->q.num == UniPoly(std::vector<Rational>{0, 1, 1}));
    CHECK(lf->q_list[0].num == UniPoly(std::vector<Rational>{0, 1, -1}));
  }
  SUBCASE("cross term") { CHECK_FALSE(detect_linear_family(parse_gf("1/(1 - z1*z2*t)"))); }
  SUBCASE("series route keeps the rational q") {
    RationalGF gf = parse_gf("1/(1 - z1*t - t^2/(1-t))");
    REQUIRE(gf.linear_family);
    CHECK(gf.linear_family->from_series);
    CHECK(gf.linear_family->q.den == UniPoly(std::vector<Rational>{1, -1}));
  }
}

TEST_CASE("combinatorial inference") {
  CHECK(parse_gf("1/(1 - z1*t - t^2)").combinatorial);
  CHECK_FALSE(parse_gf("1/(1 - 2*t + z1*t^2)").combinatorial);
  CHECK(parse_gf("1/(1 - z1*t - t^2)").S.has_value());
}
