#include <doctest.h>

#include <cmath>

#include "lclt/errors.hpp"
#include "support.hpp"

using namespace lclt;
using lclt::testing::mid;
using lclt::testing::spec;

namespace {

Rational exact(const AlgebraicReal& x) {
  REQUIRE(x.is_rational());
  return x.rational_value();
}

}  // namespace

TEST_CASE("critical direction") {
  auto comp = assemble_certificate(build_example(spec("compositions")));
  CHECK(exact(comp.m[0]) == Rational(1, 4));

  ExampleSpec s = spec("strings");
  s.l = 2;
  auto str = assemble_certificate(build_example(s));
  CHECK(exact(str.m[0]) == Rational(1, 2));

  auto tutte = assemble_certificate(build_example(spec("tutte_wheel")));
  double m = 0.5 - 1 / (2 * std::sqrt(5.0));
  CHECK(mid(tutte.m[0]) == doctest::Approx(m).epsilon(1e-12));
  CHECK(mid(tutte.m[1]) == doctest::Approx(m).epsilon(1e-12));
}

TEST_CASE("phase hessian") {
  ExampleSpec s = spec("strings");
  auto str = assemble_certificate(build_example(s));
  CHECK(exact(str.hessian(0, 0)) == Rational(1, 4));

  auto comp2 = assemble_certificate(build_example(spec("compositions", 2)));
  CHECK(exact(comp2.hessian(0, 0)) == Rational(5, 16));
  CHECK(exact(comp2.hessian(0, 1)) == 0);
  CHECK(exact(comp2.hessian(1, 0)) == 0);
  CHECK(exact(comp2.hessian(1, 1)) == Rational(7, 64));

  // closed form for permutations with z1 := 1, h(t) = 1 - t - t^2, tracked index i = 1
  auto perm = assemble_certificate(build_example(spec("permutations")));
  double rho = (std::sqrt(5.0) - 1) / 2;
  double h1 = -1 - 2 * rho, h2 = -2;
  double entry = (std::pow(rho, 3) * h2 - rho * rho * 3 * h1 - rho * h1 * h1) / std::pow(h1, 3);
  CHECK(mid(perm.hessian(0, 0)) == doctest::Approx(entry).epsilon(1e-12));
  CHECK(mid(perm.m[0]) == doctest::Approx(-rho / h1).epsilon(1e-12));
}

TEST_CASE("segment test") {
  auto gf = build_example(spec("compositions"));
  auto field = rho_field(gf, parse_rational("1e-30"));
  CHECK(segment_minimality(gf, field).status == MinimalStatus::Proved);

  auto strings = build_example(spec("strings"));
  CHECK(segment_minimality(strings, rho_field(strings, parse_rational("1e-30"))).status == MinimalStatus::Proved);

  auto r = testing::segment_negative_control();
  INFO(r.detail);
  CHECK(r.ok());
}

TEST_CASE("aperiodicity") {
  CHECK(aperiodicity_strictness(parse_gf("1/(1 - t - z1*t^2)")).status == StrictStatus::ProvedAperiodic);
  CHECK(aperiodicity_strictness(parse_gf("1/(1 - z1*t^2)")).status == StrictStatus::Unverified);
  auto periodic = aperiodicity_strictness(parse_gf("1/(1 - z1*t - t^2)"));
  CHECK(periodic.status == StrictStatus::Unverified);
  CHECK(periodic.lattice_index == 2);
  // S = z t + t^2: exponents (1,1), (0,2) generate a sublattice of index 2
  std::vector<std::vector<Integer>> rows{{1, 1}, {0, 2}};
  CHECK(lattice_index(rows, 2) == 2);
  std::vector<std::vector<Integer>> unimodular{{0, 1}, {1, 2}};
  CHECK(lattice_index(unimodular, 2) == 1);
  CHECK(lattice_index({{0, 2}}, 2) == 0);

  // a factor (1 + t)(1 - t) cleared into H is divided out again before reading off S
  RationalGF cleared = parse_gf("(1 - t^2)/((1 - t^2)*(1 - t - z1*t) - (1 + t)*t^3)");
  REQUIRE(cleared.S);
  CHECK(aperiodicity_strictness(cleared).status == StrictStatus::ProvedAperiodic);
  CHECK_FALSE(parse_gf("(1 + t)/((1 + t)*(1 - z1*t^2))").S->den.is_constant());
  CHECK(aperiodicity_strictness(parse_gf("(1 + t)/((1 + t)*(1 - z1*t^2))")).status == StrictStatus::Unverified);
}

TEST_CASE("certificates") {
  auto comp = assemble_certificate(build_example(spec("compositions")));
  CHECK(comp.verdict == Verdict::Proved);
  CHECK(comp.rho.rational_value() == Rational(1, 2));
  CHECK(exact(comp.C0) == Rational(1, 2));
  CHECK(exact(comp.hessian(0, 0)) == Rational(5, 16));

  ExampleSpec both = spec("permutations");
  both.set_z1 = false;
  auto degenerate = assemble_certificate(build_example(both));
  CHECK(degenerate.hess_det.is_zero());
  CHECK(degenerate.verdict == Verdict::Degenerate);
  CHECK_THROWS_AS(require_nondegenerate(degenerate), Error);

  auto perm = assemble_certificate(build_example(spec("permutations")));
  CHECK(perm.verdict == Verdict::Proved);
  CHECK(perm.hess_det.sign() > 0);

  auto neg = assemble_certificate(parse_gf("1/(1 - 2*t + 99/100*z1*t^2)"));
  CHECK(neg.verdict == Verdict::Refuted);
}

TEST_CASE("errors from the schema") {
  auto code = [](const std::string& text) {
    try {
      assemble_certificate(parse_gf(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  // H(1,t) = (1-2t)(1+t) and G(1,1/2) = 0
  CHECK(code("(1 - 2*t)/((1 - 2*t)*(1 + z1*t) - (z1 - 1)*t^3)") == ErrorCode::GVanishes);
  // H(1,t) = (1-2t)^2 has a double root
  CHECK(code("1/((1 - 2*t)^2 + (z1 - 1)*t)") == ErrorCode::HtVanishes);
  CHECK(code("1/(1 + t + z1*t^2)") == ErrorCode::NoPositiveRoot);
}

TEST_CASE("density and amplitude") {
  ExampleSpec s = spec("strings");
  auto cert = assemble_certificate(build_example(s));
  // binomial(2000, 1000) through lgamma
  double log_binom = std::lgamma(2001.0) - 2 * std::lgamma(1001.0);
  LogValue v = density_at(cert, {1000}, 2000);
  CHECK(std::fabs(std::expm1(v.log_abs - log_binom)) < 1e-3);
  LogValue tiny = density_at(cert, {0}, 1);
  CHECK(std::isfinite(tiny.value()));
  CHECK(tiny.value() > 0);

  auto sym = symbolic_amplitude(cert);
  REQUIRE(sym.K);
  CHECK(*sym.K == 2);
  CHECK(*sym.rho == Rational(1, 2));

  auto comp = assemble_certificate(build_example(spec("compositions")));
  CHECK(*symbolic_amplitude(comp).K == Rational(2, 5));
}
