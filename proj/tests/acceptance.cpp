// Acceptance runner: one PASS/FAIL line per criterion.

#include <gmpxx.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "lclt/errors.hpp"
#include "support.hpp"

using namespace lclt;
using lclt::testing::mid;
using lclt::testing::spec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += "[failed: " + what + "] ";
    }
  }
  void note(const std::string& s) { detail += s + " "; }
};

std::string fmt(double x, const char* f = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool is_exact(const AlgebraicReal& x, const Rational& q) { return x.is_rational() && x.rational_value() == q; }

double rel(long double a, long double b) { return static_cast<double>(std::fabs(a / b - 1)); }

// (3 - sqrt 5)/2 to 256 bits with mpf, independent of the Sturm machinery
mpf_class tutte_rho_oracle() {
  mpf_class five(5, 256), r(0, 256);
  mpf_sqrt(r.get_mpf_t(), five.get_mpf_t());
  return (3 - r) / 2;
}

Outcome criterion1() {
  Outcome o;
  RationalGF gf = build_example(spec("compositions", 1));
  auto cert = assemble_certificate(gf);
  o.require(cert.rho.is_rational() && cert.rho.rational_value() == Rational(1, 2), "rho = 1/2");
  o.require(is_exact(cert.m[0], Rational(1, 4)), "m = [1/4]");
  o.require(is_exact(cert.hessian(0, 0), Rational(5, 16)), "H = [[5/16]]");
  o.require(is_exact(cert.C0, Rational(1, 2)), "C0 = 1/2");
  // 2^n n^(-1/2) * 8 / (2 sqrt(2 pi) sqrt(20)) in the log domain
  long n = 100;
  const long double pi = 3.14159265358979323846264338327950288L;
  long double log_ref = n * std::log(2.0L) - 0.5L * std::log(static_cast<long double>(n)) + std::log(8.0L) -
                        std::log(2.0L * std::sqrt(2.0L * pi) * std::sqrt(20.0L));
  LogValue a = amplitude(cert, n);
  double r = static_cast<double>(std::fabs(std::expm1(static_cast<long double>(a.log_abs) - log_ref)));
  o.require(a.sign > 0 && r < 1e-12, "A_100 relative error " + fmt(r));
  o.note("A_100 rel err " + fmt(r, "%.2e") + ", verdict " + to_string(cert.verdict));
  return o;
}

Outcome criterion2() {
  Outcome o;
  RationalGF gf = build_example(spec("compositions", 2));
  auto cert = assemble_certificate(gf);
  o.require(is_exact(cert.hessian(0, 0), Rational(5, 16)) && is_exact(cert.hessian(0, 1), 0) &&
                is_exact(cert.hessian(1, 0), 0) && is_exact(cert.hessian(1, 1), Rational(7, 64)),
            "H = [[5/16,0],[0,7/64]]");
  o.require(is_exact(cert.m[0], Rational(1, 4)) && is_exact(cert.m[1], Rational(1, 8)), "m = [1/4,1/8]");
  auto data = linear_family_data(*gf.linear_family, cert.field);
  auto closed = hessian_closed_form(data);
  bool agree = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) agree = agree && closed(i, j) == cert.hessian(i, j);
  o.require(agree, "closed-form and generic Hessians agree exactly");
  o.note("generic and closed-form routes agree exactly");
  return o;
}

Outcome criterion3() {
  Outcome o;
  RationalGF gf = build_example(spec("strings", 1));
  auto cert = assemble_certificate(gf);
  auto sym = symbolic_amplitude(cert);
  // A_N = 2^N N^(-1/2) sqrt(K/pi); at N = 2n this is 4^n / sqrt(pi n) exactly when K = 2
  o.require(sym.rho && *sym.rho == Rational(1, 2) && sym.K && *sym.K == 2, "A_n = 2^n n^(-1/2) sqrt(2/pi)");
  o.note(sym.text + ";");
  const long double pi = 3.14159265358979323846264338327950288L;
  long n = 500;
  LogValue a = amplitude(cert, 2 * n);
  long double log_ref = n * std::log(4.0L) - 0.5L * std::log(pi * n);
  double r = static_cast<double>(std::fabs(std::expm1(static_cast<long double>(a.log_abs) - log_ref)));
  o.require(r < 1e-10, "A_1000 vs 4^500/sqrt(500 pi): " + fmt(r));
  // exact big-integer binomial(2000, 1000)
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), 2000, 1000);
  LogValue dens = density_at(cert, {1000}, 2000);
  double rb = std::fabs(std::expm1(dens.log_abs - log_abs(b)));
  o.require(rb < 1e-3, "density vs binomial(2000,1000): " + fmt(rb));
  o.note("A_1000 rel err " + fmt(r, "%.2e") + ", binomial rel err " + fmt(rb, "%.2e"));
  return o;
}

Outcome criterion4() {
  Outcome o;
  RationalGF gf = build_example(spec("permutations", 1));
  auto cert = assemble_certificate(gf);
  o.require(cert.verdict == Verdict::Proved, "verdict PROVED (got " + to_string(cert.verdict) + ")");
  // m = -q_2(rho)/(rho P'(rho)) = rho/sqrt 5 with rho = (sqrt 5 - 1)/2
  double rho = (std::sqrt(5.0) - 1) / 2, m = rho / std::sqrt(5.0);
  o.require(std::fabs(mid(cert.m[0]) - m) < 1e-12, "m = rho/sqrt(5)");
  auto tensor = expand(gf, 150);
  auto stats = empirical_stats(tensor, 150);
  long target = std::lround(150 * m);
  o.require(std::labs(stats.peak_index[0] - target) <= 1,
            "peak " + std::to_string(stats.peak_index[0]) + " vs " + std::to_string(target));
  auto e50 = lclt_gap(tensor, cert, 50), e150 = lclt_gap(tensor, cert, 150);
  o.require(e150.value + e150.rounding_bound < e50.value - e50.rounding_bound, "E(150) < E(50)");
  o.note("peak " + std::to_string(stats.peak_index[0]) + " (round(150 m) = " + std::to_string(target) + "), E(50) = " +
         fmt(e50.value, "%.4g") + ", E(150) = " + fmt(e150.value, "%.4g"));
  return o;
}

Outcome criterion5() {
  Outcome o;
  ExampleSpec s = spec("permutations", 1);
  s.set_z1 = false;
  auto cert = assemble_certificate(build_example(s));
  o.require(cert.hess_det.is_zero(), "det H exactly 0");
  o.require(cert.verdict == Verdict::Degenerate, "verdict DEGENERATE");
  std::string cmd = std::string(LCLT_CLI_PATH) + " analyze --example permutations --d 1 --no-set-z1 > /dev/null 2>&1";
  int raw = std::system(cmd.c_str());
  int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  o.require(status == 3, "CLI exit status 3 (got " + std::to_string(status) + ")");
  o.note("det exactly 0, CLI exit " + std::to_string(status));
  return o;
}

Outcome criterion6() {
  Outcome o;
  RationalGF gf = build_example(spec("tutte_wheel"));
  auto cert = assemble_certificate(gf);
  double m = 0.5 - 1 / (2 * std::sqrt(5.0));
  o.require(std::fabs(mid(cert.m[0]) - m) < 1e-10 && std::fabs(mid(cert.m[1]) - m) < 1e-10, "m");
  o.require(std::fabs(std::fabs(mid(cert.hess_det)) - 0.04) < 1e-10, "|det H| = 1/25");
  o.require(cert.verdict == Verdict::Conditional, "verdict CONDITIONAL (got " + to_string(cert.verdict) + ")");
  double a = 3 / (5 * std::sqrt(5.0)), b = 2 / (5 * std::sqrt(5.0));
  auto tensor = expand(gf, 150);
  auto stats = empirical_stats(tensor, 150);
  double worst = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      double want = i == j ? a : b;
      worst = std::max(worst, std::fabs(std::fabs(stats.covariance[i][j] / 150) - want) / want);
    }
  o.require(worst < 0.05, "covariance/n within 5%: " + fmt(worst));
  o.note("worst covariance deviation " + fmt(worst, "%.2e") + ", verdict " + to_string(cert.verdict));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (long d = 1; d <= 8; ++d) {
    RationalGF gf = build_example(spec("compositions", d));
    auto cert = assemble_certificate(gf);
    auto data = linear_family_data(*gf.linear_family, cert.field);
    auto check = verify_lu(cert.hessian, lu_factors(data));
    std::string tag = "compositions d=" + std::to_string(d);
    o.require(cert.rho.is_rational() && cert.rho.rational_value() == Rational(1, 2), tag + " rho");
    o.require(check.verified, tag + " H U = L");
    o.require(check.verified && check.det == det_closed_form(data) && check.det == determinant(cert.hessian),
              tag + " three-way determinant");
  }
  for (const char* name : {"permutations", "ncolour"}) {
    RationalGF gf = build_example(spec(name, 2));
    auto cert = assemble_certificate(gf);
    auto data = linear_family_data(*gf.linear_family, cert.field);
    auto check = verify_lu_interval(cert.hessian, lu_factors(data), parse_rational("1e-40"), parse_rational("1e-30"));
    o.require(check.verified, std::string(name) + " d=2 interval residual");
    o.note(std::string(name) + " d=2 residual width " + fmt(check.max_width.get_d(), "%.1e") + ";");
  }
  o.note("compositions d=1..8 exact");
  return o;
}

Outcome criterion8() {
  Outcome o;
  RationalGF gf = build_example(spec("ncolour", 1));
  auto tensor = expand(gf, 10);
  o.require(tensor.slice_total(4) == 21, "slice total at n=4 is " + tensor.slice_total(4).get_str());
  auto cert = assemble_certificate(gf);
  o.require(cert.verdict == Verdict::Proved, "verdict PROVED");
  mpf_class oracle = tutte_rho_oracle();
  mpf_class lo(cert.rho.interval.lo(), 256), hi(cert.rho.interval.hi(), 256);
  mpf_class tol("1e-30", 256);
  o.require(cert.rho.interval.width() <= parse_rational("1e-30"), "interval width <= 1e-30");
  o.require(lo - tol <= oracle && oracle <= hi + tol, "(3 - sqrt 5)/2 inside the enclosure");
  o.note("slice total 21, rho enclosure width " + fmt(cert.rho.interval.width().get_d(), "%.1e"));
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto report = [&](const std::string& name, const testing::SuiteResult& r) {
    o.require(r.ok(), name + ": " + r.detail);
    o.note(name + " " + std::to_string(r.cases) + " cases;");
  };
  auto poly = testing::polycore_properties(200, 2024);
  o.require(poly.cases >= 1000, "at least 1000 polycore cases");
  report("polycore", poly);

  testing::SuiteResult conv;
  std::size_t per = 250;
  for (const auto& s : {spec("compositions", 2), spec("ncolour", 2), spec("tutte_wheel")}) {
    auto r = testing::convolution_identity(build_example(s), 40, per, 17);
    conv.cases += r.cases;
    conv.failures += r.failures;
    conv.detail += r.detail;
  }
  auto r = testing::convolution_identity(parse_gf("(1 + z1*t)/(1 - t/2 - z1*t^2/3)"), 30, per, 19);
  conv.cases += r.cases;
  conv.failures += r.failures;
  conv.detail += r.detail;
  report("convolution", conv);

  RationalGF g2 = build_example(spec("compositions", 2));
  testing::SuiteResult marg;
  for (std::size_t keep = 0; keep < 2; ++keep) {
    auto m = testing::marginal_consistency(g2, 30, keep);
    marg.cases += m.cases;
    marg.failures += m.failures;
    marg.detail += m.detail;
  }
  report("marginals", marg);

  testing::SuiteResult clear;
  for (const auto& s : {spec("permutations"), spec("compositions", 2)}) {
    auto c = testing::clearing_invariance(build_example(s));
    clear.cases += c.cases;
    clear.failures += c.failures;
    clear.detail += c.detail;
  }
  ExampleSpec both = spec("permutations");
  both.set_z1 = false;
  auto c = testing::clearing_invariance(build_example(both));
  clear.cases += c.cases;
  clear.failures += c.failures;
  clear.detail += c.detail;
  report("clearing", clear);

  auto lin = testing::linear_family_positivity(500, 99);
  report("linear families", lin);
  report("segment control", testing::segment_negative_control());
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "compositions d=1 certificate and amplitude", 1.0, criterion1},
      {2, "compositions d=2 Hessian, both routes", 5.0, criterion2},
      {3, "strings l=2 d=1 amplitude and binomial", 10.0, criterion3},
      {4, "permutations z1:=1 proved, peak and gap", 30.0, criterion4},
      {5, "permutations both tracked degenerate", 1.0, criterion5},
      {6, "Tutte wheel direction, determinant, covariance", 60.0, criterion6},
      {7, "LU factorization suite", 60.0, criterion7},
      {8, "n-colour compositions", 60.0, criterion8},
      {9, "property suites", 600.0, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += std::string("[exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += "[runtime " + fmt(secs, "%.2f") + " s over " + fmt(c.limit_s, "%.0f") + " s]";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %s (%.3f s) %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
