#pragma once

// Independent oracles and randomized property suites shared by the unit tests
// and the acceptance runner. Nothing here calls the library routine it checks.

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lclt/examples.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/linfam.hpp"
#include "lclt/multipoly.hpp"
#include "lclt/oracle.hpp"
#include "lclt/smoothacsv.hpp"

namespace lclt::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    ++failures;
    if (detail.size() < 400) detail += what + "; ";
  }
};

inline ExampleSpec spec(const std::string& family, long d = 1) {
  ExampleSpec s;
  s.family = family;
  s.d = d;
  return s;
}

/// Term-by-term evaluation, independent of MultiPoly::evaluate.
inline Rational eval_terms(const MultiPoly& p, const std::map<std::string, Rational>& x) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::uint32_t j = 0; j < e[k]; ++j) term *= x.at(p.vars()[k]);
    sum += term;
  }
  return sum;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long den = 7) {
  std::uniform_int_distribution<long> num(-range, range), dd(1, den);
  Rational q(num(rng), dd(rng));
  q.canonicalize();
  return q;
}

inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_deg,
                             unsigned max_terms) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg), count(0, max_terms);
  MultiPoly::TermMap terms;
  unsigned n = count(rng);
  for (unsigned i = 0; i < n; ++i) {
    Exponent e(vars.size());
    for (auto& x : e) x = deg(rng);
    Rational c = random_rational(rng);
    if (sgn(c) != 0) terms[e] += c;
  }
  MultiPoly::TermMap clean;
  for (auto& [e, c] : terms)
    if (sgn(c) != 0) clean[e] = c;
  return MultiPoly(vars, clean);
}

inline std::map<std::string, Rational> random_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::map<std::string, Rational> x;
  for (const auto& v : vars) x[v] = random_rational(rng, 5, 4);
  return x;
}

/// Ring axioms, evaluation homomorphism, derivative against finite differences,
/// and interval enclosure soundness.
inline SuiteResult polycore_properties(std::size_t rounds = 400, unsigned seed = 1) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  const std::vector<std::string> vars{"z1", "z2", "t"};
  for (std::size_t i = 0; i < rounds; ++i) {
    MultiPoly a = random_poly(rng, vars, 3, 5), b = random_poly(rng, vars, 3, 5), c = random_poly(rng, vars, 2, 4);
    auto x = random_point(rng, vars);
    std::string tag = " round " + std::to_string(i);

    ++r.cases;
    if (!(a + b == b + a) || !(a * b == b * a)) r.fail("commutativity" + tag);
    ++r.cases;
    if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c))) r.fail("associativity" + tag);
    ++r.cases;
    if (!(a * (b + c) == a * b + a * c)) r.fail("distributivity" + tag);
    ++r.cases;
    if (!(a - a).is_zero() || !(a + MultiPoly() == a)) r.fail("identities" + tag);
    ++r.cases;
    if (eval_terms(a + b, x) != eval_terms(a, x) + eval_terms(b, x) ||
        eval_terms(a * b, x) != eval_terms(a, x) * eval_terms(b, x) ||
        a.evaluate(x) != eval_terms(a, x))
      r.fail("evaluation" + tag);

    // |(p(t+h) - p(t))/h - p'(t)| <= h * sum_k |c_k| k^2 R^k with R = |t| + h
    ++r.cases;
    Rational h(1, 1000000);
    auto xh = x;
    xh["t"] += h;
    Rational fd = (eval_terms(a, xh) - eval_terms(a, x)) / h;
    Rational exact = eval_terms(a.derivative("t"), x);
    Rational R = abs(x["t"]) + h + 1, bound(0);
    std::size_t ti = 2;
    for (const auto& [e, coef] : a.terms()) {
      Rational rest = abs(coef);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (k != ti)
          for (std::uint32_t j = 0; j < e[k]; ++j) rest *= abs(x[vars[k]]);
      Rational Rk(1);
      for (std::uint32_t j = 0; j < e[ti]; ++j) Rk *= R;
      bound += rest * e[ti] * e[ti] * Rk;
    }
    if (abs(fd - exact) > h * bound) r.fail("derivative" + tag);

    ++r.cases;
    std::map<std::string, IntervalValue> box;
    std::map<std::string, Rational> inside;
    std::uniform_int_distribution<int> frac(0, 8);
    for (const auto& v : vars) {
      Rational lo = random_rational(rng, 4, 3), w(frac(rng) + 1, 8);
      box.emplace(v, IntervalValue(lo, lo + w));
      inside[v] = lo + w * Rational(frac(rng), 8);
    }
    if (!a.eval_interval(box).contains(eval_terms(a, inside))) r.fail("interval" + tag);
  }
  return r;
}

/// Coefficient of G or H at (i, n) in the gf's roster.
inline Rational gf_coefficient(const MultiPoly& p, const std::vector<std::string>& tracked, const std::vector<long>& i,
                               long n) {
  Exponent e(p.vars().size(), 0);
  for (std::size_t k = 0; k < tracked.size(); ++k) {
    if (i[k] < 0) return 0;
    e[p.var_index(tracked[k])] = static_cast<std::uint32_t>(i[k]);
  }
  if (n < 0) return 0;
  e[p.var_index("t")] = static_cast<std::uint32_t>(n);
  return p.coefficient(e);
}

/// sum_{(a,b)} h_{a,b} f_{i-a,n-b} = g_{i,n} at random stored cells.
inline SuiteResult convolution_identity(const RationalGF& gf, long N, std::size_t samples, unsigned seed) {
  SuiteResult r;
  CoefficientTensor tensor = expand(gf, N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick_n(0, N);
  std::size_t ti = gf.H.var_index("t");
  for (std::size_t k = 0; k < samples; ++k) {
    long n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick(0, tensor.slice_size(n) - 1);
    auto i = tensor.index_of(n, pick(rng));
    Rational lhs(0);
    for (const auto& [e, h] : gf.H.terms()) {
      std::vector<long> src(i.size());
      for (std::size_t q = 0; q < i.size(); ++q) src[q] = i[q] - static_cast<long>(e[gf.H.var_index(gf.tracked[q])]);
      long m = n - static_cast<long>(e[ti]);
      if (m < 0) continue;
      lhs += h * tensor.coefficient(m, src);
    }
    ++r.cases;
    if (lhs != gf_coefficient(gf.G, gf.tracked, i, n)) {
      std::ostringstream os;
      os << "n=" << n << " lhs=" << lhs << " g=" << gf_coefficient(gf.G, gf.tracked, i, n);
      r.fail(os.str());
    }
  }
  return r;
}

/// Summing a slice over every variable but `keep` equals the expansion of F with the others set to 1.
inline SuiteResult marginal_consistency(const RationalGF& gf, long N, std::size_t keep) {
  SuiteResult r;
  CoefficientTensor full = expand(gf, N);
  std::map<std::string, MultiPoly::Binding> ones;
  for (std::size_t k = 0; k < gf.d(); ++k)
    if (k != keep) ones[gf.tracked[k]] = Rational(1);
  RationalGF marginal_gf = make_gf(gf.G.substitute(ones), gf.H.substitute(ones));
  CoefficientTensor marginal = expand(marginal_gf, N);
  std::size_t mk = 0;
  for (std::size_t k = 0; k < marginal_gf.d(); ++k)
    if (marginal_gf.tracked[k] == gf.tracked[keep]) mk = k;
  for (long n = 0; n <= N; ++n) {
    std::map<long, Rational> sums;
    for (std::size_t lin = 0; lin < full.slice_size(n); ++lin) sums[full.index_of(n, lin)[keep]] += full.coefficient_at(n, lin);
    for (const auto& [s, v] : sums) {
      std::vector<long> idx(marginal_gf.d(), 0);
      idx[mk] = s;
      ++r.cases;
      if (marginal.coefficient(n, idx) != v) r.fail("n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  }
  return r;
}

/// Doubles as an oracle for enclosures.
inline double mid(const AlgebraicReal& x) { return x.enclosure(dyadic(80)).midpoint().get_d(); }

/// Certificates of G/H and (uG)/(uH) with u = 1 + t agree.
inline SuiteResult clearing_invariance(const RationalGF& gf) {
  SuiteResult r;
  MultiPoly u = MultiPoly::constant(1) + MultiPoly::variable("t");
  RationalGF scaled = make_gf(gf.G * u, gf.H * u);
  // same series, so the non-negativity assertion carries over
  scaled.combinatorial = gf.combinatorial;
  auto a = assemble_certificate(gf), b = assemble_certificate(scaled);
  auto close = [&](const AlgebraicReal& x, const AlgebraicReal& y, const std::string& what) {
    ++r.cases;
    bool same_field = x.field() && y.field() && x.field()->minpoly() == y.field()->minpoly();
    if (same_field ? !(x.representative() == y.representative()) : std::fabs(mid(x) - mid(y)) > 1e-12)
      r.fail(what);
  };
  close(AlgebraicReal::generator(a.field), AlgebraicReal::generator(b.field), "rho");
  for (std::size_t i = 0; i < a.d(); ++i) {
    close(a.m[i], b.m[i], "m");
    for (std::size_t j = 0; j < a.d(); ++j) close(a.hessian(i, j), b.hessian(i, j), "hessian");
  }
  close(a.hess_det, b.hess_det, "det");
  close(a.C0, b.C0, "C0");
  ++r.cases;
  if (a.verdict != b.verdict) r.fail("verdict " + to_string(a.verdict) + " vs " + to_string(b.verdict));
  return r;
}

/// Random linear families: det H != 0 and the positivity inequality at 20 points per q_k.
inline SuiteResult linear_family_positivity(std::size_t families, unsigned seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 3), deg(1, 3), coef(0, 3), zpick(1, 40);
  std::size_t built = 0;
  while (built < families) {
    int d = dim(rng);
    auto random_q = [&](bool allow_zero) {
      std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1, Rational(0));
      bool nonzero = false;
      for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] = Rational(coef(rng), 2);
        nonzero |= sgn(c[k]) != 0;
      }
      if (!nonzero && !allow_zero) c.back() = Rational(1, 2);
      return UniPoly(c);
    };
    LinearFamily lf;
    // the theorem needs q != 0 with gcd of its exponents equal to 1
    UniPoly q = random_q(false);
    long g = 0;
    for (std::size_t k = 1; k < q.coeffs().size(); ++k)
      if (sgn(q.coeff(k)) != 0) g = std::gcd(g, static_cast<long>(k));
    if (g != 1) continue;
    lf.q = UniRational{q, UniPoly::constant(1)};
    for (int k = 0; k < d; ++k) lf.q_list.push_back(UniRational{random_q(false), UniPoly::constant(1)});
    std::vector<std::string> tracked;
    for (int k = 1; k <= d; ++k) tracked.push_back("z" + std::to_string(k));
    Fraction H = linear_family_denominator(lf, tracked);
    RationalGF gf = make_gf(MultiPoly::constant(1), H.num);
    if (gf.d() != static_cast<std::size_t>(d)) continue;  // a z_k cancelled; not a d-dimensional family
    ++built;
    std::string tag = " family " + std::to_string(built) + " H=" + gf.H.to_string();
    auto field = rho_field(gf, parse_rational("1e-30"));
    LinearFamilyData data = linear_family_data(lf, field);
    ++r.cases;
    if (det_closed_form(data).is_zero()) r.fail("det = 0" + tag);
    for (const auto& qk : lf.q_list)
      for (int j = 0; j < 20; ++j) {
        Rational z(zpick(rng), 8);
        ++r.cases;
        if (!positivity_inequality_check(qk.num, z).holds) r.fail("inequality" + tag);
      }
  }
  return r;
}

/// Negative control H = 1 - 2t + (99/100) z t^2.
inline SuiteResult segment_negative_control() {
  SuiteResult r;
  RationalGF gf = parse_gf("1/(1 - 2*t + 99/100*z1*t^2)");
  auto field = rho_field(gf, parse_rational("1e-30"));
  SegmentResult s = segment_minimality(gf, field);
  ++r.cases;
  if (s.status != MinimalStatus::Refuted) r.fail("status " + to_string(s.status));
  ++r.cases;
  if (!s.witness || !(Rational(7, 10) < s.witness->lo() && s.witness->hi() < Rational(3, 4)))
    r.fail("witness not inside (0.7, 0.75)");
  // the oracle g(s) = 1 - (20/11)s + (9/11)s^3 changes sign on the witness
  ++r.cases;
  if (s.witness) {
    auto g = [](const Rational& x) -> Rational { return 1 - Rational(20, 11) * x + Rational(9, 11) * x * x * x; };
    if (sgn(g(s.witness->lo())) * sgn(g(s.witness->hi())) >= 0) r.fail("no sign change of g on the witness");
  }
  return r;
}

}  // namespace lclt::testing
