#include "lclt/realroots.hpp"

#include <algorithm>
#include <set>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

int sign_at(const UniPoly& p, const Rational& x) { return sgn(p(x)); }

int variations(const std::vector<UniPoly>& chain, const Rational& x) {
  return sign_variations(chain, x, [](const Rational& v) { return sgn(v); });
}

UniPoly univariate_of(const MultiPoly& p) {
  auto used = p.used_vars();
  if (used.size() > 1) throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate");
  return p.to_univariate(used.empty() ? std::string("t") : used.front());
}

// Positive divisors of |n|, or empty when |n| is too large for trial division.
std::optional<std::vector<Integer>> divisors(Integer n) {
  n = abs(n);
  static const Integer limit("1000000000000");
  if (n > limit) return std::nullopt;
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Removes the linear factors of the given rational roots.
UniPoly strip_roots(UniPoly p, const std::vector<Rational>& roots) {
  for (const auto& r : roots) {
    UniPoly lin(std::vector<Rational>{-r, Rational(1)});
    while (p.degree() > 0 && sgn(p(r)) == 0) p = divmod(p, lin).first;
  }
  return p;
}

IntervalValue bisect_once(const UniPoly& p, const IntervalValue& iv) {
  Rational mid = iv.midpoint();
  int sm = sign_at(p, mid);
  if (sm == 0) return IntervalValue(mid);
  int slo = sign_at(p, iv.lo());
  return slo * sm < 0 ? IntervalValue(iv.lo(), mid) : IntervalValue(mid, iv.hi());
}

}  // namespace

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "algebraic number is irrational");
  return -minpoly.coeff(0) / minpoly.coeff(1);
}

double AlgebraicNumber::approx() const { return interval.midpoint().get_d(); }

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (a >= b) throw Error(ErrorCode::InvalidArgument, "sturm_count needs a < b");
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "sturm_count of the zero polynomial");
  if (sgn(p(a)) == 0) throw Error(ErrorCode::PVanishesAtLeftEndpoint, "p(a) = 0 at a = " + a.get_str());
  auto chain = sturm_chain(p);
  return variations(chain, a) - variations(chain, b);
}

int sturm_count(const MultiPoly& p, const Rational& a, const Rational& b) {
  return sturm_count(univariate_of(p), a, b);
}

std::optional<std::vector<Rational>> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  UniPoly q = primitive_part(p);
  // zero roots first, so the constant coefficient is nonzero below
  std::size_t shift = 0;
  while (sgn(q.coeff(shift)) == 0) ++shift;
  if (shift > 0) {
    out.emplace_back(0);
    q = UniPoly(std::vector<Rational>(q.coeffs().begin() + static_cast<long>(shift), q.coeffs().end()));
  }
  if (q.degree() <= 0) return out;
  auto num_divs = divisors(q.coeff(0).get_num());
  auto den_divs = divisors(q.leading().get_num());
  if (!num_divs || !den_divs) return std::nullopt;
  std::set<Rational> found;
  for (const auto& a : *num_divs)
    for (const auto& b : *den_divs) {
      Rational cand(a, b);
      cand.canonicalize();
      for (const Rational& x : {cand, Rational(-cand)})
        if (sgn(q(x)) == 0) found.insert(x);
    }
  out.insert(out.end(), found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(k)) / p.leading())));
  return m + 1;
}

std::vector<IntervalValue> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  std::vector<IntervalValue> out;
  auto chain = sturm_chain(p);
  // stack of open intervals (lo, hi) whose endpoints are not roots
  std::vector<std::pair<Rational, Rational>> work{{a, b}};
  auto count = [&](const Rational& lo, const Rational& hi) { return variations(chain, lo) - variations(chain, hi); };
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int c = count(lo, hi);
    if (sgn(p(hi)) == 0) --c;  // (lo, hi] counts a root at hi; we want the open interval
    if (c == 0) continue;
    if (c == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(p(mid)) == 0) out.emplace_back(mid);
    work.emplace_back(mid, hi);
    work.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(), [](const IntervalValue& x, const IntervalValue& y) { return x.lo() < y.lo(); });
  return out;
}

AlgebraicNumber smallest_positive_root(const UniPoly& p_in, const Rational& target_width) {
  if (p_in.degree() <= 0) throw Error(ErrorCode::InvalidArgument, "smallest_positive_root of a constant");
  if (sgn(p_in(Rational(0))) == 0) throw Error(ErrorCode::InvalidArgument, "smallest_positive_root needs p(0) != 0");
  UniPoly p = primitive_part(square_free_part(p_in));

  std::optional<Rational> best_rational;
  UniPoly irr = p;
  if (auto roots = rational_roots(p)) {
    for (const auto& r : *roots)
      if (sgn(r) > 0 && !best_rational) best_rational = r;
    irr = primitive_part(strip_roots(p, *roots));
  }

  if (best_rational) {
    // an irrational root below the rational candidate would win
    bool irrational_smaller = irr.degree() > 0 && sturm_count(irr, Rational(0), *best_rational) > 0;
    if (!irrational_smaller) {
      const Rational& r = *best_rational;
      AlgebraicNumber out{primitive_part(UniPoly(std::vector<Rational>{-r, Rational(1)})), IntervalValue(r), {}};
      out.history.push_back(out.interval);
      return out;
    }
  }

  if (irr.degree() <= 0) throw Error(ErrorCode::NoPositiveRoot, "no positive real root");
  Rational bound = cauchy_bound(irr);
  if (sturm_count(irr, Rational(0), bound) == 0) throw Error(ErrorCode::NoPositiveRoot, "no positive real root");

  auto chain = sturm_chain(irr);
  auto count = [&](const Rational& lo, const Rational& hi) { return variations(chain, lo) - variations(chain, hi); };
  Rational lo(0), hi = bound;
  // invariant: no root in (0, lo], at least one root in (lo, hi]
  while (count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (count(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  AlgebraicNumber out{irr, IntervalValue(lo, hi), {}};
  out.history.push_back(out.interval);
  return refine(out, target_width);
}

AlgebraicNumber smallest_positive_root(const MultiPoly& p, const Rational& target_width) {
  return smallest_positive_root(univariate_of(p), target_width);
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& target_width) {
  AlgebraicNumber out = a;
  if (out.history.empty()) out.history.push_back(out.interval);
  if (out.interval.width() <= target_width) return out;
  while (out.interval.width() > target_width) out.interval = bisect_once(out.minpoly, out.interval);
  out.history.push_back(out.interval);
  return out;
}

}  // namespace lclt
