#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lclt/errors.hpp"
#include "lclt/interval.hpp"
#include "lclt/rational.hpp"

namespace lclt {

/// Dense univariate polynomial over a field F, coefficients stored low to high.
///
/// F needs the field operators, construction from int and Rational, and a
/// free `scalar_is_zero(const F&)` found by lookup. Instantiated for Rational and for
/// AlgebraicReal (elements of Q(rho)).
template <class F>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const F& c) { return DensePoly(std::vector<F>{c}); }
  static DensePoly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return DensePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& leading() const { return c_.back(); }

  template <class X>
  X eval(const X& x) const {
    X acc(Rational(0));
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + X(c_[k]);
    return acc;
  }
  F operator()(const F& x) const {
    F acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
    return DensePoly(std::move(d));
  }

  DensePoly operator-() const {
    std::vector<F> v = c_;
    for (auto& x : v) x = -x;
    return DensePoly(std::move(v));
  }
  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
    return DensePoly(std::move(v));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return DensePoly(std::move(v));
  }
  friend DensePoly operator*(const F& s, const DensePoly& a) {
    std::vector<F> v = a.c_;
    for (auto& x : v) x = s * x;
    return DensePoly(std::move(v));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return (a - b).is_zero(); }

 private:
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
std::pair<DensePoly<F>, DensePoly<F>> divmod(const DensePoly<F>& a, const DensePoly<F>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {DensePoly<F>{}, a};
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  F inv_lead = F(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    F coef = rem[static_cast<std::size_t>(k)] * inv_lead;
    quo[static_cast<std::size_t>(k - db)] = coef;
    if (scalar_is_zero(coef)) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] =
          rem[static_cast<std::size_t>(k - db + j)] - coef * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {DensePoly<F>(std::move(quo)), DensePoly<F>(std::move(rem))};
}

template <class F>
DensePoly<F> make_monic(const DensePoly<F>& p) {
  if (p.is_zero()) return p;
  return (F(1) / p.leading()) * p;
}

/// Monic greatest common divisor (zero when both inputs are zero).
template <class F>
DensePoly<F> gcd(DensePoly<F> a, DensePoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
template <class F>
std::pair<DensePoly<F>, DensePoly<F>> gcd_with_cofactor(const DensePoly<F>& a, const DensePoly<F>& m) {
  DensePoly<F> r0 = m, r1 = divmod(a, m).second;
  DensePoly<F> s0, s1 = DensePoly<F>::constant(F(1));
  if (r1.is_zero()) return {make_monic(m), DensePoly<F>{}};
  while (true) {
    auto [q, r] = divmod(r0, r1);
    if (r.is_zero()) break;
    DensePoly<F> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  F inv = F(1) / r1.leading();
  return {inv * r1, inv * s1};
}

template <class F>
DensePoly<F> square_free_part(const DensePoly<F>& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

/// Signed remainder sequence p, p', -rem(...), ... down to a constant.
template <class F>
std::vector<DensePoly<F>> sturm_chain(const DensePoly<F>& p) {
  std::vector<DensePoly<F>> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  DensePoly<F> d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    d = -r;
  }
  return chain;
}

/// Number of sign changes along the chain evaluated at x (zeros skipped).
template <class F, class SignFn>
int sign_variations(const std::vector<DensePoly<F>>& chain, const Rational& x, SignFn&& sign) {
  int variations = 0, last = 0;
  F fx(x);
  for (const auto& p : chain) {
    int s = sign(p(fx));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

using UniPoly = DensePoly<Rational>;

inline int rational_sign(const Rational& q) { return sgn(q); }

/// Scales p to integer coefficients with unit content and positive leading coefficient.
UniPoly primitive_part(const UniPoly& p);

/// Sum of c_k t^k rendered with the given variable name.
std::string to_string(const UniPoly& p, const std::string& var = "t");

/// Rational function N/D in one variable (D nonzero).
struct UniRational {
  UniPoly num;
  UniPoly den = UniPoly::constant(Rational(1));

  UniRational derivative() const {
    return {num.derivative() * den - num * den.derivative(), den * den};
  }
  friend UniRational operator+(const UniRational& a, const UniRational& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend UniRational operator-(const UniRational& a, const UniRational& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  /// Cancels the polynomial gcd and normalizes den to be monic.
  UniRational reduced() const;
  bool is_zero() const { return num.is_zero(); }
};

}  // namespace lclt
