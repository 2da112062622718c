#pragma once

#include <algorithm>
#include <string>

#include "lclt/errors.hpp"
#include "lclt/rational.hpp"

namespace lclt {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// All operations are conservative: the result contains every value the
/// operation can take for operands drawn from the input intervals.
class IntervalValue {
 public:
  IntervalValue() = default;
  IntervalValue(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(implicit)
  IntervalValue(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const IntervalValue& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  /// -1, 0 or +1 when the sign is certain, otherwise 2.
  int certain_sign() const {
    if (sgn(lo_) > 0) return 1;
    if (sgn(hi_) < 0) return -1;
    if (sgn(lo_) == 0 && sgn(hi_) == 0) return 0;
    return 2;
  }

  IntervalValue operator-() const { return {-hi_, -lo_}; }

  friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
    if (a.is_point() && b.is_point()) return IntervalValue(a.lo_ * b.lo_);
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend IntervalValue operator/(const IntervalValue& a, const IntervalValue& b) {
    if (b.contains_zero()) throw Error(ErrorCode::Indeterminate, "interval division by an interval containing 0");
    return a * IntervalValue(1 / b.hi_, 1 / b.lo_);
  }
  IntervalValue& operator+=(const IntervalValue& o) { return *this = *this + o; }
  IntervalValue& operator-=(const IntervalValue& o) { return *this = *this - o; }
  IntervalValue& operator*=(const IntervalValue& o) { return *this = *this * o; }
  friend bool operator==(const IntervalValue& a, const IntervalValue& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  /// Tight enclosure of x^k (even powers of intervals straddling 0 start at 0).
  IntervalValue pow(unsigned k) const;

  std::string to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline IntervalValue IntervalValue::pow(unsigned k) const {
  if (k == 0) return IntervalValue(Rational(1));
  auto p = [](const Rational& x, unsigned e) {
    Rational r(1);
    Rational base = x;
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  };
  Rational plo = p(lo_, k), phi = p(hi_, k);
  if (k % 2 == 1) return {plo, phi};
  if (sgn(lo_) >= 0) return {plo, phi};
  if (sgn(hi_) <= 0) return {phi, plo};
  return {Rational(0), std::max(plo, phi)};
}

}  // namespace lclt
