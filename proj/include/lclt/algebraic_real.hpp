#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "lclt/interval.hpp"
#include "lclt/matrix.hpp"
#include "lclt/rational.hpp"
#include "lclt/realroots.hpp"
#include "lclt/univariate.hpp"

namespace lclt {

/// The field Q(rho) for a real algebraic number rho.
///
/// Elements are polynomials in rho reduced modulo the square-free minpoly.
/// The minpoly need not be irreducible, so zero testing goes through a gcd
/// with the minpoly followed by a Sturm count on rho's isolating interval.
/// The isolating interval is refined on demand; refinement is guarded by a
/// mutex so a shared field can be used from several threads.
class RhoField {
 public:
  explicit RhoField(AlgebraicNumber rho);

  const UniPoly& minpoly() const { return rho_.minpoly; }
  bool is_rational() const { return rho_.is_rational(); }
  /// Current isolating interval.
  IntervalValue interval() const;
  /// Isolating interval refined to width <= w (cached).
  IntervalValue interval(const Rational& w) const;
  AlgebraicNumber algebraic_number() const;

  UniPoly reduce(const UniPoly& p) const;
  /// True iff p(rho) = 0.
  bool vanishes(const UniPoly& p) const;

 private:
  mutable AlgebraicNumber rho_;
  mutable std::mutex mu_;
};

/// Exact element of Q(rho). A null field means a plain rational constant,
/// which lets generic code build F(0) and F(1) without a field at hand.
class AlgebraicReal {
 public:
  AlgebraicReal() : rep_() {}
  AlgebraicReal(int c) : AlgebraicReal(Rational(c)) {}   // NOLINT(implicit)
  AlgebraicReal(long c) : AlgebraicReal(Rational(c)) {}  // NOLINT(implicit)
  AlgebraicReal(const Rational& c) : rep_(UniPoly::constant(c)) {}  // NOLINT(implicit)
  AlgebraicReal(std::shared_ptr<const RhoField> field, const UniPoly& p);

  /// The generator rho itself.
  static AlgebraicReal generator(std::shared_ptr<const RhoField> field);

  const std::shared_ptr<const RhoField>& field() const { return field_; }
  const UniPoly& representative() const { return rep_; }
  /// True when the value is a rational constant (representative of degree <= 0).
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;

  bool is_zero() const;
  /// Exact sign. Refines rho until the enclosure excludes 0; the zero case is decided exactly.
  int sign() const;
  /// Enclosure of the value with width <= w.
  IntervalValue enclosure(const Rational& w) const;
  double approx() const;

  AlgebraicReal operator-() const;
  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  /// Throws DivisionByZero when b = 0.
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  AlgebraicReal& operator+=(const AlgebraicReal& o) { return *this = *this + o; }
  AlgebraicReal& operator-=(const AlgebraicReal& o) { return *this = *this - o; }
  AlgebraicReal& operator*=(const AlgebraicReal& o) { return *this = *this * o; }
  AlgebraicReal pow(unsigned k) const;
  /// Value equality.
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return (a - b).is_zero(); }

 private:
  static std::shared_ptr<const RhoField> common(const AlgebraicReal& a, const AlgebraicReal& b);
  std::shared_ptr<const RhoField> field_;
  UniPoly rep_;
};

inline bool scalar_is_zero(const AlgebraicReal& x) { return x.is_zero(); }
inline ZeroState zero_state(const AlgebraicReal& x) { return x.is_zero() ? ZeroState::Zero : ZeroState::NonZero; }

/// Evaluates a univariate polynomial at rho.
AlgebraicReal eval_at(const std::shared_ptr<const RhoField>& field, const UniPoly& p);

}  // namespace lclt
