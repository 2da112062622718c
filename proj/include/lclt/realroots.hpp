#pragma once

#include <optional>
#include <vector>

#include "lclt/interval.hpp"
#include "lclt/multipoly.hpp"
#include "lclt/rational.hpp"
#include "lclt/univariate.hpp"

namespace lclt {

/// A real algebraic number: a root of `minpoly` isolated by `interval`.
///
/// The minpoly is square-free with integer coefficients, unit content and
/// positive leading coefficient. Rational roots carry the linear minpoly
/// den*t - num and a degenerate interval. Irrational roots carry a minpoly
/// without rational roots, so no interval endpoint produced by bisection is
/// ever a root.
struct AlgebraicNumber {
  UniPoly minpoly;
  IntervalValue interval;
  /// Earlier isolating intervals, outermost first; each contains the next.
  std::vector<IntervalValue> history;

  bool is_rational() const { return minpoly.degree() == 1; }
  /// Exact value; requires is_rational().
  Rational rational_value() const;
  double approx() const;
};

/// Number of distinct real roots of p in (a, b]. Throws PVanishesAtLeftEndpoint.
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);
int sturm_count(const MultiPoly& p, const Rational& a, const Rational& b);

/// Rational roots of p (sorted, distinct). Candidates come from the divisors
/// of the extreme integer coefficients; returns nullopt when those are too
/// large to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const UniPoly& p);

/// Cauchy bound: every real root has |x| < bound.
Rational cauchy_bound(const UniPoly& p);

/// Least positive real root of p, isolated to width <= target_width.
/// Throws NoPositiveRoot, InvalidArgument (constant p or p(0) = 0).
AlgebraicNumber smallest_positive_root(const UniPoly& p, const Rational& target_width = parse_rational("1e-30"));
AlgebraicNumber smallest_positive_root(const MultiPoly& p, const Rational& target_width = parse_rational("1e-30"));

/// Bisects the isolating interval until its width is <= target_width.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& target_width);

/// Isolating intervals of all roots of a square-free p in the open interval (a, b),
/// none of which is allowed to be rational unless it is returned as a point.
std::vector<IntervalValue> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b);

}  // namespace lclt
