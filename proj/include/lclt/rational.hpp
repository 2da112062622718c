#pragma once

#include <gmpxx.h>

#include <string>

namespace lclt {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool scalar_is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p", "p/q", "-p/q", decimal "0.125" and scientific "1e-30".
Rational parse_rational(const std::string& text);

/// Round-to-nearest decimal rendering with `digits` digits after the point.
std::string to_decimal(const Rational& q, int digits);

/// True when q has a terminating decimal expansion.
bool has_finite_decimal(const Rational& q);

/// Exact decimal expansion; requires has_finite_decimal(q).
std::string to_exact_decimal(const Rational& q);

/// Upper bound on |q| of the form "De-K" with a single digit D, e.g. "3e-31"; "0" for zero.
std::string format_bound(const Rational& q);

/// 2^-k rational.
Rational dyadic(long k);

/// log(|q|) as a double without overflow for huge numerators or denominators.
double log_abs(const Rational& q);
double log_abs(const Integer& z);

}  // namespace lclt
