#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lclt/multipoly.hpp"
#include "lclt/univariate.hpp"

namespace lclt {

/// A quotient of multivariate polynomials, kept unreduced apart from
/// univariate gcds of denominators.
struct Fraction {
  MultiPoly num;
  MultiPoly den;
};

/// H = 1 - q(t) - sum_k q_k(t) z_k with q and q_k rational functions of t.
struct LinearFamily {
  UniRational q;
  std::vector<UniRational> q_list;
  /// q is identically zero (aperiodicity is then left to the general test).
  bool q_vanishes = false;
  /// True when read off S = N/D from the input; false for the cleared denominator.
  bool from_series = false;
};

/// Validated F = G/H.
///
/// The roster is z-variables in index order followed by t. H(0) = 1.
struct RationalGF {
  MultiPoly G;
  MultiPoly H;
  /// Tracked variables (every roster entry except t).
  std::vector<std::string> tracked;
  /// Series coefficients asserted or inferred non-negative up to finitely many.
  bool combinatorial = false;
  /// The flag was derived from the input's shape rather than asserted.
  bool combinatorial_inferred = false;
  /// S with F = A/(1 - S) when the input has that shape and S is a positive series.
  std::optional<Fraction> S;
  std::optional<LinearFamily> linear_family;
  std::string source;

  std::size_t d() const { return tracked.size(); }
  /// "G/H" in the parser's grammar.
  std::string to_string() const;
};

/// Parses and normalizes a generating function.
/// Errors: SyntaxError (with position), NonRational, DivisionByZero,
/// ZeroDenominatorAtOrigin, InvalidGeneratingFunction.
RationalGF parse_gf(const std::string& text);

/// Builds a RationalGF from polynomials (same normalization and checks as parse_gf).
RationalGF make_gf(const MultiPoly& G, const MultiPoly& H);

/// Decomposition of the (cleared) H as 1 - q(t) - sum q_k(t) z_k, if it has that shape.
std::optional<LinearFamily> detect_linear_family(const RationalGF& gf);

/// Decomposition read off S = N/D when D involves only t and N is linear in the z's.
std::optional<LinearFamily> series_linear_family(const RationalGF& gf);

/// Rebuilds H from a linear family over a common denominator: returns den * (1 - q - sum q_k z_k).
Fraction linear_family_denominator(const LinearFamily& lf, const std::vector<std::string>& tracked);

/// Terms of the power series num/den up to total degree K (den(0) != 0).
std::map<Exponent, Rational, GrlexLess> truncated_series(const MultiPoly& num, const MultiPoly& den,
                                                         unsigned K);

}  // namespace lclt
