#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lclt/interval.hpp"
#include "lclt/rational.hpp"
#include "lclt/univariate.hpp"

namespace lclt {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic in roster order.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Orders variable names as z1, z2, ..., then other names alphabetically, then t.
std::vector<std::string> canonical_roster(std::vector<std::string> names);

/// Sparse multivariate polynomial over Q.
///
/// The roster is kept in canonical order and every exponent vector has one
/// entry per roster variable. Zero coefficients are never stored, so equal
/// polynomials over the same roster have identical term maps. Binary
/// operations first extend both operands to the union roster.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;
  using Binding = std::variant<Rational, MultiPoly>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, TermMap terms);

  static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {});
  static MultiPoly from_univariate(const UniPoly& p, const std::string& var);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_var(const std::string& name) const;
  /// Throws UnknownVariable.
  std::size_t var_index(const std::string& name) const;
  /// Variables that occur with nonzero exponent in some term.
  std::vector<std::string> used_vars() const;

  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  unsigned degree(const std::string& var) const;
  unsigned total_degree() const;

  /// Same polynomial over a larger (or reordered) roster containing all used variables.
  MultiPoly with_vars(const std::vector<std::string>& roster) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  /// Equality of values (rosters may differ).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(const std::string& var) const;
  /// Replaces the bound variables; unbound variables are kept. The roster
  /// shrinks to the variables still present in the bindings' results and
  /// the unbound remainder.
  MultiPoly substitute(const std::map<std::string, Binding>& bindings) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Conservative enclosure over a box; every roster variable must be bound.
  IntervalValue eval_interval(const std::map<std::string, IntervalValue>& box) const;

  /// Dense univariate form; throws unless only `var` occurs.
  UniPoly to_univariate(const std::string& var) const;

  /// Parseable text, terms in increasing graded lexicographic order.
  std::string to_string() const;

 private:
  void insert(const Exponent& e, const Rational& c);
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact multivariate polynomial arithmetic.
enum class ArithKind { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithKind kind);

}  // namespace lclt
