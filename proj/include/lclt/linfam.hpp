#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lclt/algebraic_real.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/matrix.hpp"

namespace lclt {

/// A linear family evaluated at rho. Vectors indexed by k = 0..d-1 stand for
/// q_1..q_d; the prefix sums are indexed by j = 1..d+1 (entry 0 is unused).
struct LinearFamilyData {
  LinearFamily family;
  std::shared_ptr<const RhoField> field;
  AlgebraicReal rho;
  AlgebraicReal P1, P2;  // P'(rho), P''(rho)
  AlgebraicReal q, q1;   // q(rho), q'(rho)
  std::vector<AlgebraicReal> qk, qk1;
  std::vector<AlgebraicReal> A, B, D;

  std::size_t d() const { return qk.size(); }
  /// Every q_k(rho) > 0.
  bool qk_positive() const;
};

/// Throws DivisionByZero when a denominator of q or q_k vanishes at rho.
LinearFamilyData linear_family_data(const LinearFamily& family, const std::shared_ptr<const RhoField>& field);

/// The closed-form d x d Hessian of the linear family.
Matrix<AlgebraicReal> hessian_closed_form(const LinearFamilyData& data);

/// Closed-form determinant of the linear-family Hessian.
AlgebraicReal det_closed_form(const LinearFamilyData& data);

struct LUFactors {
  Matrix<AlgebraicReal> U;
  Matrix<AlgebraicReal> L;
  /// r_1..r_{d+1} at indices 1..d+1 (index 0 unused).
  std::vector<AlgebraicReal> r;
  /// g(i,j) for i < j and s(i,j) for i > j; other entries are 0.
  Matrix<AlgebraicReal> g;
  Matrix<AlgebraicReal> s;
};

/// Throws RjVanishes naming the first j with r_j = 0.
LUFactors lu_factors(const LinearFamilyData& data);

struct LUCheck {
  bool verified = false;
  /// First offending entry of H*U - L (0-based) when not verified.
  std::size_t row = 0, col = 0;
  AlgebraicReal residual;
  /// Product of the diagonal of L (set when verified).
  AlgebraicReal det;
};

/// Exact check that H*U = L.
LUCheck verify_lu(const Matrix<AlgebraicReal>& hessian, const LUFactors& factors);

struct LUIntervalCheck {
  bool verified = false;
  /// Largest enclosure width among the entries of H*U - L.
  Rational max_width;
  std::size_t row = 0, col = 0;
};

/// Interval check: every entry of H*U - L, computed in interval arithmetic
/// from enclosures of width <= entry_width, contains 0 and is narrower than max_width.
LUIntervalCheck verify_lu_interval(const Matrix<AlgebraicReal>& hessian, const LUFactors& factors,
                                   const Rational& entry_width, const Rational& max_width);

struct PositivityCheck {
  bool holds = false;
  bool equality = false;
};

/// z f'(z)^2 <= f(z) (z f''(z) + f'(z)) for f with non-negative coefficients and f(0) = 0.
PositivityCheck positivity_inequality_check(const UniPoly& f, const Rational& z);

}  // namespace lclt
