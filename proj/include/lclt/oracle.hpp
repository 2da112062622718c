#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lclt/gfparse.hpp"
#include "lclt/rational.hpp"
#include "lclt/smoothacsv.hpp"

namespace lclt {

/// Coefficients f_{s,n} of F = G/H for n <= N, one dense box per n.
///
/// Slice n covers 0 <= s_k <= bound(n)[k] and stores D^(n+1) f_{s,n} as an
/// integer, where D is the lcm of the coefficient denominators of G and H
/// (D = 1 for integer inputs). Cells are row-major with the last tracked
/// variable varying fastest, so linear order is lexicographic in s.
class CoefficientTensor {
 public:
  std::size_t d() const { return variables_.size(); }
  long N() const { return static_cast<long>(slices_.size()) - 1; }
  const std::vector<std::string>& variables() const { return variables_; }
  const Integer& denominator() const { return D_; }

  const std::vector<long>& bounds(long n) const { return bounds_.at(static_cast<std::size_t>(n)); }
  std::size_t slice_size(long n) const { return slices_.at(static_cast<std::size_t>(n)).size(); }
  std::vector<long> index_of(long n, std::size_t linear) const;
  /// Linear index of s in slice n, or nullopt outside the box.
  std::optional<std::size_t> linear_of(long n, const std::vector<long>& s) const;

  /// D^(n+1) f_{s,n} at a linear index.
  const Integer& scaled(long n, std::size_t linear) const { return slices_[static_cast<std::size_t>(n)][linear]; }
  /// D^(n+1).
  Integer scale(long n) const;
  Rational coefficient(long n, const std::vector<long>& s) const;
  Rational coefficient_at(long n, std::size_t linear) const;
  /// log |f_{s,n}| (-inf for 0).
  double log_abs_at(long n, std::size_t linear) const;
  Rational slice_total(long n) const;

 private:
  friend CoefficientTensor expand(const RationalGF& gf, long N);
  std::vector<std::string> variables_;
  Integer D_{1};
  std::vector<std::vector<long>> bounds_;
  std::vector<std::vector<Integer>> slices_;
};

/// Memory budget in MiB from LCLT_MEMORY_BUDGET_MB (default 2048).
std::size_t memory_budget_mb();

/// Exact expansion by the convolution recurrence. Throws BudgetExceeded, UnboundedSupport.
CoefficientTensor expand(const RationalGF& gf, long N);

struct EmpiricalStats {
  std::vector<long> peak_index;
  /// Number of cells attaining the maximum.
  std::size_t tie_count = 0;
  std::vector<double> mean;
  std::vector<std::vector<double>> covariance;
};

/// Throws EmptySlice when the slice sums to 0.
EmpiricalStats empirical_stats(const CoefficientTensor& tensor, long n);

struct GapValue {
  double value = 0.0;
  double rounding_bound = 0.0;
  std::vector<long> argmax;
};

/// sup_s n^(d/2) | rho^n f_{s,n} - model(s) | over the support box of slice n.
/// Throws DegenerateHessian for degenerate certificates.
GapValue lclt_gap(const CoefficientTensor& tensor, const LCLTCertificate& cert, long n);

/// Writes "n,s1,...,sd,coeff,normalized[,model]" for every cell of slice n.
/// With a nondegenerate certificate, normalized = f/A_n and model = exp(-Q/(2n));
/// otherwise normalized = f/max and there is no model column.
void emit_plot_data(const CoefficientTensor& tensor, const LCLTCertificate* cert, long n, const std::string& path);

/// Writes "n,s1,...,sd,coeff" for every nonzero coefficient with n <= N.
void emit_expansion(const CoefficientTensor& tensor, const std::string& path);

/// 17 significant digits, locale independent.
std::string format_double(double x);

}  // namespace lclt
