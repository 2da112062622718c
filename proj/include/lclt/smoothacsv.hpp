#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lclt/algebraic_real.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/matrix.hpp"
#include "lclt/realroots.hpp"

namespace lclt {

enum class MinimalStatus { Proved, Refuted, Indeterminate };
enum class StrictStatus { ProvedAperiodic, Unverified };
enum class NondegenerateStatus { Proved, Degenerate, Indeterminate };
enum class Verdict { Proved, Conditional, Refuted, Degenerate };

std::string to_string(MinimalStatus s);
std::string to_string(StrictStatus s);
std::string to_string(NondegenerateStatus s);
std::string to_string(Verdict v);

struct SegmentResult {
  MinimalStatus status = MinimalStatus::Indeterminate;
  /// Isolating interval of an interior root of g(s) = H(s,...,s,s*rho) when refuted.
  std::optional<IntervalValue> witness;
  std::string detail;
};

struct AperiodicityResult {
  StrictStatus status = StrictStatus::Unverified;
  /// Index of the exponent lattice in Z^(d+1); 0 when rank deficient or not computed.
  Integer lattice_index{0};
  /// Total degree up to which the support of S was enumerated.
  unsigned truncation = 0;
  std::string reason;
};

struct LCLTCertificate {
  std::shared_ptr<const RhoField> field;
  AlgebraicNumber rho;
  std::vector<std::string> variables;
  std::vector<AlgebraicReal> m;
  Matrix<AlgebraicReal> hessian;
  AlgebraicReal hess_det;
  std::optional<Matrix<AlgebraicReal>> hess_inv;
  AlgebraicReal C0;

  SegmentResult minimal;
  AperiodicityResult strictly_minimal;
  NondegenerateStatus nondegenerate = NondegenerateStatus::Indeterminate;
  bool Ht_nonzero = false;
  bool G_nonzero = false;
  bool combinatorial = false;
  /// All leading principal minors positive (informational only).
  std::optional<bool> positive_definite;

  Verdict verdict = Verdict::Conditional;
  std::vector<std::string> notes;
  Rational precision;

  std::size_t d() const { return m.size(); }
};

/// Root field of rho, the least positive root of P(t) = H(1,...,1,t).
std::shared_ptr<const RhoField> rho_field(const RationalGF& gf, const Rational& precision);

/// Value at (1,...,1,rho) of a polynomial in the gf roster.
AlgebraicReal value_at_critical_point(const std::shared_ptr<const RhoField>& field, const MultiPoly& p);

/// m_k = H_{z_k}(1,rho) / (rho H_t(1,rho)). Throws HtVanishes.
std::vector<AlgebraicReal> critical_direction(const RationalGF& gf, const std::shared_ptr<const RhoField>& field);

/// Phase Hessian at (1,rho) in direction (m,1). Throws HtVanishes.
Matrix<AlgebraicReal> phase_hessian(const RationalGF& gf, const std::shared_ptr<const RhoField>& field,
                                    const std::vector<AlgebraicReal>& m);

/// Roots of g(s) = H(s,...,s,s*rho) in (0,1), counted by a Sturm sequence over Q(rho).
SegmentResult segment_minimality(const RationalGF& gf, const std::shared_ptr<const RhoField>& field);

/// Exponent lattice of the support of S, when H = 1 - S with S a positive series.
AperiodicityResult aperiodicity_strictness(const RationalGF& gf);

/// Integer lattice index of the rows (0 when rank deficient).
Integer lattice_index(std::vector<std::vector<Integer>> rows, std::size_t dim);

/// Runs the full schema. Throws HtVanishes, GVanishes, NoPositiveRoot.
/// A singular Hessian yields verdict Degenerate rather than an exception.
LCLTCertificate assemble_certificate(const RationalGF& gf, const Rational& precision = parse_rational("1e-30"));

/// Throws DegenerateHessian (with the slice hint) unless the certificate is nondegenerate.
void require_nondegenerate(const LCLTCertificate& cert);

extern const char* const kSliceHint;

/// A real number as sign * exp(log_abs), with a relative error bound.
struct LogValue {
  int sign = 0;
  double log_abs = 0.0;
  double rel_error = 0.0;
  double value() const;
};

/// A_n = rho^-n C0 (2 pi n)^(-d/2) det^(-1/2).
LogValue amplitude(const LCLTCertificate& cert, long n);

/// A_n times exp(-(s - n m)^T H^-1 (s - n m) / (2n)).
LogValue density_at(const LCLTCertificate& cert, const std::vector<long>& s, long n);

/// A_n = rho^-n n^(-d/2) sqrt(K / pi^d) with K = C0^2 / (2^d det H) when K is rational.
struct SymbolicAmplitude {
  std::optional<Rational> rho;
  std::optional<Rational> K;
  std::size_t d = 0;
  std::string text;
};
SymbolicAmplitude symbolic_amplitude(const LCLTCertificate& cert);

}  // namespace lclt
