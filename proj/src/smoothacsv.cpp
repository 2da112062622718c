#include "lclt/smoothacsv.hpp"

#include <cmath>
#include <numeric>

#include "lclt/errors.hpp"

namespace lclt {

const char* const kSliceHint =
    "coefficients may be supported on a lower-dimensional slice; consider setting a tracked variable to 1";

std::string to_string(MinimalStatus s) {
  switch (s) {
    case MinimalStatus::Proved: return "PROVED";
    case MinimalStatus::Refuted: return "REFUTED";
    case MinimalStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::string to_string(StrictStatus s) {
  return s == StrictStatus::ProvedAperiodic ? "PROVED_APERIODIC" : "UNVERIFIED";
}

std::string to_string(NondegenerateStatus s) {
  switch (s) {
    case NondegenerateStatus::Proved: return "PROVED";
    case NondegenerateStatus::Degenerate: return "DEGENERATE";
    case NondegenerateStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "PROVED";
    case Verdict::Conditional: return "CONDITIONAL";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Degenerate: return "DEGENERATE";
  }
  return "?";
}

namespace {

UniPoly specialize(const MultiPoly& p) {
  std::map<std::string, MultiPoly::Binding> ones;
  for (const auto& v : p.vars())
    if (v != "t") ones.emplace(v, Rational(1));
  MultiPoly u = p.substitute(ones);
  return u.to_univariate("t");
}

using AlgPoly = DensePoly<AlgebraicReal>;

int alg_sign(const AlgebraicReal& x) { return x.sign(); }

int count_roots(const std::vector<AlgPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a, alg_sign) - sign_variations(chain, b, alg_sign);
}

}  // namespace

std::shared_ptr<const RhoField> rho_field(const RationalGF& gf, const Rational& precision) {
  UniPoly P = specialize(gf.H);
  AlgebraicNumber rho = smallest_positive_root(P, precision);
  return std::make_shared<const RhoField>(std::move(rho));
}

AlgebraicReal value_at_critical_point(const std::shared_ptr<const RhoField>& field, const MultiPoly& p) {
  return AlgebraicReal(field, specialize(p));
}

namespace {

AlgebraicReal checked_Ht(const RationalGF& gf, const std::shared_ptr<const RhoField>& field) {
  AlgebraicReal Ht = value_at_critical_point(field, gf.H.derivative("t"));
  if (Ht.is_zero()) throw Error(ErrorCode::HtVanishes, "H_t(1,rho) = 0");
  return Ht;
}

}  // namespace

std::vector<AlgebraicReal> critical_direction(const RationalGF& gf, const std::shared_ptr<const RhoField>& field) {
  AlgebraicReal Ht = checked_Ht(gf, field);
  AlgebraicReal rho = AlgebraicReal::generator(field);
  AlgebraicReal denom = rho * Ht;
  std::vector<AlgebraicReal> m;
  for (const auto& z : gf.tracked) m.push_back(value_at_critical_point(field, gf.H.derivative(z)) / denom);
  return m;
}

Matrix<AlgebraicReal> phase_hessian(const RationalGF& gf, const std::shared_ptr<const RhoField>& field,
                                    const std::vector<AlgebraicReal>& m) {
  std::size_t d = gf.d();
  if (m.size() != d) throw Error(ErrorCode::InvalidArgument, "direction has the wrong length");
  AlgebraicReal Ht = checked_Ht(gf, field);
  AlgebraicReal rho = AlgebraicReal::generator(field);
  MultiPoly Hdt = gf.H.derivative("t");

  std::vector<AlgebraicReal> u_t(d);
  for (std::size_t i = 0; i < d; ++i)
    u_t[i] = value_at_critical_point(field, gf.H.derivative(gf.tracked[i]).derivative("t")) / Ht;
  AlgebraicReal u_tt = rho * value_at_critical_point(field, Hdt.derivative("t")) / Ht;
  AlgebraicReal rho_Ht = rho * Ht;

  Matrix<AlgebraicReal> out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      AlgebraicReal u_ij =
          value_at_critical_point(field, gf.H.derivative(gf.tracked[i]).derivative(gf.tracked[j])) / rho_Ht;
      AlgebraicReal v;
      if (i == j)
        v = m[i] + m[i] * m[i] + u_ij - AlgebraicReal(2) * m[i] * u_t[i] + m[i] * m[i] * u_tt;
      else
        v = m[i] * m[j] + u_ij - m[j] * u_t[i] - m[i] * u_t[j] + m[i] * m[j] * u_tt;
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

SegmentResult segment_minimality(const RationalGF& gf, const std::shared_ptr<const RhoField>& field) {
  SegmentResult result;
  try {
    AlgebraicReal rho = AlgebraicReal::generator(field);
    std::size_t t_index = gf.H.var_index("t");
    std::vector<AlgebraicReal> coeffs;
    std::map<unsigned, AlgebraicReal> rho_powers;
    for (const auto& [e, c] : gf.H.terms()) {
      unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
      unsigned b = e[t_index];
      auto it = rho_powers.find(b);
      if (it == rho_powers.end()) it = rho_powers.emplace(b, rho.pow(b)).first;
      if (coeffs.size() <= deg) coeffs.resize(deg + 1, AlgebraicReal(0));
      coeffs[deg] = coeffs[deg] + AlgebraicReal(c) * it->second;
    }
    AlgPoly g(std::move(coeffs));
    AlgPoly s_minus_1(std::vector<AlgebraicReal>{AlgebraicReal(-1), AlgebraicReal(1)});
    while (g.degree() > 0 && g(AlgebraicReal(1)).is_zero()) g = divmod(g, s_minus_1).first;
    g = square_free_part(g);
    if (g.degree() <= 0) {
      result.status = MinimalStatus::Proved;
      result.detail = "g(s) has no roots other than s = 1";
      return result;
    }
    auto chain = sturm_chain(g);
    int n = count_roots(chain, Rational(0), Rational(1));
    if (n == 0) {
      result.status = MinimalStatus::Proved;
      result.detail = "Sturm count of g(s) on (0,1) is 0";
      return result;
    }
    Rational lo(0), hi(1);
    const Rational target = dyadic(20);
    while (hi - lo > target || count_roots(chain, lo, hi) > 1) {
      Rational mid = (lo + hi) / 2;
      if (count_roots(chain, lo, mid) >= 1)
        hi = mid;
      else
        lo = mid;
    }
    result.status = MinimalStatus::Refuted;
    result.witness = IntervalValue(lo, hi);
    result.detail = "g(s) has " + std::to_string(n) + " root(s) in (0,1)";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Indeterminate) throw;
    result.status = MinimalStatus::Indeterminate;
    result.detail = e.what();
  }
  return result;
}

Integer lattice_index(std::vector<std::vector<Integer>> rows, std::size_t dim) {
  Integer index(1);
  std::size_t r0 = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    // Euclid on column col among rows r0.. until a single nonzero remains
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = r0; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == rows.size()) return Integer(0);
      std::swap(rows[r0], rows[best]);
      bool reduced = false;
      for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer qt = rows[r][col] / rows[r0][col];
        for (std::size_t k = col; k < dim; ++k) rows[r][k] -= qt * rows[r0][k];
        reduced = reduced || rows[r][col] != 0;
      }
      if (!reduced) break;
    }
    index *= abs(rows[r0][col]);
    ++r0;
  }
  return index;
}

AperiodicityResult aperiodicity_strictness(const RationalGF& gf) {
  AperiodicityResult out;
  if (!gf.S) {
    out.reason = "H is not of the form 1 - S with S a positive series";
    return out;
  }
  const auto& roster = gf.H.vars();
  MultiPoly num, den;
  try {
    num = gf.S->num.with_vars(roster);
    den = gf.S->den.with_vars(roster);
  } catch (const Error&) {
    out.reason = "S involves variables that cancel from H";
    return out;
  }
  unsigned K = std::min(24u, num.total_degree() + den.total_degree() + 1);
  out.truncation = K;
  auto series = truncated_series(num, den, K);
  std::vector<std::vector<Integer>> rows;
  for (const auto& [e, c] : series) {
    if (sgn(c) < 0) {
      out.reason = "S has a negative coefficient";
      return out;
    }
    std::vector<Integer> row;
    for (auto x : e) row.emplace_back(static_cast<unsigned long>(x));
    rows.push_back(std::move(row));
  }
  out.lattice_index = lattice_index(rows, roster.size());
  if (out.lattice_index == 1) {
    out.status = StrictStatus::ProvedAperiodic;
    out.reason = "exponents of S up to total degree " + std::to_string(K) + " generate Z^" +
                 std::to_string(roster.size());
  } else if (out.lattice_index == 0) {
    out.reason = "exponents of S up to total degree " + std::to_string(K) + " span a lattice of lower rank";
  } else {
    out.reason = "exponents of S up to total degree " + std::to_string(K) + " generate a sublattice of index " +
                 out.lattice_index.get_str();
  }
  return out;
}

LCLTCertificate assemble_certificate(const RationalGF& gf, const Rational& precision) {
  LCLTCertificate cert;
  cert.precision = precision;
  cert.variables = gf.tracked;
  cert.combinatorial = gf.combinatorial;
  cert.field = rho_field(gf, precision);
  cert.field->interval(precision);
  cert.rho = cert.field->algebraic_number();
  AlgebraicReal rho = AlgebraicReal::generator(cert.field);

  // Step 5 conditions first: both are needed for every later formula
  AlgebraicReal Ht = checked_Ht(gf, cert.field);
  cert.Ht_nonzero = true;
  AlgebraicReal G = value_at_critical_point(cert.field, gf.G);
  if (G.is_zero()) throw Error(ErrorCode::GVanishes, "G(1,rho) = 0");
  cert.G_nonzero = true;
  cert.C0 = -G / (rho * Ht);

  cert.m = critical_direction(gf, cert.field);
  cert.hessian = phase_hessian(gf, cert.field, cert.m);
  cert.hess_det = determinant(cert.hessian);
  if (cert.hess_det.is_zero()) {
    cert.nondegenerate = NondegenerateStatus::Degenerate;
    cert.notes.push_back(kSliceHint);
  } else {
    cert.nondegenerate = NondegenerateStatus::Proved;
    cert.hess_inv = inverse(cert.hessian);
    bool pd = true;
    for (std::size_t k = 1; k <= cert.d() && pd; ++k) {
      Matrix<AlgebraicReal> minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = cert.hessian(i, j);
      pd = determinant(minor).sign() > 0;
    }
    cert.positive_definite = pd;
  }

  cert.minimal = segment_minimality(gf, cert.field);
  cert.strictly_minimal = aperiodicity_strictness(gf);

  if (gf.combinatorial) {
    for (std::size_t k = 0; k < cert.d(); ++k)
      if (cert.m[k].sign() <= 0 && gf.H.used_vars().size() > 0 &&
          std::find(gf.H.used_vars().begin(), gf.H.used_vars().end(), gf.tracked[k]) != gf.H.used_vars().end())
        cert.notes.push_back("m_" + std::to_string(k + 1) + " is not positive");
  } else {
    cert.notes.push_back("non-negativity of the coefficients is not asserted");
  }

  if (cert.minimal.status == MinimalStatus::Refuted)
    cert.verdict = Verdict::Refuted;
  else if (cert.nondegenerate == NondegenerateStatus::Degenerate)
    cert.verdict = Verdict::Degenerate;
  else if (cert.minimal.status == MinimalStatus::Proved &&
           cert.strictly_minimal.status == StrictStatus::ProvedAperiodic &&
           cert.nondegenerate == NondegenerateStatus::Proved && cert.Ht_nonzero && cert.G_nonzero &&
           cert.combinatorial)
    cert.verdict = Verdict::Proved;
  else
    cert.verdict = Verdict::Conditional;
  return cert;
}

void require_nondegenerate(const LCLTCertificate& cert) {
  if (cert.nondegenerate == NondegenerateStatus::Proved) return;
  throw Error(ErrorCode::DegenerateHessian, std::string("det H = 0; ") + kSliceHint);
}

double LogValue::value() const { return sign * std::exp(log_abs); }

namespace {

constexpr long double kEps = 1e-15L;

struct Approx {
  long double value;
  long double log_abs;
};

Approx approx_of(const AlgebraicReal& x) {
  IntervalValue iv = x.enclosure(dyadic(90));
  Rational mid = iv.midpoint();
  return {static_cast<long double>(mid.get_d()), static_cast<long double>(log_abs(mid))};
}

LogValue amplitude_impl(const LCLTCertificate& cert, long n, long double extra_log, long double extra_err) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  require_nondegenerate(cert);
  int det_sign = cert.hess_det.sign();
  if (det_sign < 0) throw Error(ErrorCode::InvalidArgument, "model density needs det H > 0");
  Approx rho = approx_of(AlgebraicReal::generator(cert.field));
  Approx c0 = approx_of(cert.C0);
  Approx det = approx_of(cert.hess_det);
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  long double dn = static_cast<long double>(n);
  long double half_d = static_cast<long double>(cert.d()) / 2.0L;
  long double terms[] = {-dn * rho.log_abs, c0.log_abs, -half_d * std::log(two_pi * dn), -0.5L * det.log_abs,
                         extra_log};
  long double log_abs = 0, magnitude = 0;
  for (auto x : terms) {
    log_abs += x;
    magnitude += std::fabs(x);
  }
  LogValue out;
  out.sign = cert.C0.sign();
  out.log_abs = static_cast<double>(log_abs);
  out.rel_error = static_cast<double>(std::expm1(kEps * (magnitude + 8) + extra_err));
  return out;
}

}  // namespace

LogValue amplitude(const LCLTCertificate& cert, long n) { return amplitude_impl(cert, n, 0, 0); }

LogValue density_at(const LCLTCertificate& cert, const std::vector<long>& s, long n) {
  if (s.size() != cert.d()) throw Error(ErrorCode::InvalidArgument, "query has the wrong dimension");
  require_nondegenerate(cert);
  std::size_t d = cert.d();
  std::vector<long double> dev(d);
  for (std::size_t i = 0; i < d; ++i)
    dev[i] = static_cast<long double>(s[i]) - static_cast<long double>(n) * approx_of(cert.m[i]).value;
  long double q = 0, q_mag = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long double term = dev[i] * approx_of((*cert.hess_inv)(i, j)).value * dev[j];
      q += term;
      q_mag += std::fabs(term);
    }
  long double exponent = -q / (2.0L * static_cast<long double>(n));
  long double err = kEps * (q_mag / (2.0L * static_cast<long double>(n)) + 1) * (1 + static_cast<long double>(n));
  return amplitude_impl(cert, n, exponent, err);
}

SymbolicAmplitude symbolic_amplitude(const LCLTCertificate& cert) {
  require_nondegenerate(cert);
  SymbolicAmplitude out;
  out.d = cert.d();
  std::string growth, constant;
  if (cert.field->is_rational()) {
    Rational rho = cert.rho.rational_value();
    out.rho = rho;
    Rational inv = 1 / rho;
    growth = inv.get_den() == 1 ? inv.get_str() + "^n" : "(" + inv.get_str() + ")^n";
  } else {
    growth = "rho^(-n)";
  }
  std::string order;
  if (out.d > 0)
    order = out.d % 2 == 0 ? " * n^(-" + std::to_string(out.d / 2) + ")" : " * n^(-" + std::to_string(out.d) + "/2)";
  if (cert.C0.is_rational() && cert.hess_det.is_rational()) {
    Rational c0 = cert.C0.rational_value();
    Rational K = c0 * c0 / (Rational(Integer(1) << static_cast<mp_bitcnt_t>(out.d)) * cert.hess_det.rational_value());
    K.canonicalize();
    out.K = K;
    std::string pi = out.d == 0 ? "" : (out.d == 1 ? "/pi" : "/pi^" + std::to_string(out.d));
    constant = std::string(sgn(c0) < 0 ? "-" : "") + "sqrt(" + K.get_str() + pi + ")";
  } else {
    constant = "C0 * (2*pi)^(-" + std::to_string(out.d) + "/2) * det(H)^(-1/2)";
  }
  out.text = "A_n = " + growth + order + " * " + constant;
  return out;
}

}  // namespace lclt
