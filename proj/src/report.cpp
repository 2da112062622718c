#include "lclt/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lclt/linfam.hpp"

namespace lclt {

namespace {

using ojson = nlohmann::ordered_json;

int digits_for(const Rational& precision) {
  double l = -log_abs(precision) / std::log(10.0);
  return std::max(6, static_cast<int>(std::ceil(l)) + 1);
}

std::string with_bound(const std::string& decimal, const std::string& bound) { return decimal + " +/- " + bound; }

std::string float_leaf(long double v, long double abs_error) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  // the printed value adds at most half an ulp of the 17-digit rendering
  long double err = abs_error + std::fabs(v) * 1e-16L;
  char ebuf[32];
  std::snprintf(ebuf, sizeof ebuf, "%.0Le", err);
  return with_bound(buf, ebuf);
}

ojson vector_json(const std::vector<AlgebraicReal>& v, const Rational& precision) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(numeric_leaf(x, precision));
  return out;
}

ojson matrix_json(const Matrix<AlgebraicReal>& m, const Rational& precision) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(numeric_leaf(m(i, j), precision));
    out.push_back(row);
  }
  return out;
}

std::string polynomial_order(std::size_t d) {
  Rational q(-static_cast<long>(d), 2);
  q.canonicalize();
  return q.get_str();
}

ojson amplitude_json(const LCLTCertificate& cert) {
  ojson out;
  AlgebraicReal rho = AlgebraicReal::generator(cert.field);
  Rational rho_mid = rho.enclosure(dyadic(100)).midpoint();
  bool exact_log = false;
  if (cert.field->is_rational()) {
    Rational r = cert.rho.rational_value();
    if (r.get_num() == 1 && mpz_popcount(r.get_den_mpz_t()) == 1) {
      out["log2_growth_per_n"] = with_bound(std::to_string(mpz_sizeinbase(r.get_den_mpz_t(), 2) - 1), "0");
      exact_log = true;
    }
  }
  if (!exact_log) {
    long double v = -static_cast<long double>(log_abs(rho_mid)) / std::log(2.0L);
    out["log2_growth_per_n"] = float_leaf(v, 1e-15L);
  }
  out["polynomial_order"] = polynomial_order(cert.d());
  out["constant"] = nullptr;
  if (cert.nondegenerate == NondegenerateStatus::Proved && cert.hess_det.sign() > 0) {
    // constant = rho * A_1
    LogValue a1 = amplitude(cert, 1);
    long double log_c = static_cast<long double>(a1.log_abs) + static_cast<long double>(log_abs(rho_mid));
    long double v = a1.sign * std::exp(log_c);
    out["constant"] = float_leaf(v, std::fabs(v) * a1.rel_error);
    out["symbolic"] = symbolic_amplitude(cert).text;
  }
  return out;
}

ojson statuses_json(const LCLTCertificate& cert) {
  ojson out;
  out["minimal"] = to_string(cert.minimal.status);
  if (cert.minimal.witness)
    out["minimal_witness"] = {cert.minimal.witness->lo().get_str(), cert.minimal.witness->hi().get_str()};
  if (!cert.minimal.detail.empty()) out["minimal_detail"] = cert.minimal.detail;
  out["strictly_minimal"] = to_string(cert.strictly_minimal.status);
  out["lattice_index"] = cert.strictly_minimal.lattice_index.get_str();
  if (!cert.strictly_minimal.reason.empty()) out["strictly_minimal_reason"] = cert.strictly_minimal.reason;
  out["nondegenerate"] = to_string(cert.nondegenerate);
  out["Ht_nonzero"] = cert.Ht_nonzero;
  out["G_nonzero"] = cert.G_nonzero;
  out["combinatorial"] = cert.combinatorial;
  if (cert.positive_definite)
    out["positive_definite"] = *cert.positive_definite;
  else
    out["positive_definite"] = nullptr;
  return out;
}

std::string short_decimal(const AlgebraicReal& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x.enclosure(dyadic(60)).midpoint().get_d());
  return buf;
}

}  // namespace

std::string numeric_leaf(const AlgebraicReal& x, const Rational& precision) {
  int digits = digits_for(precision);
  if (x.is_rational()) {
    Rational q = x.rational_value();
    if (has_finite_decimal(q) && to_exact_decimal(q).size() <= static_cast<std::size_t>(digits + 24))
      return with_bound(to_exact_decimal(q), "0");
    std::string dec = to_decimal(q, digits);
    return with_bound(dec, format_bound(q - parse_rational(dec)));
  }
  IntervalValue iv = x.enclosure(precision);
  std::string dec = to_decimal(iv.midpoint(), digits);
  Rational center = parse_rational(dec);
  Rational bound = std::max(abs(iv.hi() - center), abs(center - iv.lo()));
  return with_bound(dec, format_bound(bound));
}

std::optional<LUReport> lu_report(const RationalGF& gf, const LCLTCertificate& cert) {
  if (!gf.linear_family || gf.linear_family->q_list.size() != cert.d()) return std::nullopt;
  LUReport out;
  try {
    LinearFamilyData data = linear_family_data(*gf.linear_family, cert.field);
    LUFactors factors = lu_factors(data);
    LUCheck check = verify_lu(cert.hessian, factors);
    for (std::size_t j = 0; j < cert.d(); ++j) out.L_diag.push_back(factors.L(j, j));
    out.verified = check.verified;
    if (!check.verified)
      out.failure = "H*U - L is nonzero at (" + std::to_string(check.row + 1) + "," + std::to_string(check.col + 1) + ")";
  } catch (const Error& e) {
    out.failure = e.what();
  }
  return out;
}

nlohmann::ordered_json certificate_json(const RationalGF& gf, const LCLTCertificate& cert,
                                        const std::optional<LUReport>& lu) {
  const Rational& precision = cert.precision;
  ojson out;
  out["input"] = gf.to_string();
  out["variables"] = cert.variables;
  out["verdict"] = to_string(cert.verdict);

  ojson rho;
  ojson minpoly = ojson::array();
  for (const auto& c : cert.rho.minpoly.coeffs()) minpoly.push_back(c.get_str());
  rho["minpoly"] = minpoly;
  rho["interval"] = {cert.rho.interval.lo().get_str(), cert.rho.interval.hi().get_str()};
  rho["decimal"] = numeric_leaf(AlgebraicReal::generator(cert.field), precision);
  out["rho"] = rho;

  out["m"] = vector_json(cert.m, precision);
  out["hessian"] = matrix_json(cert.hessian, precision);
  out["hess_det"] = numeric_leaf(cert.hess_det, precision);
  if (cert.hess_inv)
    out["hess_inv"] = matrix_json(*cert.hess_inv, precision);
  else
    out["hess_inv"] = nullptr;
  out["C0"] = numeric_leaf(cert.C0, precision);
  out["statuses"] = statuses_json(cert);
  out["amplitude"] = amplitude_json(cert);
  if (lu) {
    ojson l;
    l["verified"] = lu->verified;
    l["L_diag"] = vector_json(lu->L_diag, precision);
    if (!lu->failure.empty()) l["failure"] = lu->failure;
    out["lu"] = l;
  }
  out["notes"] = cert.notes;
  if (cert.verdict == Verdict::Degenerate) {
    out["error"] = std::string(error_code_name(ErrorCode::DegenerateHessian));
    out["hint"] = kSliceHint;
  } else {
    out["error"] = nullptr;
  }
  return out;
}

nlohmann::ordered_json error_json(const Error& e) {
  ojson out;
  out["error"] = std::string(error_code_name(e.code()));
  out["message"] = e.what();
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) out["position"] = s->position();
  return out;
}

std::string certificate_summary(const RationalGF& gf, const LCLTCertificate& cert) {
  std::ostringstream out;
  std::size_t d = cert.d();
  out << "F = " << gf.to_string() << "\n";
  out << "tracked:";
  for (const auto& v : cert.variables) out << " " << v;
  out << "\n";
  out << "rho = " << short_decimal(AlgebraicReal::generator(cert.field)) << ", root of "
      << to_string(cert.rho.minpoly, "t") << "\n";
  out << "m = [";
  for (std::size_t i = 0; i < d; ++i) out << (i ? ", " : "") << short_decimal(cert.m[i]);
  out << "]\n";
  out << "H = [";
  for (std::size_t i = 0; i < d; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < d; ++j) out << (j ? ", " : "") << short_decimal(cert.hessian(i, j));
    out << "]";
  }
  out << "]\n";
  out << "det H = " << short_decimal(cert.hess_det) << ", C0 = " << short_decimal(cert.C0) << "\n";
  out << "minimality: " << to_string(cert.minimal.status)
      << ", strict minimality: " << to_string(cert.strictly_minimal.status)
      << ", nondegeneracy: " << to_string(cert.nondegenerate) << "\n";
  if (cert.nondegenerate == NondegenerateStatus::Proved && cert.hess_det.sign() > 0) {
    out << symbolic_amplitude(cert).text << "\n";
    out << "sup_s | f_{s,n} / A_n - exp(-(s - n*m)^T H^-1 (s - n*m) / (2n)) | -> 0";
    if (cert.verdict != Verdict::Proved) out << " (not certified)";
    out << "\n";
  }
  for (const auto& note : cert.notes) out << "note: " << note << "\n";
  out << "verdict: " << to_string(cert.verdict) << "\n";
  return out.str();
}

}  // namespace lclt
