#include "lclt/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

struct Term {
  std::vector<long> a;  // z-exponents
  long b;               // t-exponent
  Integer c;
};

std::vector<Term> integer_terms(const MultiPoly& p, const std::vector<std::string>& tracked, const Integer& D) {
  std::size_t t_index = p.var_index("t");
  std::vector<std::size_t> z_index;
  for (const auto& z : tracked) z_index.push_back(p.var_index(z));
  std::vector<Term> out;
  for (const auto& [e, c] : p.terms()) {
    Term term;
    for (auto k : z_index) term.a.push_back(static_cast<long>(e[k]));
    term.b = static_cast<long>(e[t_index]);
    Rational scaled = c * D;
    term.c = scaled.get_num();
    out.push_back(std::move(term));
  }
  return out;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::vector<long> strides_of(const std::vector<long>& bounds) {
  std::vector<long> strides(bounds.size(), 1);
  for (std::size_t k = bounds.size(); k-- > 1;) strides[k - 1] = strides[k] * (bounds[k] + 1);
  return strides;
}

}  // namespace

std::vector<long> CoefficientTensor::index_of(long n, std::size_t linear) const {
  const auto& b = bounds(n);
  std::vector<long> s(b.size());
  for (std::size_t k = b.size(); k-- > 0;) {
    long dim = b[k] + 1;
    s[k] = static_cast<long>(linear % static_cast<std::size_t>(dim));
    linear /= static_cast<std::size_t>(dim);
  }
  return s;
}

std::optional<std::size_t> CoefficientTensor::linear_of(long n, const std::vector<long>& s) const {
  if (n < 0 || n > N() || s.size() != d()) return std::nullopt;
  const auto& b = bounds(n);
  std::size_t linear = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (s[k] < 0 || s[k] > b[k]) return std::nullopt;
    linear = linear * static_cast<std::size_t>(b[k] + 1) + static_cast<std::size_t>(s[k]);
  }
  return linear;
}

Integer CoefficientTensor::scale(long n) const { return power(D_, static_cast<unsigned long>(n + 1)); }

Rational CoefficientTensor::coefficient_at(long n, std::size_t linear) const {
  if (D_ == 1) return Rational(scaled(n, linear));
  Rational q(scaled(n, linear), scale(n));
  q.canonicalize();
  return q;
}

Rational CoefficientTensor::coefficient(long n, const std::vector<long>& s) const {
  auto linear = linear_of(n, s);
  return linear ? coefficient_at(n, *linear) : Rational(0);
}

double CoefficientTensor::log_abs_at(long n, std::size_t linear) const {
  double l = log_abs(scaled(n, linear));
  if (D_ != 1) l -= static_cast<double>(n + 1) * log_abs(D_);
  return l;
}

Rational CoefficientTensor::slice_total(long n) const {
  Integer sum(0);
  for (const auto& x : slices_.at(static_cast<std::size_t>(n))) sum += x;
  Rational q(sum, scale(n));
  q.canonicalize();
  return q;
}

std::size_t memory_budget_mb() {
  if (const char* env = std::getenv("LCLT_MEMORY_BUDGET_MB")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2048;
}

CoefficientTensor expand(const RationalGF& gf, long N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be non-negative");
  CoefficientTensor out;
  out.variables_ = gf.tracked;
  std::size_t d = gf.d();

  Integer D(1);
  for (const auto* p : {&gf.G, &gf.H})
    for (const auto& [e, c] : p->terms()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  out.D_ = D;
  auto G = integer_terms(gf.G, gf.tracked, D);
  auto H = integer_terms(gf.H, gf.tracked, D);

  // growth rate of each z-exponent per unit of t-degree
  std::vector<Rational> R(d, Rational(0));
  for (const auto& h : H) {
    bool constant = h.b == 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (h.a[k] == 0) continue;
      if (constant)
        throw Error(ErrorCode::UnboundedSupport,
                    "H has a term in " + gf.tracked[k] + " without t, so slices have unbounded support");
      R[k] = std::max(R[k], Rational(h.a[k], h.b));
    }
  }
  for (auto& r : R) r.canonicalize();

  out.bounds_.resize(static_cast<std::size_t>(N + 1));
  long double cells = 0;
  for (long n = 0; n <= N; ++n) {
    std::vector<long> b(d, 0);
    for (const auto& g : G) {
      if (g.b > n) continue;
      for (std::size_t k = 0; k < d; ++k) b[k] = std::max(b[k], floor_of(Rational(g.a[k]) + R[k] * (n - g.b)));
    }
    long double c = 1;
    for (auto x : b) c *= static_cast<long double>(x + 1);
    cells += c;
    out.bounds_[static_cast<std::size_t>(n)] = std::move(b);
  }
  // one mpz header plus a few limbs per cell
  long double estimate_mb = cells * 48.0L / (1024.0L * 1024.0L);
  std::size_t budget = memory_budget_mb();
  if (estimate_mb > static_cast<long double>(budget))
    throw Error(ErrorCode::BudgetExceeded, "expansion needs about " + std::to_string(static_cast<long>(estimate_mb)) +
                                               " MiB, budget is " + std::to_string(budget) +
                                               " MiB (LCLT_MEMORY_BUDGET_MB)");

  std::vector<Integer> d_powers{Integer(1)};
  for (long n = 1; n <= N + 1; ++n) d_powers.push_back(d_powers.back() * D);

  out.slices_.resize(static_cast<std::size_t>(N + 1));
  for (long n = 0; n <= N; ++n) {
    const auto& bn = out.bounds_[static_cast<std::size_t>(n)];
    auto strides = strides_of(bn);
    std::size_t size = 1;
    for (auto x : bn) size *= static_cast<std::size_t>(x + 1);
    std::vector<Integer> cur(size, Integer(0));

    for (const auto& g : G) {
      if (g.b != n) continue;
      std::size_t idx = 0;
      for (std::size_t k = 0; k < d; ++k) idx += static_cast<std::size_t>(g.a[k] * strides[k]);
      cur[idx] += d_powers[static_cast<std::size_t>(n)] * g.c;
    }
    for (const auto& h : H) {
      if (h.b < 1 || h.b > n) continue;
      long src_n = n - h.b;
      const auto& src = out.slices_[static_cast<std::size_t>(src_n)];
      Integer coef = -h.c * d_powers[static_cast<std::size_t>(h.b - 1)];
      long offset = 0;
      for (std::size_t k = 0; k < d; ++k) offset += h.a[k] * strides[k];
      const auto& bs = out.bounds_[static_cast<std::size_t>(src_n)];
      std::vector<long> s(d, 0);
      for (std::size_t lin = 0; lin < src.size(); ++lin) {
        if (lin > 0) {
          for (std::size_t k = d; k-- > 0;) {
            if (++s[k] <= bs[k]) break;
            s[k] = 0;
          }
        }
        if (src[lin] == 0) continue;
        long target = offset;
        for (std::size_t k = 0; k < d; ++k) target += s[k] * strides[k];
        mpz_addmul(cur[static_cast<std::size_t>(target)].get_mpz_t(), coef.get_mpz_t(), src[lin].get_mpz_t());
      }
    }
    out.slices_[static_cast<std::size_t>(n)] = std::move(cur);
  }
  return out;
}

EmpiricalStats empirical_stats(const CoefficientTensor& tensor, long n) {
  if (n < 0 || n > tensor.N()) throw Error(ErrorCode::InvalidArgument, "slice index out of range");
  std::size_t d = tensor.d();
  Integer total(0);
  std::vector<Integer> first(d, Integer(0));
  std::vector<std::vector<Integer>> second(d, std::vector<Integer>(d, Integer(0)));
  for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) {
    const Integer& f = tensor.scaled(n, lin);
    if (f == 0) continue;
    total += f;
    auto s = tensor.index_of(n, lin);
    for (std::size_t k = 0; k < d; ++k) {
      first[k] += f * s[k];
      for (std::size_t l = k; l < d; ++l) second[k][l] += f * (s[k] * s[l]);
    }
  }
  if (total == 0) throw Error(ErrorCode::EmptySlice, "slice " + std::to_string(n) + " sums to 0");
  int sign = sgn(total);

  EmpiricalStats out;
  std::size_t best = 0;
  for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) {
    Integer v = tensor.scaled(n, lin) * sign, cur = tensor.scaled(n, best) * sign;
    if (v > cur) {
      best = lin;
      out.tie_count = 1;
    } else if (v == cur) {
      ++out.tie_count;
    }
  }
  out.peak_index = tensor.index_of(n, best);

  std::vector<Rational> mean(d);
  for (std::size_t k = 0; k < d; ++k) {
    mean[k] = Rational(first[k], total);
    mean[k].canonicalize();
    out.mean.push_back(mean[k].get_d());
  }
  out.covariance.assign(d, std::vector<double>(d, 0.0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k; l < d; ++l) {
      Rational m2(second[k][l], total);
      m2.canonicalize();
      double c = Rational(m2 - mean[k] * mean[l]).get_d();
      out.covariance[k][l] = c;
      out.covariance[l][k] = c;
    }
  return out;
}

namespace {

struct Model {
  long double log_rho;
  long double constant;  // C0 (2 pi n)^(-d/2) det^(-1/2)
  std::vector<long double> m;
  std::vector<std::vector<long double>> inv;
};

long double ld(const AlgebraicReal& x) {
  return static_cast<long double>(x.enclosure(dyadic(100)).midpoint().get_d());
}

Model make_model(const LCLTCertificate& cert, long n) {
  require_nondegenerate(cert);
  Model md;
  IntervalValue rho = AlgebraicReal::generator(cert.field).enclosure(dyadic(100));
  md.log_rho = static_cast<long double>(log_abs(rho.midpoint()));
  std::size_t d = cert.d();
  long double det = ld(cert.hess_det);
  if (det <= 0) throw Error(ErrorCode::InvalidArgument, "model density needs det H > 0");
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  md.constant = ld(cert.C0) * std::pow(two_pi * static_cast<long double>(n), -static_cast<long double>(d) / 2) /
                std::sqrt(det);
  for (std::size_t i = 0; i < d; ++i) md.m.push_back(ld(cert.m[i]));
  md.inv.assign(d, std::vector<long double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) md.inv[i][j] = ld((*cert.hess_inv)(i, j));
  return md;
}

long double gaussian(const Model& md, const std::vector<long>& s, long n) {
  std::size_t d = s.size();
  std::vector<long double> dev(d);
  for (std::size_t i = 0; i < d; ++i) dev[i] = static_cast<long double>(s[i]) - static_cast<long double>(n) * md.m[i];
  long double q = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) q += dev[i] * md.inv[i][j] * dev[j];
  return std::exp(-q / (2.0L * static_cast<long double>(n)));
}

long double scaled_coefficient(const CoefficientTensor& tensor, long n, std::size_t lin, long double log_rho) {
  const Integer& f = tensor.scaled(n, lin);
  if (f == 0) return 0;
  long double l = static_cast<long double>(tensor.log_abs_at(n, lin)) + static_cast<long double>(n) * log_rho;
  return sgn(f) * std::exp(l);
}

}  // namespace

GapValue lclt_gap(const CoefficientTensor& tensor, const LCLTCertificate& cert, long n) {
  if (n < 1 || n > tensor.N()) throw Error(ErrorCode::InvalidArgument, "slice index out of range");
  if (tensor.d() != cert.d()) throw Error(ErrorCode::InvalidArgument, "tensor and certificate dimensions differ");
  Model md = make_model(cert, n);
  long double norm = std::pow(static_cast<long double>(n), static_cast<long double>(cert.d()) / 2);
  GapValue out;
  long double best = -1, scale_max = 0;
  for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) {
    auto s = tensor.index_of(n, lin);
    long double a = scaled_coefficient(tensor, n, lin, md.log_rho);
    long double model = md.constant * gaussian(md, s, n);
    long double gap = norm * std::fabs(a - model);
    scale_max = std::max(scale_max, norm * (std::fabs(a) + std::fabs(model)));
    if (gap > best) {
      best = gap;
      out.argmax = s;
    }
  }
  out.value = static_cast<double>(best);
  // log-domain evaluation: relative error of a few ulps of double times |n log rho|
  out.rounding_bound = static_cast<double>(scale_max * 1e-14L * (1 + std::fabs(static_cast<long double>(n) * md.log_rho)));
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace {

std::string coefficient_text(const CoefficientTensor& tensor, long n, std::size_t lin) {
  if (tensor.denominator() == 1) return tensor.scaled(n, lin).get_str();
  return tensor.coefficient_at(n, lin).get_str();
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  return out;
}

std::string header(const CoefficientTensor& tensor) {
  std::string h = "n";
  for (std::size_t k = 1; k <= tensor.d(); ++k) h += ",s" + std::to_string(k);
  return h + ",coeff";
}

}  // namespace

void emit_plot_data(const CoefficientTensor& tensor, const LCLTCertificate* cert, long n, const std::string& path) {
  if (n < 0 || n > tensor.N()) throw Error(ErrorCode::InvalidArgument, "slice index out of range");
  bool with_model = cert && cert->nondegenerate == NondegenerateStatus::Proved && n >= 1;
  auto out = open_csv(path);
  out << header(tensor) << ",normalized" << (with_model ? ",model" : "") << "\n";
  std::optional<Model> md;
  long double log_amplitude = 0;
  if (with_model) {
    md = make_model(*cert, n);
    log_amplitude = std::log(std::fabs(md->constant)) - static_cast<long double>(n) * md->log_rho;
  }
  // f/max fallback, computed exactly
  Integer max_abs(0);
  for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) max_abs = std::max(max_abs, Integer(abs(tensor.scaled(n, lin))));

  for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) {
    auto s = tensor.index_of(n, lin);
    out << n;
    for (auto x : s) out << "," << x;
    out << "," << coefficient_text(tensor, n, lin) << ",";
    const Integer& f = tensor.scaled(n, lin);
    if (with_model) {
      double normalized = 0.0;
      if (f != 0)
        normalized = static_cast<double>(sgn(f) * (md->constant < 0 ? -1 : 1) *
                                         std::exp(static_cast<long double>(tensor.log_abs_at(n, lin)) - log_amplitude));
      out << format_double(normalized) << "," << format_double(static_cast<double>(gaussian(*md, s, n)));
    } else {
      double normalized = max_abs == 0 ? 0.0 : Rational(f, max_abs).get_d();
      out << format_double(normalized);
    }
    out << "\n";
  }
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

void emit_expansion(const CoefficientTensor& tensor, const std::string& path) {
  auto out = open_csv(path);
  out << header(tensor) << "\n";
  for (long n = 0; n <= tensor.N(); ++n)
    for (std::size_t lin = 0; lin < tensor.slice_size(n); ++lin) {
      if (tensor.scaled(n, lin) == 0) continue;
      out << n;
      for (auto x : tensor.index_of(n, lin)) out << "," << x;
      out << "," << coefficient_text(tensor, n, lin) << "\n";
    }
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace lclt
