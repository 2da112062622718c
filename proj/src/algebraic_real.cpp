#include "lclt/algebraic_real.hpp"

#include "lclt/errors.hpp"

namespace lclt {

RhoField::RhoField(AlgebraicNumber rho) : rho_(std::move(rho)) {
  if (rho_.minpoly.degree() < 1) throw Error(ErrorCode::InvalidArgument, "field generator needs a nonconstant minpoly");
}

IntervalValue RhoField::interval() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rho_.interval;
}

IntervalValue RhoField::interval(const Rational& w) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (rho_.interval.width() > w) rho_ = refine(rho_, w);
  return rho_.interval;
}

AlgebraicNumber RhoField::algebraic_number() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rho_;
}

UniPoly RhoField::reduce(const UniPoly& p) const {
  if (p.degree() < rho_.minpoly.degree()) return p;
  return divmod(p, rho_.minpoly).second;
}

bool RhoField::vanishes(const UniPoly& p) const {
  UniPoly r = reduce(p);
  if (r.is_zero()) return true;
  if (r.degree() == 0) return false;
  UniPoly g = gcd(r, rho_.minpoly);
  if (g.degree() <= 0) return false;
  IntervalValue iv = interval();
  if (iv.is_point()) return sgn(g(iv.lo())) == 0;
  // roots of g are roots of the minpoly, and the interval isolates exactly rho
  return sturm_count(g, iv.lo(), iv.hi()) > 0;
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const RhoField> field, const UniPoly& p) : field_(std::move(field)) {
  if (!field_) {
    if (p.degree() > 0) throw Error(ErrorCode::InvalidArgument, "nonconstant representative without a field");
    rep_ = p;
  } else {
    rep_ = field_->reduce(p);
  }
}

AlgebraicReal AlgebraicReal::generator(std::shared_ptr<const RhoField> field) {
  return AlgebraicReal(std::move(field), UniPoly(std::vector<Rational>{Rational(0), Rational(1)}));
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is not known to be rational");
  return rep_.coeff(0);
}

bool AlgebraicReal::is_zero() const {
  if (rep_.degree() <= 0) return rep_.is_zero();
  return field_->vanishes(rep_);
}

int AlgebraicReal::sign() const {
  if (rep_.degree() <= 0) return sgn(rep_.coeff(0));
  if (is_zero()) return 0;
  for (long k = 64; k <= 65536; k *= 2) {
    IntervalValue v = rep_.eval(field_->interval(dyadic(k)));
    int s = v.certain_sign();
    if (s != 2) return s;
  }
  throw Error(ErrorCode::Indeterminate, "sign not certified within the refinement budget");
}

IntervalValue AlgebraicReal::enclosure(const Rational& w) const {
  if (rep_.degree() <= 0) return IntervalValue(rep_.coeff(0));
  Rational step = w;
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntervalValue v = rep_.eval(field_->interval(step));
    if (v.width() <= w) return v;
    step /= Rational(65536);
  }
  throw Error(ErrorCode::Indeterminate, "enclosure width not reached within the refinement budget");
}

double AlgebraicReal::approx() const {
  if (rep_.degree() <= 0) return rep_.coeff(0).get_d();
  return enclosure(dyadic(60)).midpoint().get_d();
}

std::shared_ptr<const RhoField> AlgebraicReal::common(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw Error(ErrorCode::InvalidArgument, "mixing elements of different fields");
  return a.field_ ? a.field_ : b.field_;
}

AlgebraicReal AlgebraicReal::operator-() const {
  AlgebraicReal out = *this;
  out.rep_ = -rep_;
  return out;
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal out;
  out.field_ = AlgebraicReal::common(a, b);
  out.rep_ = a.rep_ + b.rep_;
  return out;
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal out;
  out.field_ = AlgebraicReal::common(a, b);
  out.rep_ = a.rep_ - b.rep_;
  return out;
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  auto field = AlgebraicReal::common(a, b);
  if (!field) return AlgebraicReal(a.rep_.coeff(0) * b.rep_.coeff(0));
  return AlgebraicReal(field, a.rep_ * b.rep_);
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(rho)");
  auto field = AlgebraicReal::common(a, b);
  if (b.rep_.degree() <= 0) {
    Rational inv = 1 / b.rep_.coeff(0);
    AlgebraicReal out = a;
    out.field_ = field;
    out.rep_ = inv * a.rep_;
    return out;
  }
  const UniPoly& m = field->minpoly();
  auto [g, s] = gcd_with_cofactor(b.rep_, m);
  if (g.degree() > 0) {
    // b shares roots with the minpoly, but not rho; invert modulo the cofactor
    UniPoly m2 = divmod(m, g).first;
    std::tie(g, s) = gcd_with_cofactor(b.rep_, m2);
  }
  return AlgebraicReal(field, a.rep_ * s);
}

AlgebraicReal AlgebraicReal::pow(unsigned k) const {
  AlgebraicReal r(field_, UniPoly::constant(Rational(1))), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

AlgebraicReal eval_at(const std::shared_ptr<const RhoField>& field, const UniPoly& p) { return AlgebraicReal(field, p); }

}  // namespace lclt
