#include "lclt/linfam.hpp"

#include "lclt/errors.hpp"

namespace lclt {

namespace {

AlgebraicReal at_rho(const std::shared_ptr<const RhoField>& field, const UniRational& r) {
  AlgebraicReal den(field, r.den);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator of the linear family vanishes at rho");
  return AlgebraicReal(field, r.num) / den;
}

}  // namespace

bool LinearFamilyData::qk_positive() const {
  for (const auto& x : qk)
    if (x.sign() <= 0) return false;
  return true;
}

LinearFamilyData linear_family_data(const LinearFamily& family, const std::shared_ptr<const RhoField>& field) {
  LinearFamilyData out;
  out.family = family;
  out.field = field;
  out.rho = AlgebraicReal::generator(field);
  std::size_t d = family.q_list.size();

  UniRational P{UniPoly::constant(Rational(1))};
  P = P - family.q;
  for (const auto& qk : family.q_list) P = P - qk;
  UniRational dP = P.reduced().derivative().reduced();
  UniRational d2P = dP.derivative().reduced();
  out.P1 = at_rho(field, dP);
  out.P2 = at_rho(field, d2P);
  out.q = at_rho(field, family.q);
  out.q1 = at_rho(field, family.q.derivative().reduced());
  for (const auto& qk : family.q_list) {
    out.qk.push_back(at_rho(field, qk));
    out.qk1.push_back(at_rho(field, qk.derivative().reduced()));
  }
  out.A.assign(d + 2, AlgebraicReal(0));
  out.B.assign(d + 2, AlgebraicReal(0));
  out.D.assign(d + 2, AlgebraicReal(0));
  for (std::size_t j = 2; j <= d + 1; ++j) {
    std::size_t k = j - 2;  // q_{j-1}
    out.A[j] = out.A[j - 1] + out.qk[k];
    out.B[j] = out.B[j - 1] + out.qk1[k];
    out.D[j] = out.D[j - 1] + out.qk1[k] * out.qk1[k] / out.qk[k];
  }
  return out;
}

Matrix<AlgebraicReal> hessian_closed_form(const LinearFamilyData& x) {
  std::size_t d = x.d();
  const AlgebraicReal& rho = x.rho;
  AlgebraicReal denom = rho * rho * x.P1 * x.P1 * x.P1;
  Matrix<AlgebraicReal> out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const AlgebraicReal &qi = x.qk[i], &qj = x.qk[j], &dqi = x.qk1[i], &dqj = x.qk1[j];
      AlgebraicReal num;
      if (i == j)
        num = rho * qj * qj * x.P2 - (AlgebraicReal(2) * qj * dqj * rho - qj * qj) * x.P1 - qj * rho * x.P1 * x.P1;
      else
        num = rho * qi * qj * x.P2 - (qj * dqi * rho + qi * dqj * rho - qi * qj) * x.P1;
      out(i, j) = num / denom;
    }
  return out;
}

AlgebraicReal det_closed_form(const LinearFamilyData& x) {
  std::size_t d = x.d();
  AlgebraicReal prod(1), ratio_sum(0);
  for (std::size_t k = 0; k < d; ++k) {
    prod = prod * x.qk[k];
    ratio_sum = ratio_sum + x.qk1[k] * x.qk1[k] / x.qk[k];
  }
  AlgebraicReal bracket =
      (x.q - AlgebraicReal(1)) * (x.rho * x.P2 + x.P1 + x.rho * ratio_sum) + x.q1 * x.q1 * x.rho;
  AlgebraicReal denom = x.P1.pow(static_cast<unsigned>(d + 2)) * x.rho.pow(static_cast<unsigned>(d + 1));
  AlgebraicReal sign = d % 2 == 0 ? AlgebraicReal(1) : AlgebraicReal(-1);
  return sign * prod * bracket / denom;
}

LUFactors lu_factors(const LinearFamilyData& x) {
  std::size_t d = x.d();
  const AlgebraicReal &rho = x.rho, &P1 = x.P1, &P2 = x.P2;
  LUFactors f;
  f.r.assign(d + 2, AlgebraicReal(0));
  for (std::size_t j = 1; j <= d + 1; ++j) {
    const AlgebraicReal &A = x.A[j], &B = x.B[j], &D = x.D[j];
    f.r[j] = P1 * P1 * rho - P2 * rho * A + AlgebraicReal(2) * P1 * rho * B - P1 * A - rho * (A * D - B * B);
    if (f.r[j].is_zero()) throw Error(ErrorCode::RjVanishes, "r_" + std::to_string(j) + " = 0");
  }
  f.U = Matrix<AlgebraicReal>::identity(d);
  f.L = Matrix<AlgebraicReal>(d, d);
  f.g = Matrix<AlgebraicReal>(d, d);
  f.s = Matrix<AlgebraicReal>(d, d);
  // 1-based (i, j) in the formulas; stored 0-based
  for (std::size_t j = 1; j <= d; ++j) {
    const AlgebraicReal &A = x.A[j], &B = x.B[j], &D = x.D[j];
    const AlgebraicReal &qj = x.qk[j - 1], &dqj = x.qk1[j - 1];
    AlgebraicReal pivot = P1 * rho * f.r[j];
    f.L(j - 1, j - 1) = -qj * f.r[j + 1] / pivot;
    for (std::size_t i = 1; i <= d; ++i) {
      if (i == j) continue;
      const AlgebraicReal &qi = x.qk[i - 1], &dqi = x.qk1[i - 1];
      AlgebraicReal log_sum = dqi / qi + dqj / qj;
      AlgebraicReal cross = rho * dqi * dqj / (qi * qj);
      if (i < j) {
        AlgebraicReal g = P1 + P2 * rho - rho * log_sum * (P1 + B - dqi) + rho * (D - dqi * dqi / qi) +
                          cross * (A - qi);
        f.g(i - 1, j - 1) = g;
        f.U(i - 1, j - 1) = qj * g / f.r[j];
      } else {
        AlgebraicReal s = P2 * rho + rho * D - rho * log_sum * (P1 + B) + P1 + cross * A;
        f.s(i - 1, j - 1) = s;
        f.L(i - 1, j - 1) = qj * qi * s / pivot;
      }
    }
  }
  return f;
}

LUCheck verify_lu(const Matrix<AlgebraicReal>& hessian, const LUFactors& factors) {
  LUCheck out;
  Matrix<AlgebraicReal> R = hessian * factors.U - factors.L;
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j)
      if (!R(i, j).is_zero()) {
        out.row = i;
        out.col = j;
        out.residual = R(i, j);
        return out;
      }
  out.verified = true;
  AlgebraicReal det(1);
  for (std::size_t j = 0; j < factors.L.rows(); ++j) det = det * factors.L(j, j);
  out.det = det;
  return out;
}

LUIntervalCheck verify_lu_interval(const Matrix<AlgebraicReal>& hessian, const LUFactors& factors,
                                   const Rational& entry_width, const Rational& max_width) {
  auto enclose = [&](const AlgebraicReal& v) { return v.enclosure(entry_width); };
  Matrix<IntervalValue> H = hessian.map(enclose), U = factors.U.map(enclose), L = factors.L.map(enclose);
  Matrix<IntervalValue> R = H * U - L;
  LUIntervalCheck out;
  out.verified = true;
  out.max_width = 0;
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) {
      const IntervalValue& v = R(i, j);
      if (v.width() > out.max_width) out.max_width = v.width();
      if (out.verified && (!v.contains(Rational(0)) || v.width() >= max_width)) {
        out.verified = false;
        out.row = i;
        out.col = j;
      }
    }
  return out;
}

PositivityCheck positivity_inequality_check(const UniPoly& f, const Rational& z) {
  if (sgn(z) <= 0) throw Error(ErrorCode::InvalidArgument, "z must be positive");
  if (sgn(f.coeff(0)) != 0) throw Error(ErrorCode::InvalidArgument, "f(0) must be 0");
  for (const auto& c : f.coeffs())
    if (sgn(c) < 0) throw Error(ErrorCode::InvalidArgument, "f must have non-negative coefficients");
  UniPoly d1 = f.derivative(), d2 = d1.derivative();
  Rational f1 = d1(z);
  Rational lhs = z * f1 * f1;
  Rational rhs = f(z) * (z * d2(z) + f1);
  return {lhs <= rhs, lhs == rhs};
}

}  // namespace lclt
