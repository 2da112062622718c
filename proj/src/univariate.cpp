#include "lclt/univariate.hpp"

#include <sstream>

namespace lclt {

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> scaled;
  for (const auto& c : p.coeffs()) {
    Rational s = c * den_lcm;
    scaled.push_back(s);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(p.leading()) < 0) num_gcd = -num_gcd;
  for (auto& c : scaled) c /= num_gcd;
  return UniPoly(std::move(scaled));
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out << a.get_str();
    else if (a == 1)
      out << mono;
    else
      out << a.get_str() << "*" << mono;
  }
  return out.str();
}

UniRational UniRational::reduced() const {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return {UniPoly{}, UniPoly::constant(Rational(1))};
  UniPoly g = gcd(num, den);
  UniPoly n = divmod(num, g).first, d = divmod(den, g).first;
  // den(0) = 1 when possible, otherwise monic
  Rational lead = sgn(d.coeff(0)) != 0 ? d.coeff(0) : d.leading();
  Rational inv = 1 / lead;
  return {inv * n, inv * d};
}

}  // namespace lclt
