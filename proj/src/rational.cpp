#include "lclt/rational.hpp"

#include <cctype>
#include <cmath>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

Integer pow10(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational literal");

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
    Integer d(den, 10);
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
    value = Rational(Integer(num, 10), d);
  } else {
    long exponent = 0;
    std::string mantissa = body;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
      std::string exp_text = body.substr(e + 1);
      mantissa = body.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
        exp_negative = exp_text[0] == '-';
        exp_text = exp_text.substr(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6)
        throw Error(ErrorCode::InvalidArgument, "bad exponent in '" + text + "'");
      exponent = std::stol(exp_text) * (exp_negative ? -1 : 1);
    }
    std::string int_part = mantissa, frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
      throw Error(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
    Integer digits(int_part + frac_part, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0)
      value = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
    else
      value = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = pow10(static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // round half up
  Integer n = scaled.get_num() * 2 + scaled.get_den();
  Integer d = scaled.get_den() * 2;
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(q) < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

bool has_finite_decimal(const Rational& q) {
  Integer den = q.get_den();
  for (unsigned long p : {2ul, 5ul})
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
  return den == 1;
}

std::string to_exact_decimal(const Rational& q) {
  Integer den = q.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) throw Error(ErrorCode::InvalidArgument, "rational has no finite decimal expansion");
  std::string s = to_decimal(q, std::max(twos, fives));
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string format_bound(const Rational& q) {
  Rational a = abs(q);
  if (sgn(a) == 0) return "0";
  // find k with 10^k <= a < 10^(k+1)
  long k = static_cast<long>(std::floor(log_abs(a) / std::log(10.0)));
  auto power = [](long e) {
    return e >= 0 ? Rational(pow10(static_cast<unsigned long>(e)))
                  : Rational(Integer(1), pow10(static_cast<unsigned long>(-e)));
  };
  while (power(k) > a) --k;
  while (power(k + 1) <= a) ++k;
  // smallest digit D with D*10^k >= a
  Rational unit = power(k);
  for (int digit = 1; digit <= 10; ++digit) {
    if (Rational(digit) * unit >= a) {
      if (digit == 10) return "1e" + std::to_string(k + 1);
      return std::to_string(digit) + "e" + std::to_string(k);
    }
  }
  return "1e" + std::to_string(k + 1);
}

Rational dyadic(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
  return k >= 0 ? Rational(Integer(1), p) : Rational(p);
}

double log_abs(const Integer& z) {
  if (z == 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

}  // namespace lclt
