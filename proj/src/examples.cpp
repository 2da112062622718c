#include "lclt/examples.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lclt/errors.hpp"

namespace lclt {

namespace {

std::string z(long k) { return "z" + std::to_string(k); }

std::string t_pow(long k) { return k == 1 ? "t" : "t^" + std::to_string(k); }

std::string monomial(long c, const std::string& var, long k) {
  std::string out = c == 1 ? "" : std::to_string(c) + "*";
  if (!var.empty()) out += var + "*";
  return out + t_pow(k);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

std::string permutations(const ExampleSpec& spec) {
  require(spec.d >= 1, "permutations needs d >= 1");
  std::string den = "1";
  for (long k = 1; k <= spec.d + 1; ++k) den += " - " + monomial(1, k == 1 && spec.set_z1 ? "" : z(k), k);
  return "1/(" + den + ")";
}

std::string strings(const ExampleSpec& spec) {
  require(spec.d >= 1 && spec.l >= spec.d, "strings needs 1 <= d <= l");
  std::string sum = z(1);
  for (long k = 2; k <= spec.d; ++k) sum += " + " + z(k);
  std::string den = "1 - (" + sum + ")*t";
  if (spec.l > spec.d) den += " - " + monomial(spec.l - spec.d, "", 1);
  return "1/(" + den + ")";
}

std::string compositions(const ExampleSpec& spec) {
  require(spec.d >= 1, "compositions needs d >= 1");
  std::string den = "1";
  for (long k = 1; k <= spec.d; ++k) den += " - " + monomial(1, z(k), k);
  den += " - " + t_pow(spec.d + 1) + "/(1 - t)";
  return "1/(" + den + ")";
}

std::string compositions_restricted(const ExampleSpec& spec) {
  std::vector<long> omega = spec.omega;
  if (omega.empty()) {
    require(spec.d >= 1, "compositions_restricted needs d >= 1 or --omega");
    for (long k = 1; k <= spec.d; ++k) omega.push_back(k);
  }
  std::set<long> seen;
  for (long w : omega) {
    require(w >= 1, "omega entries must be positive");
    require(seen.insert(w).second, "omega entries must be distinct");
  }
  std::set<long> lambda(spec.lambda.begin(), spec.lambda.end());
  for (long k : lambda) require(k >= 1, "lambda entries must be positive");
  if (!spec.lambda.empty())
    for (long w : omega) require(lambda.count(w) == 1, "omega must be a subset of lambda");

  std::string den = "1";
  for (std::size_t k = 0; k < omega.size(); ++k)
    den += " - " + monomial(1, z(static_cast<long>(k + 1)), omega[k]);
  if (spec.lambda.empty()) {
    long top = *std::max_element(omega.begin(), omega.end());
    for (long k = 1; k <= top; ++k)
      if (!seen.count(k)) den += " - " + t_pow(k);
    den += " - " + t_pow(top + 1) + "/(1 - t)";
  } else {
    for (long k : lambda)
      if (!seen.count(k)) den += " - " + t_pow(k);
  }
  return "1/(" + den + ")";
}

std::string ncolour(const ExampleSpec& spec) {
  require(spec.d >= 1, "ncolour needs d >= 1");
  std::string den = "1";
  for (long k = 1; k <= spec.d; ++k) den += " - " + monomial(k, z(k), k);
  den += " - " + monomial(spec.d, "", spec.d + 1) + "/(1 - t)";
  den += " - " + t_pow(spec.d + 1) + "/(1 - t)^2";
  return "1/(" + den + ")";
}

// Numerator from the defining recurrence T_n = (x+y+2)T_{n-1} - (xy+x+y+1)T_{n-2} + xy T_{n-3}.
const char* const kTutteWheel =
    "((1 - z1 + (z1*z2 - z2 - 1)*t)*(1 - z2 + (z1*z2 - z1 - 1)*t) - z1*z2*t + (z1 + z2)*t)"
    "/((1 - t)*(1 - (z1 + z2 + 1)*t + z1*z2*t^2))";

}  // namespace

const std::vector<std::string>& example_families() {
  static const std::vector<std::string> families{"permutations", "strings", "compositions",
                                                 "compositions_restricted", "ncolour", "tutte_wheel"};
  return families;
}

std::string example_expression(const ExampleSpec& spec) {
  if (spec.family == "permutations") return permutations(spec);
  if (spec.family == "strings") return strings(spec);
  if (spec.family == "compositions") return compositions(spec);
  if (spec.family == "compositions_restricted") return compositions_restricted(spec);
  if (spec.family == "ncolour") return ncolour(spec);
  if (spec.family == "tutte_wheel") return kTutteWheel;
  throw Error(ErrorCode::InvalidArgument, "unknown example '" + spec.family + "'");
}

RationalGF build_example(const ExampleSpec& spec) {
  RationalGF gf = parse_gf(example_expression(spec));
  if (spec.family == "tutte_wheel") {
    // Tutte polynomials of wheels have non-negative coefficients
    gf.combinatorial = true;
    gf.combinatorial_inferred = false;
  }
  return gf;
}

std::string list_examples() {
  return "permutations [--d D] [--no-set-z1]\n"
         "    permutations with i-d <= sigma(i) <= i+1, z_k marking k-cycles: 1/(1 - z1*t - ... - z{d+1}*t^(d+1)).\n"
         "    Reproduces the local limit theorem for the joint cycle counts.\n"
         "    By default z1 := 1: with z1 tracked the coefficients lie on the slice\n"
         "    i1 = n - 2*i2 - ... - (d+1)*i{d+1} and the Hessian is singular.\n"
         "strings [--l L] [--d D]\n"
         "    strings over L letters tracking D of them: 1/(1 - (z1+...+zD)*t - (L-D)*t).\n"
         "    L = 2, D = 1 is the classical de Moivre-Laplace theorem.\n"
         "compositions [--d D]\n"
         "    integer compositions tracking the parts 1..D: 1/(1 - z1*t - ... - zD*t^D - t^(D+1)/(1-t)).\n"
         "    Reproduces the explicit composition limit theorem (rho = 1/2, m_k = 2^-(k+1)).\n"
         "compositions_restricted [--omega LIST] [--lambda LIST]\n"
         "    compositions with parts in LAMBDA (default: all) tracking the parts in OMEGA (default 1..d).\n"
         "    A LAMBDA with gcd > 1 leaves aperiodicity unverified (CONDITIONAL).\n"
         "ncolour [--d D]\n"
         "    n-colour compositions tracking the parts 1..D; 21 compositions of 4.\n"
         "tutte_wheel\n"
         "    Tutte polynomials T_n(z1, z2) of wheel graphs; m_k = 1/2 - 1/(2*sqrt(5)).\n"
         "    Non-negativity is asserted. Strict minimality is left unverified (CONDITIONAL).\n";
}

}  // namespace lclt
