#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "lclt/errors.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/smoothacsv.hpp"

namespace lclt {

/// Outcome of the LU factorization check for linear families.
struct LUReport {
  bool verified = false;
  std::vector<AlgebraicReal> L_diag;
  /// Set when the factorization broke down or the product check failed.
  std::string failure;
};

/// Runs the LU check when gf is a linear family; nullopt otherwise.
std::optional<LUReport> lu_report(const RationalGF& gf, const LCLTCertificate& cert);

/// "<decimal> +/- <bound>" from an enclosure of width <= precision.
std::string numeric_leaf(const AlgebraicReal& x, const Rational& precision);

/// Certificate JSON (keys rho, m, hessian, hess_det, hess_inv, C0, statuses, amplitude, plus
/// verdict, variables, notes, lu and error).
nlohmann::ordered_json certificate_json(const RationalGF& gf, const LCLTCertificate& cert,
                                        const std::optional<LUReport>& lu);

/// {"error": CODE, "message": ...} with "position" for syntax errors.
nlohmann::ordered_json error_json(const Error& e);

/// Multi-line human-readable statement of the limit theorem.
std::string certificate_summary(const RationalGF& gf, const LCLTCertificate& cert);

}  // namespace lclt
