#include "lclt/errors.hpp"

namespace lclt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::NonRational: return "NONRATIONAL";
    case ErrorCode::ZeroDenominatorAtOrigin: return "ZERO_DENOMINATOR_AT_ORIGIN";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidGeneratingFunction: return "INVALID_GF";
    case ErrorCode::PVanishesAtLeftEndpoint: return "P_VANISHES_AT_LEFT_ENDPOINT";
    case ErrorCode::NoPositiveRoot: return "NO_POSITIVE_ROOT";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::Indeterminate: return "INDETERMINATE";
    case ErrorCode::HtVanishes: return "HT_VANISHES";
    case ErrorCode::GVanishes: return "G_VANISHES";
    case ErrorCode::DegenerateHessian: return "DEGENERATE_HESSIAN";
    case ErrorCode::RjVanishes: return "RJ_VANISHES";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::UnboundedSupport: return "UNBOUNDED_SUPPORT";
    case ErrorCode::EmptySlice: return "EMPTY_SLICE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace lclt
