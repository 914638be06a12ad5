#include "ncl/error.hpp"

namespace ncl {

std::string_view reason_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::AmbiguousLogicSpec: return "AMBIGUOUS_LOGIC_SPEC";
    case ErrorCode::UnsupportedLogic: return "UNSUPPORTED_LOGIC";
    case ErrorCode::UnsupportedParameter: return "UNSUPPORTED_PARAMETER";
    case ErrorCode::UnknownParameter: return "UNKNOWN_PARAMETER";
    case ErrorCode::MissingParameter: return "MISSING_PARAMETER";
    case ErrorCode::UnsupportedConnective: return "UNSUPPORTED_CONNECTIVE";
    case ErrorCode::MalformedConnective: return "MALFORMED_CONNECTIVE";
    case ErrorCode::NotPropositional: return "NOT_PROPOSITIONAL";
    case ErrorCode::TypeError: return "TYPE_ERROR";
    case ErrorCode::IncludeError: return "INCLUDE_ERROR";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::UsageError: return "USAGE_ERROR";
    case ErrorCode::InternalError: return "INTERNAL_ERROR";
  }
  return "INTERNAL_ERROR";
}

}  // namespace ncl
