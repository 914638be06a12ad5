#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncl {

enum class ErrorCode {
  ParseError,
  AmbiguousLogicSpec,
  UnsupportedLogic,
  UnsupportedParameter,
  UnknownParameter,
  MissingParameter,
  UnsupportedConnective,
  MalformedConnective,
  NotPropositional,
  TypeError,
  IncludeError,
  BudgetExceeded,
  IoError,
  UsageError,
  InternalError,
};

/// Machine-greppable reason code, e.g. "PARSE_ERROR".
std::string_view reason_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncl
