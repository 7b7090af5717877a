#pragma once

#include <stdexcept>
#include <string>

namespace vsl {

enum class ErrorCode {
  SyntaxError,
  DuplicatePort,
  DanglingArc,
  UnknownArc,
  SameArc,
  UnknownCrossing,
  NotSingular,
  StateBudgetExceeded,
};

// All library failures surface as this exception; the CLI maps it to exit 2.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace vsl
