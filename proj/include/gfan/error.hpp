#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfan {

enum class ErrorCode {
  NotAdmissible,
  NotFiniteDimensional,
  CompletionOverflow,
  NotPrime,
  IndexOutOfRange,
  NotProjective,
  SplitUncertain,
  NoConsensus,
  CapExceeded,
  NotTauRigid,
  ApproximationFailed,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

/// Machine-readable name, e.g. "NotAdmissible".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gfan
