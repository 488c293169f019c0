#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thue {

enum class ErrorCode {
  AsymmetricRotation,
  LoopEdge,
  DuplicateNeighbour,
  BadVertex,
  BadParams,
  PathNotCanonical,
  IndexOutOfRange,
  Inconsistent,
  ListTooShort,
  WrongFamily,
  BudgetExceeded,
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's named failure kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thue
