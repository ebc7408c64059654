#pragma once

#include <stdexcept>
#include <string>

namespace repairkit {

// Error categories, aligned with the CLI exit codes.
enum class ErrorCode {
  io = 2,
  invalid_input = 3,
  referential = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

}  // namespace repairkit
