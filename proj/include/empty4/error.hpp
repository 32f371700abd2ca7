#pragma once

#include <stdexcept>
#include <string>

namespace empty4 {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  SumNotZero,
  NotGenerator,
  NotAUnit,
  NotHollow,
  NotEmpty,
  NoUnitEntry,
  NotCyclic,
  Degenerate,
  IndexMismatch,
  InvalidParams,
  VolumeTooLarge,
  Checkpoint,
  InvariantViolation,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace empty4
