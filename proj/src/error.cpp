#include "empty4/error.hpp"

namespace empty4 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::SumNotZero: return "SumNotZero";
    case ErrorCode::NotGenerator: return "NotGenerator";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotHollow: return "NotHollow";
    case ErrorCode::NotEmpty: return "NotEmpty";
    case ErrorCode::NoUnitEntry: return "NoUnitEntry";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::VolumeTooLarge: return "VolumeTooLarge";
    case ErrorCode::Checkpoint: return "CheckpointError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace empty4
