#pragma once

#include <stdexcept>
#include <string>

namespace ck {

// Machine-readable failure categories surfaced by every module and the CLI.
enum class ErrorCode {
  InvalidArgument,
  AlphabetMismatch,
  DimensionMismatch,
  DomainError,            // e.g. residue disk of 1 for Li_n
  InsufficientPrecision,  // precision ran out; caller should retry with more
  NotIndependent,
  Inconsistent,
  BudgetExhausted,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::AlphabetMismatch: return "alphabet_mismatch";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::InsufficientPrecision: return "insufficient_precision";
    case ErrorCode::NotIndependent: return "not_independent";
    case ErrorCode::Inconsistent: return "inconsistent";
    case ErrorCode::BudgetExhausted: return "budget_exhausted";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

}  // namespace ck
