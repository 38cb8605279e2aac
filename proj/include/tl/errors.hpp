#pragma once

#include <stdexcept>
#include <string>

namespace tl {

// Every failure mode the library reports. CLI exit codes and the JSON
// error envelope are derived from these.
enum class ErrorCode {
  DivisionByZero,
  BadParameter,
  NotEvaluable,
  DomainMismatch,
  RingMismatch,
  ParityError,
  PreconditionFailed,
  NotMinimal,
  NotStabilized,
  VerificationFailed,
  NoPartner,
  CriticalDiagram,
  UsageError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotEvaluable: return "NotEvaluable";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NoPartner: return "NoPartner";
    case ErrorCode::CriticalDiagram: return "CriticalDiagram";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace tl
