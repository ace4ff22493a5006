#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace r2k {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  DenominatorVanishes,
  SyntaxError,
  RankMismatch,
  NotHomogeneous,
  WindowTooSmall,
  ZeroGammaForEvenInner,
  DegreeMismatch,
  ParityMismatch,
  NotDerivation,
  ClassificationMismatch,
  CentralNotKilled,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the kernel. The code is the machine-readable part;
/// what() carries a human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset at which the grammar was violated.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ZeroGammaForEvenInner: return "ZeroGammaForEvenInner";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotDerivation: return "NotDerivation";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::CentralNotKilled: return "CentralNotKilled";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace r2k
