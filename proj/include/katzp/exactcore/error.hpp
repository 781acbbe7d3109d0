#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace katzp {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  RingMismatch,
  NotPNilpotent,
  TruncationTooSmall,
  DimensionMismatch,
  SingularGauge,
  ZeroScale,
  GriffithsViolation,
  NotNilpotent,
  RankUnsupported,
  DegenerateCartier,
  ReductionFailure,
  GenusUnsupported,
  UnsupportedFamily,
  InvalidInput,
  PostconditionFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotPNilpotent: return "NotPNilpotent";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularGauge: return "SingularGauge";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::GriffithsViolation: return "GriffithsViolation";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::DegenerateCartier: return "DegenerateCartier";
    case ErrorCode::ReductionFailure: return "ReductionFailure";
    case ErrorCode::GenusUnsupported: return "GenusUnsupported";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::PostconditionFailure: return "PostconditionFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace katzp
