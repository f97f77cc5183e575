#pragma once

#include <stdexcept>
#include <string>

namespace coxhecke {

// Typed failure conditions. The CLI maps each code to a distinct exit code;
// library code throws and never prints.
enum class ErrorCode {
  BadMatrix = 1,
  BadWeights,
  ClassTooLarge,
  CapExceeded,
  BallExceeded,
  InfiniteGroup,
  InfiniteParabolic,
  DomainError,
  UncertifiedBall,
  ScopeTooLarge,
  ConjecturesUnverified,
  NotInFamily,
  TTooSmall,
  NTooSmall,
  ParityError,
  WrongResidue,
  BadInput,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadMatrix: return "BadMatrix";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::ClassTooLarge: return "ClassTooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BallExceeded: return "BallExceeded";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::InfiniteParabolic: return "InfiniteParabolic";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UncertifiedBall: return "UncertifiedBall";
    case ErrorCode::ScopeTooLarge: return "ScopeTooLarge";
    case ErrorCode::ConjecturesUnverified: return "ConjecturesUnverified";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::TTooSmall: return "TTooSmall";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace coxhecke
