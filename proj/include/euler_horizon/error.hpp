#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eh {

enum class ErrorCode {
  SyntaxError,
  NormalizationError,
  DivisionByZeroPoly,
  DegenerateInput,
  ZeroResultant,
  TruncationInsufficient,
  ReconstructionAmbiguous,
  BoundOverflow,
  RootFindingDiverged,
  AllRootsCancelled,
  PoleAtOne,
  ConvergenceDomain,
  LocalFactorZero,
  FactorPole,
  DomainError,
  MissingZerosFile,
  Inconclusive,
  InvalidArgument,
  IoError,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eh
