#include "euler_horizon/error.hpp"

#include <numeric>
#include <stdexcept>

#include "euler_horizon/slope.hpp"

namespace eh {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NormalizationError: return "NormalizationError";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ZeroResultant: return "ZeroResultant";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::ReconstructionAmbiguous: return "ReconstructionAmbiguous";
    case ErrorCode::BoundOverflow: return "BoundOverflow";
    case ErrorCode::RootFindingDiverged: return "RootFindingDiverged";
    case ErrorCode::AllRootsCancelled: return "AllRootsCancelled";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::ConvergenceDomain: return "ConvergenceDomain";
    case ErrorCode::LocalFactorZero: return "LocalFactorZero";
    case ErrorCode::FactorPole: return "FactorPole";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingZerosFile: return "MissingZerosFile";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Slope::Slope(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "slope with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Slope::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace eh
