#include "gcfiber/error.hpp"

namespace gcfiber {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InvalidTriangle: return "InvalidTriangle";
    case ErrorCode::InterlacingViolation: return "InterlacingViolation";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::NonContiguousChain: return "NonContiguousChain";
    case ErrorCode::UnrealizablePattern: return "UnrealizablePattern";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gcfiber
