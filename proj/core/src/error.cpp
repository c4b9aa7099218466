#include "hilbasket/error.hpp"

namespace hilbasket {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::InvalidSingularity: return "InvalidSingularity";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::NotResidual: return "NotResidual";
    case ErrorCode::LocalIndexMismatch: return "LocalIndexMismatch";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::NotASurfaceSeries: return "NotASurfaceSeries";
    case ErrorCode::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case ErrorCode::NonIntegralDelta: return "NonIntegralDelta";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::MixedIndex: return "MixedIndex";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConjectureViolation: return "ConjectureViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace hilbasket
