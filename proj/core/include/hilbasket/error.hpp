#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbasket {

enum class ErrorCode {
  NotCoprime,
  DegenerateCone,
  InvalidSingularity,
  InvalidWeight,
  NotResidual,
  LocalIndexMismatch,
  InvalidFraction,
  NotASurfaceSeries,
  AmbiguousDecomposition,
  NonIntegralDelta,
  UnsupportedIndex,
  MixedIndex,
  NotRealizable,
  CapacityExceeded,
  LengthMismatch,
  Infeasible,
  ParseError,
  ConjectureViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every library failure carries a machine-readable code; what() starts with
// the code name so the CLI can echo it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbasket
