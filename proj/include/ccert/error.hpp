#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccert {

enum class ErrorCode {
  kRingMismatch,
  kShapeMismatch,
  kNoncommutativeCoefficients,
  kNotInvertible,
  kSizeTooSmall,
  kEmptySum,
  kInvalidWitness,
  kNotACommutator,
  kUnknownStructure,
  kInadmissibleInput,
  kOutOfDomain,
  kMalformedInput,
  kUnknownRingSpec,
  kInvalidArgument,
  kIdentityFailed,
  kCounterexampleFound,
};

/// Stable machine-readable name, e.g. "RingMismatch".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccert
