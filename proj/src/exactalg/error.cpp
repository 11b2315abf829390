#include "ccert/error.hpp"

namespace ccert {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNoncommutativeCoefficients: return "NoncommutativeCoefficients";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kSizeTooSmall: return "SizeTooSmall";
    case ErrorCode::kEmptySum: return "EmptySum";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kNotACommutator: return "NotACommutator";
    case ErrorCode::kUnknownStructure: return "UnknownStructure";
    case ErrorCode::kInadmissibleInput: return "InadmissibleInput";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kUnknownRingSpec: return "UnknownRingSpec";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIdentityFailed: return "IdentityFailed";
    case ErrorCode::kCounterexampleFound: return "CounterexampleFound";
  }
  return "Unknown";
}

}  // namespace ccert
