#include "brokencycle/error.hpp"

namespace bc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndefinedExtOp: return "UndefinedExtOp";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kResourceBound: return "ResourceBound";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotEssentiallySurjective: return "NotEssentiallySurjective";
    case ErrorCode::kBaseMismatch: return "BaseMismatch";
    case ErrorCode::kNoInfinityGap: return "NoInfinityGap";
    case ErrorCode::kInfiniteGapInsideClass: return "InfiniteGapInsideClass";
    case ErrorCode::kNotAnArrow: return "NotAnArrow";
    case ErrorCode::kUndefinedAtFixedDiagonal: return "UndefinedAtFixedDiagonal";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotFunctorial: return "NotFunctorial";
    case ErrorCode::kNotUpwardClosed: return "NotUpwardClosed";
    case ErrorCode::kTruncationExceeded: return "TruncationExceeded";
    case ErrorCode::kIncompleteSystem: return "IncompleteSystem";
    case ErrorCode::kNotAComplex: return "NotAComplex";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

}  // namespace bc
