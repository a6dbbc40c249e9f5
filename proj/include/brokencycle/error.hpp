#ifndef BROKENCYCLE_ERROR_HPP
#define BROKENCYCLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bc {

enum class ErrorCode {
  kUndefinedExtOp,
  kTypeMismatch,
  kResourceBound,
  kNotMonotone,
  kNotEssentiallySurjective,
  kBaseMismatch,
  kNoInfinityGap,
  kInfiniteGapInsideClass,
  kNotAnArrow,
  kUndefinedAtFixedDiagonal,
  kDimensionMismatch,
  kNotFunctorial,
  kNotUpwardClosed,
  kTruncationExceeded,
  kIncompleteSystem,
  kNotAComplex,
  kIndexOutOfRange,
  kInvalidArgument,
  kParseError,
};

/// Stable identifier used in JSON error reports, e.g. "NotMonotone".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace bc

#endif  // BROKENCYCLE_ERROR_HPP
