#ifndef BROKENCYCLE_EXTREAL_HPP
#define BROKENCYCLE_EXTREAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bc {

using Rational = boost::multiprecision::cpp_rational;

/// An element of [-inf, inf] whose finite part is an exact rational.
///
/// Addition and subtraction follow the usual extended-real conventions:
/// an infinite operand dominates a finite one, `inf + inf = inf`,
/// `inf - (-inf) = inf`, and the indeterminate forms `inf + (-inf)` and
/// `inf - inf` raise `UndefinedExtOp`.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { kFinite, kPosInf, kNegInf };

  ExtReal() = default;
  ExtReal(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit
  ExtReal(long long value) : value_(value) {}             // NOLINT: implicit
  ExtReal(int value) : value_(value) {}                   // NOLINT: implicit

  static ExtReal pos_inf() { return ExtReal(Kind::kPosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::kNegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  /// Finite part; throws InvalidArgument when infinite.
  const Rational& value() const;

  ExtReal operator-() const;

  /// Total order -inf < finite < inf.
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);
  friend bool operator==(const ExtReal& a, const ExtReal& b);

  /// "p/q", "inf" or "-inf".
  std::string to_string() const;
  /// Accepts "p/q", "p", "inf", "+inf", "-inf".
  static ExtReal parse(std::string_view text);

 private:
  explicit ExtReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_ = 0;
};

/// Values in (-inf, inf]; the codomain of the cocycles on F^(I).
class ExtRealUpper {
 public:
  ExtRealUpper() = default;
  /// Throws InvalidArgument when `value` is -inf.
  ExtRealUpper(ExtReal value);  // NOLINT: implicit
  ExtRealUpper(int value) : value_(value) {}  // NOLINT: implicit

  static ExtRealUpper inf() { return ExtRealUpper(ExtReal::pos_inf()); }

  const ExtReal& get() const { return value_; }
  operator const ExtReal&() const { return value_; }  // NOLINT: implicit
  bool is_finite() const { return value_.is_finite(); }
  bool is_inf() const { return value_.is_pos_inf(); }

  friend auto operator<=>(const ExtRealUpper&, const ExtRealUpper&) = default;
  friend bool operator==(const ExtRealUpper&, const ExtRealUpper&) = default;

 private:
  ExtReal value_;
};

ExtReal ext_add(const ExtReal& a, const ExtReal& b);
ExtReal ext_sub(const ExtReal& a, const ExtReal& b);

/// Sum of a list of upper extended reals; empty sum is 0.
ExtRealUpper ext_sum(std::span<const ExtRealUpper> values);

/// True when the two-sided equation `a = b + c` holds with every
/// sub-expression defined.
bool ext_sum_equals(const ExtReal& a, const ExtReal& b, const ExtReal& c);
/// True when `a = b - c` holds with the right side defined.
bool ext_diff_equals(const ExtReal& a, const ExtReal& b, const ExtReal& c);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace bc

#endif  // BROKENCYCLE_EXTREAL_HPP
