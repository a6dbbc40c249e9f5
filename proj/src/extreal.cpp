#include "brokencycle/extreal.hpp"

#include <cctype>

#include "brokencycle/error.hpp"

namespace bc {

const Rational& ExtReal::value() const {
  if (!is_finite()) raise(ErrorCode::kInvalidArgument, "value() of an infinite ExtReal");
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::kPosInf: return neg_inf();
    case Kind::kNegInf: return pos_inf();
    case Kind::kFinite: break;
  }
  return ExtReal(Rational(-value_));
}

namespace {

int rank_of(ExtReal::Kind kind) {
  switch (kind) {
    case ExtReal::Kind::kNegInf: return 0;
    case ExtReal::Kind::kFinite: return 1;
    case ExtReal::Kind::kPosInf: return 2;
  }
  return 1;
}

}  // namespace

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  int ra = rank_of(a.kind_);
  int rb = rank_of(b.kind_);
  if (ra != rb) return ra <=> rb;
  if (!a.is_finite()) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) raise(ErrorCode::kParseError, "empty integer in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) raise(ErrorCode::kParseError, "bad integer '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        raise(ErrorCode::kParseError, "bad integer '" + std::string(text) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return boost::multiprecision::cpp_int(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  boost::multiprecision::cpp_int num = parse_int(text.substr(0, slash));
  boost::multiprecision::cpp_int den = parse_int(text.substr(slash + 1));
  if (den == 0) raise(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::kPosInf: return "inf";
    case Kind::kNegInf: return "-inf";
    case Kind::kFinite: break;
  }
  return bc::to_string(value_);
}

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtReal(parse_rational(text));
}

ExtRealUpper::ExtRealUpper(ExtReal value) : value_(std::move(value)) {
  if (value_.is_neg_inf()) {
    raise(ErrorCode::kInvalidArgument, "-inf is not an upper extended real");
  }
}

ExtReal ext_add(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    raise(ErrorCode::kUndefinedExtOp, a.to_string() + " + " + b.to_string());
  }
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(Rational(a.value() + b.value()));
}

ExtReal ext_sub(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_pos_inf()) || (a.is_neg_inf() && b.is_neg_inf())) {
    raise(ErrorCode::kUndefinedExtOp, a.to_string() + " - " + b.to_string());
  }
  return ext_add(a, -b);
}

ExtRealUpper ext_sum(std::span<const ExtRealUpper> values) {
  Rational total = 0;
  for (const auto& v : values) {
    if (v.is_inf()) return ExtRealUpper::inf();
    total += v.get().value();
  }
  return ExtRealUpper(ExtReal(total));
}

bool ext_sum_equals(const ExtReal& a, const ExtReal& b, const ExtReal& c) {
  if ((b.is_pos_inf() && c.is_neg_inf()) || (b.is_neg_inf() && c.is_pos_inf())) return false;
  return a == ext_add(b, c);
}

bool ext_diff_equals(const ExtReal& a, const ExtReal& b, const ExtReal& c) {
  if ((b.is_pos_inf() && c.is_pos_inf()) || (b.is_neg_inf() && c.is_neg_inf())) return false;
  return a == ext_sub(b, c);
}

}  // namespace bc
