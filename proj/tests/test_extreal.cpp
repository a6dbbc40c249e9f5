#include <vector>

#include "brokencycle/extreal.hpp"
#include "test_util.hpp"

namespace {

using bc::ExtReal;
using bc::ExtRealUpper;
using bc::Rational;

const ExtReal kInf = ExtReal::pos_inf();
const ExtReal kNegInf = ExtReal::neg_inf();

TEST(ExtReal, AddConventions) {
  EXPECT_EQ(bc::ext_add(kInf, kInf), kInf);
  EXPECT_EQ(bc::ext_add(3, kNegInf), kNegInf);
  EXPECT_EQ(bc::ext_add(kNegInf, kNegInf), kNegInf);
  EXPECT_EQ(bc::ext_add(Rational(1, 2), Rational(1, 3)), ExtReal(Rational(5, 6)));
  EXPECT_BC_ERROR(bc::ext_add(kInf, kNegInf), bc::ErrorCode::kUndefinedExtOp);
  EXPECT_BC_ERROR(bc::ext_add(kNegInf, kInf), bc::ErrorCode::kUndefinedExtOp);
}

TEST(ExtReal, SubConventions) {
  EXPECT_EQ(bc::ext_sub(kInf, kNegInf), kInf);
  EXPECT_EQ(bc::ext_sub(kNegInf, kInf), kNegInf);
  EXPECT_EQ(bc::ext_sub(5, 2), ExtReal(3));
  EXPECT_EQ(bc::ext_sub(4, kInf), kNegInf);
  EXPECT_BC_ERROR(bc::ext_sub(kInf, kInf), bc::ErrorCode::kUndefinedExtOp);
  EXPECT_BC_ERROR(bc::ext_sub(kNegInf, kNegInf), bc::ErrorCode::kUndefinedExtOp);
}

TEST(ExtReal, Sum) {
  std::vector<ExtRealUpper> a{3, 4};
  EXPECT_EQ(bc::ext_sum(a).get(), ExtReal(7));
  std::vector<ExtRealUpper> b{3, ExtRealUpper::inf(), -5};
  EXPECT_TRUE(bc::ext_sum(b).is_inf());
  EXPECT_EQ(bc::ext_sum({}).get(), ExtReal(0));
}

TEST(ExtReal, UpperRejectsNegativeInfinity) {
  EXPECT_BC_ERROR(ExtRealUpper{kNegInf}, bc::ErrorCode::kInvalidArgument);
}

TEST(ExtReal, Order) {
  EXPECT_LT(kNegInf, ExtReal(-1000));
  EXPECT_LT(ExtReal(Rational(1, 3)), ExtReal(Rational(1, 2)));
  EXPECT_LT(ExtReal(1000000), kInf);
  EXPECT_EQ(-kInf, kNegInf);
}

TEST(ExtReal, TextRoundTrip) {
  for (const ExtReal& x : {kInf, kNegInf, ExtReal(Rational(-3, 4)), ExtReal(0), ExtReal(7)}) {
    EXPECT_EQ(ExtReal::parse(x.to_string()), x) << x.to_string();
  }
  EXPECT_EQ(ExtReal::parse("+inf"), kInf);
  EXPECT_EQ(ExtReal::parse("6/4"), ExtReal(Rational(3, 2)));
  EXPECT_EQ(ExtReal(3).to_string(), "3/1");
  EXPECT_BC_ERROR(ExtReal::parse("three"), bc::ErrorCode::kParseError);
  EXPECT_BC_ERROR(ExtReal::parse("1/0"), bc::ErrorCode::kParseError);
}

TEST(ExtReal, EquationsRequireDefinedSides) {
  EXPECT_TRUE(bc::ext_sum_equals(kInf, 3, kInf));
  EXPECT_TRUE(bc::ext_sum_equals(5, 2, 3));
  EXPECT_FALSE(bc::ext_sum_equals(kInf, kInf, kNegInf));
  EXPECT_TRUE(bc::ext_diff_equals(kInf, kInf, kNegInf));
  EXPECT_FALSE(bc::ext_diff_equals(kInf, kInf, kInf));
}

TEST(ExtReal, ValueOfInfinityThrows) { EXPECT_BC_ERROR((void)kInf.value(), bc::ErrorCode::kInvalidArgument); }

}  // namespace
