#include <random>

#include "brokencycle/json_io.hpp"
#include "test_util.hpp"

namespace {

namespace js = bc::json;
using bc::Field;
using bc::ParaPreorder;

TEST(Json, Scalars) {
  for (const bc::ExtReal& x : {bc::ExtReal::pos_inf(), bc::ExtReal::neg_inf(), bc::ExtReal(bc::Rational(-7, 3))}) {
    EXPECT_EQ(js::read_extreal(js::write(x)), x);
  }
  Field f(7);
  bc::Matrix m(f, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(js::read_matrix(js::write(m), f, 2, 3), m);
  EXPECT_BC_ERROR(js::read_matrix(js::write(m), f, 3, 2), bc::ErrorCode::kDimensionMismatch);
}

TEST(Json, Combinatorics) {
  EXPECT_EQ(js::read_parasimplex(js::write(bc::Parasimplex{3})).n, 3);
  for (const auto& h : bc::enumerate_hom(2, 1, bc::HomKind::kAll)) {
    bc::ParaMap f = bc::shift_action(h.rep(), 2);
    EXPECT_EQ(js::read_para_map(js::write(f)), f);
  }
  ParaPreorder p({1, 2, 1});
  EXPECT_EQ(js::read_preorder(js::write(p)), p);
  for (const auto& e : bc::enumerate_conv(p).elements) EXPECT_EQ(js::read_relation(js::write(e)), e);
  for (const auto& r : bc::enumerate_morphisms(p, ParaPreorder::simplex(1))) {
    EXPECT_EQ(js::read_preord_map(js::write(r)), r);
  }
}

TEST(Json, Points) {
  bc::FPoint p = bc::validate_point(ParaPreorder::simplex(1), {bc::ExtRealUpper(3), bc::ExtRealUpper::inf()});
  EXPECT_EQ(js::read_point(js::write(p)), p);
  bc::BetaPoint b = bc::section_point(p, 1);
  EXPECT_EQ(js::read_beta(js::write(b)), b);
  bc::BetaPoint fixed = bc::fixed_point(p, 1);
  EXPECT_EQ(js::read_beta(js::write(fixed)), fixed);
  js::Json bad = js::write(p);
  bad["gaps"] = {"2/1", "5/1"};
  EXPECT_BC_ERROR(js::read_point(bad), bc::ErrorCode::kNoInfinityGap);
}

TEST(Json, SheavesAndReps) {
  std::mt19937_64 rng(41);
  bc::StratSheaf f = bc::random_sheaf(ParaPreorder::simplex(2), Field(11), 3, rng);
  bc::StratSheaf g = js::read_sheaf(js::write(f));
  EXPECT_EQ(g.data().dims, f.data().dims);
  EXPECT_EQ(g.data().maps, f.data().maps);
  EXPECT_EQ(g.field(), f.field());
  bc::ParaRep r = bc::random_rep(2, Field(11), 3, bc::Variant::kPara, rng);
  EXPECT_EQ(js::read_rep(js::write(r)), r);
}

TEST(Json, Complexes) {
  std::mt19937_64 rng(42);
  bc::TwoPeriodicComplex x = bc::random_complex(Field(5), 3, rng);
  EXPECT_EQ(js::read_complex(js::write(x)), x);
  bc::FilteredObject fo = bc::random_filtration(Field(5), 3, 3, rng);
  EXPECT_EQ(js::read_filtration(js::write(fo)), fo);
  js::Json h = js::write(bc::HomologyDims{2, 1});
  EXPECT_EQ(h, js::Json::parse("[2, 1]"));
}

TEST(Json, MalformedInputIsParseError) {
  EXPECT_BC_ERROR(js::read_preorder(js::Json::parse(R"({"size": [1]})")), bc::ErrorCode::kParseError);
  EXPECT_BC_ERROR(js::read_preorder(js::Json::parse(R"({"sizes": "one"})")), bc::ErrorCode::kParseError);
  EXPECT_BC_ERROR(js::read_extreal(js::Json(3.5)), bc::ErrorCode::kParseError);
  EXPECT_BC_ERROR(js::read_complex(js::Json::array()), bc::ErrorCode::kParseError);
  js::Json err = js::write_error(bc::Error(bc::ErrorCode::kNotMonotone, "x"));
  EXPECT_EQ(err["error"], bc::error_name(bc::ErrorCode::kNotMonotone));
}

}  // namespace
