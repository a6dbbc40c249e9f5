#include <random>
#include <vector>

#include "brokencycle/fspace.hpp"
#include "test_util.hpp"

namespace {

using bc::ExtReal;
using bc::ExtRealUpper;
using bc::FPoint;
using bc::ParaPreorder;

const ExtRealUpper kInf = ExtRealUpper::inf();

FPoint point(const ParaPreorder& base, std::vector<ExtRealUpper> gaps) {
  return bc::validate_point(base, std::move(gaps));
}

TEST(FPoint, Validation) {
  ParaPreorder p1 = ParaPreorder::simplex(1);
  EXPECT_NO_THROW(point(p1, {3, kInf}));
  EXPECT_NO_THROW(point(p1, {kInf, kInf}));
  EXPECT_NO_THROW(point(p1, {-4, kInf}));
  EXPECT_BC_ERROR(point(p1, {2, 5}), bc::ErrorCode::kNoInfinityGap);
  EXPECT_BC_ERROR(point(ParaPreorder({2}), {kInf, 1}), bc::ErrorCode::kInfiniteGapInsideClass);
  EXPECT_BC_ERROR(point(p1, {kInf}), bc::ErrorCode::kInvalidArgument);
}

TEST(FPoint, AlphaEval) {
  FPoint p = point(ParaPreorder::simplex(2), {1, 2, kInf});
  EXPECT_EQ(bc::alpha_eval(p, 0, 2).get(), ExtReal(3));
  EXPECT_EQ(bc::alpha_eval(p, 0, 0).get(), ExtReal(0));
  EXPECT_TRUE(bc::alpha_eval(p, 1, 3).is_inf());
  EXPECT_TRUE(bc::alpha_eval(p, 0, 3).is_inf());
  EXPECT_EQ(bc::alpha_eval(p, 3, 5).get(), ExtReal(3));
  EXPECT_BC_ERROR(bc::alpha_eval(p, 2, 1), bc::ErrorCode::kNotAnArrow);
  // Inside a class both orders are arrows and the values are opposite.
  FPoint q = point(ParaPreorder({2}), {5, kInf});
  EXPECT_EQ(bc::alpha_eval(q, 1, 0).get(), ExtReal(-5));
}

TEST(FPoint, StrataExamples) {
  ParaPreorder p1 = ParaPreorder::simplex(1);
  EXPECT_EQ(bc::stratum_of(point(p1, {3, kInf})).gaps(), std::vector<int>{1});
  EXPECT_EQ(bc::stratum_of(point(p1, {kInf, kInf})), bc::ConvexRelation::least(p1));
}

TEST(FPoint, WitnessPointsCoverEveryStratum) {
  for (int period = 1; period <= 4; ++period) {
    for (const auto& p : bc::enumerate_preorders(period)) {
      for (const auto& e : bc::enumerate_conv(p).elements) EXPECT_EQ(bc::stratum_of(bc::witness_point(e)), e);
    }
  }
}

TEST(FPoint, PullbackExample) {
  ParaPreorder p2 = ParaPreorder::simplex(2);
  ParaPreorder p1 = ParaPreorder::simplex(1);
  std::vector<std::int64_t> v{0, 0, 1};
  bc::PreordMap f = bc::is_valid_morphism(p2, p1, v);
  FPoint p = point(p1, {3, kInf});
  EXPECT_EQ(bc::pullback_point(f, p), point(p2, {0, 3, kInf}));
  EXPECT_EQ(bc::pullback_point(bc::identity_map(p1), p), p);
  EXPECT_BC_ERROR(bc::pullback_point(bc::identity_map(p2), p), bc::ErrorCode::kBaseMismatch);
}

TEST(FPoint, FiberInvariants) {
  ParaPreorder p1 = ParaPreorder::simplex(1);
  EXPECT_EQ(bc::fiber_invariants(point(p1, {3, kInf})), (bc::FiberInvariants{0, 1}));
  EXPECT_EQ(bc::fiber_invariants(point(p1, {kInf, kInf})), (bc::FiberInvariants{1, 2}));
}

TEST(FPoint, FiberInvariantsStableUnderPeriodBijections) {
  ParaPreorder p2 = ParaPreorder::simplex(2);
  FPoint p = point(p2, {kInf, 2, kInf});
  for (std::int64_t k = 0; k < 3; ++k) {
    bc::PreordMap rot = bc::from_para_map(bc::ParaMap::rotation(2, k));
    EXPECT_EQ(bc::fiber_invariants(bc::pullback_point(rot, p)), bc::fiber_invariants(p));
  }
}

TEST(BetaPoint, SectionPointExample) {
  FPoint p = point(ParaPreorder::simplex(1), {3, kInf});
  bc::BetaPoint b = bc::section_point(p, 1);
  EXPECT_EQ(b.at(0), ExtReal(3));
  EXPECT_EQ(b.at(1), ExtReal(0));
  EXPECT_TRUE(b.at(2).is_neg_inf());
  EXPECT_TRUE(b.at(-1).is_pos_inf());
  EXPECT_EQ(b.lo(), 0);
  EXPECT_EQ(b.hi(), 1);
}

TEST(BetaPoint, DistancesBetweenSections) {
  FPoint p = point(ParaPreorder({1, 2, 1}), {2, -1, kInf, 4});
  for (std::int64_t i = -4; i <= 4; ++i) {
    EXPECT_EQ(bc::section_point(p, i).at(i), ExtReal(0));
    for (std::int64_t j = -4; j <= 4; ++j) {
      if (!p.base().leq(i, j)) continue;
      ExtRealUpper a = bc::alpha_eval(p, i, j);
      if (!a.is_finite()) continue;
      EXPECT_EQ(bc::distance(bc::section_point(p, i), bc::section_point(p, j)), a.get()) << i << " " << j;
    }
  }
}

TEST(BetaPoint, ActionAndAntisymmetry) {
  FPoint p = point(ParaPreorder::simplex(2), {1, kInf, kInf});
  bc::BetaPoint b = bc::section_point(p, 0);
  EXPECT_EQ(bc::distance(b, b), ExtReal(0));
  EXPECT_EQ(bc::distance(b, b.act(0, 5)), ExtReal(5));
  EXPECT_EQ(b.act(1, 0).act(-1, 0), b);
  std::vector<bc::BetaPoint> pts;
  for (std::int64_t i = -3; i <= 3; ++i) pts.push_back(bc::section_point(p, i));
  pts.push_back(bc::fixed_point(p, 1));
  pts.push_back(bc::fixed_point(p, 2));
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (x == y && x.is_fixed()) {
        EXPECT_BC_ERROR(bc::distance(x, y), bc::ErrorCode::kUndefinedAtFixedDiagonal);
        continue;
      }
      EXPECT_EQ(bc::distance(x, y), -bc::distance(y, x));
      // Simultaneous translation leaves distances alone.
      EXPECT_EQ(bc::distance(x.act(1, 2), y.act(1, 2)), bc::distance(x, y));
    }
  }
}

TEST(BetaPoint, Validation) {
  FPoint p = point(ParaPreorder::simplex(1), {3, kInf});
  EXPECT_BC_ERROR(bc::BetaPoint(p, 0, {ExtReal(3), ExtReal(1)}), bc::ErrorCode::kInvalidArgument);
  EXPECT_BC_ERROR(bc::fixed_point(p, 0), bc::ErrorCode::kInvalidArgument);
  EXPECT_TRUE(bc::fixed_point(p, 1).is_fixed());
}

TEST(FPoint, CornerProperty) {
  std::mt19937_64 rng(11);
  for (int period = 1; period <= 4; ++period) {
    for (const auto& base : bc::enumerate_preorders(period)) {
      for (const auto& e : bc::enumerate_conv(base).elements) {
        FPoint w = bc::witness_point(e);
        // Summing the gaps over a full period is always infinite.
        EXPECT_TRUE(bc::alpha_eval(w, 0, base.period()).is_inf());
      }
    }
  }
}

}  // namespace
