#include <random>
#include <vector>

#include "brokencycle/consheaf.hpp"
#include "test_util.hpp"

namespace {

using bc::ConvexRelation;
using bc::Field;
using bc::Matrix;
using bc::ParaPreorder;
using bc::UpSet;

const Field kF(101);

UpSet maximal_strata(const bc::ConvPoset& c) {
  std::vector<bool> m(c.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) m[i] = c.elements[i].gap_count() == 1;
  return UpSet(c, m);
}

TEST(Sections, ConstantSheaf) {
  ParaPreorder p1 = ParaPreorder::simplex(1);
  bc::StratSheaf f = bc::constant_sheaf(p1, kF, 2);
  EXPECT_EQ(bc::sections(f, UpSet::all(f.poset())).dim, 2U);
  EXPECT_EQ(bc::sections(f, maximal_strata(f.poset())).dim, 4U);
  EXPECT_EQ(bc::sections(f, UpSet::empty(f.poset())).dim, 0U);
  for (int period = 1; period <= 3; ++period) {
    for (const auto& p : bc::enumerate_preorders(period)) {
      bc::StratSheaf g = bc::constant_sheaf(p, kF, 3);
      EXPECT_EQ(bc::sections(g, UpSet::all(g.poset())).dim, 3U);
    }
  }
}

TEST(Sections, BasisIsCompatible) {
  std::mt19937_64 rng(5);
  bc::StratSheaf f = bc::random_sheaf(ParaPreorder::simplex(2), kF, 3, rng);
  const bc::ConvPoset& c = f.poset();
  UpSet all = UpSet::all(c);
  bc::Sections s = bc::sections(f, all);
  EXPECT_EQ(s.basis.cols(), s.dim);
  for (std::size_t col = 0; col < s.dim; ++col) {
    for (const auto& [lo, up] : c.covers) {
      Matrix vlo = s.basis.block(s.offsets[lo], col, f.dim_at(lo), 1);
      Matrix vup = s.basis.block(s.offsets[up], col, f.dim_at(up), 1);
      EXPECT_EQ(f.edge(c.elements[lo].mask(), c.elements[up].mask()) * vlo, vup);
    }
  }
  // Restricting to a smaller up-set lands inside its sections.
  UpSet v = maximal_strata(c);
  Matrix r = bc::restriction(f, all, v);
  EXPECT_TRUE(bc::column_span_contains(bc::sections(f, v).basis, r * s.basis));
  EXPECT_BC_ERROR(bc::restriction(f, v, all), bc::ErrorCode::kInvalidArgument);
}

TEST(Validation, DiamondMustCommute) {
  ParaPreorder p2 = ParaPreorder::simplex(2);
  bc::StratSheafData d = bc::constant_sheaf(p2, kF, 1).data();
  EXPECT_NO_THROW(bc::validate_sheaf(d));
  bc::StratSheafData bad = d;
  bad.maps[{3U, 1U}] = Matrix(kF, {{2}});
  EXPECT_BC_ERROR(bc::validate_sheaf(bad), bc::ErrorCode::kNotFunctorial);
  bc::StratSheafData wrong_shape = d;
  wrong_shape.maps[{3U, 1U}] = Matrix(kF, {{1, 0}});
  EXPECT_BC_ERROR(bc::validate_sheaf(wrong_shape), bc::ErrorCode::kDimensionMismatch);
}

TEST(UpSets, Validation) {
  bc::ConvPoset c = bc::enumerate_conv(ParaPreorder::simplex(1));
  std::vector<bool> only_least(c.size(), false);
  only_least[c.least_index()] = true;
  EXPECT_BC_ERROR(UpSet(c, only_least), bc::ErrorCode::kNotUpwardClosed);
  EXPECT_EQ(UpSet::generated_by(c, {ConvexRelation::least(c.base)}), UpSet::all(c));
  EXPECT_EQ(UpSet::generated_by(c, {}), UpSet::empty(c));
  // Conv(Par(1)) is a V shape: 5 up-sets.
  EXPECT_EQ(bc::enumerate_upsets(c).size(), 5U);
  UpSet m = maximal_strata(c);
  EXPECT_TRUE(m.subset_of(UpSet::all(c)));
  EXPECT_EQ(m.unite(UpSet::all(c)), UpSet::all(c));
  EXPECT_EQ(m.intersect(UpSet::empty(c)), UpSet::empty(c));
}

TEST(Stalks, MatchDims) {
  std::mt19937_64 rng(6);
  bc::StratSheaf f = bc::random_sheaf(ParaPreorder({1, 2}), kF, 4, rng);
  for (const auto& e : f.poset().elements) {
    bc::FinVect s = bc::stalk(f, e);
    EXPECT_EQ(s.dim, f.dim(e));
    EXPECT_LE(s.dim, 4U);
    EXPECT_EQ(s.field, kF);
  }
}

TEST(Pullback, ConstantAndIdentity) {
  ParaPreorder p2 = ParaPreorder::simplex(2);
  ParaPreorder p1 = ParaPreorder::simplex(1);
  std::vector<std::int64_t> v{0, 0, 1};
  bc::PreordMap proj = bc::is_valid_morphism(p2, p1, v);
  bc::StratSheaf pulled = bc::pullback_sheaf(proj, bc::constant_sheaf(p2, kF, 2));
  bc::StratSheaf constant = bc::constant_sheaf(p1, kF, 2);
  EXPECT_EQ(pulled.data().dims, constant.data().dims);
  EXPECT_EQ(pulled.data().maps, constant.data().maps);

  std::mt19937_64 rng(7);
  bc::StratSheaf f = bc::random_sheaf(p2, kF, 3, rng);
  bc::StratSheaf same = bc::pullback_sheaf(bc::identity_map(p2), f);
  EXPECT_EQ(same.data().dims, f.data().dims);
  EXPECT_EQ(same.data().maps, f.data().maps);
  EXPECT_BC_ERROR(bc::pullback_sheaf(proj, constant), bc::ErrorCode::kBaseMismatch);
}

TEST(Gluing, DisjointAndNested) {
  bc::StratSheaf f = bc::constant_sheaf(ParaPreorder::simplex(1), kF, 2);
  const bc::ConvPoset& c = f.poset();
  UpSet a = UpSet::generated_by(c, {c.elements[0]});
  UpSet b = UpSet::generated_by(c, {c.elements[1]});
  bc::GluingReport disjoint = bc::gluing_check(f, a, b);
  EXPECT_TRUE(disjoint.pass) << disjoint.detail;
  EXPECT_EQ(disjoint.dim_union, 4U);
  bc::GluingReport nested = bc::gluing_check(f, a, UpSet::all(c));
  EXPECT_TRUE(nested.pass) << nested.detail;
  EXPECT_EQ(nested.dim_union, 2U);
}

TEST(Gluing, RandomSheaves) {
  std::mt19937_64 rng(8);
  for (int period = 1; period <= 3; ++period) {
    for (const auto& p : bc::enumerate_preorders(period)) {
      bc::StratSheaf f = bc::random_sheaf(p, kF, 3, rng);
      auto ups = bc::enumerate_upsets(f.poset());
      bc::GluingSweep s = bc::gluing_sweep_serial(f, ups);
      EXPECT_EQ(s.failures, 0U) << s.first_failure;
      EXPECT_EQ(s.pairs, ups.size() * (ups.size() + 1) / 2);
    }
  }
}

TEST(Gluing, ParallelMatchesSerial) {
  std::mt19937_64 rng(9);
  bc::StratSheaf f = bc::random_sheaf(ParaPreorder::simplex(2), Field(3), 3, rng);
  auto ups = bc::enumerate_upsets(f.poset());
  bc::GluingSweep a = bc::gluing_sweep_serial(f, ups);
  bc::GluingSweep b = bc::gluing_sweep(f, ups);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(UpSets, ResourceBound) {
  bc::ConvPoset c = bc::enumerate_conv(ParaPreorder::simplex(4));
  EXPECT_GT(c.size(), bc::kMaxUpSetPoset);
  EXPECT_BC_ERROR(bc::enumerate_upsets(c), bc::ErrorCode::kResourceBound);
}

}  // namespace
