#include <algorithm>
#include <vector>

#include "brokencycle/preord.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace {

using bc::ConvexRelation;
using bc::ParaPreorder;
using bc::PreordMap;

PreordMap morph(const ParaPreorder& s, const ParaPreorder& t, std::vector<std::int64_t> v) {
  return bc::is_valid_morphism(s, t, v);
}

TEST(ParaPreorder, Basics) {
  ParaPreorder p({2, 1});
  EXPECT_EQ(p.period(), 3);
  EXPECT_EQ(p.n_quotient(), 1);
  EXPECT_TRUE(p.equivalent(0, 1));
  EXPECT_TRUE(p.leq(2, 3));
  EXPECT_FALSE(p.leq(3, 2));
  EXPECT_EQ(p.global_class(-1), -1);
  EXPECT_BC_ERROR(ParaPreorder(std::vector<int>{}), bc::ErrorCode::kInvalidArgument);
  EXPECT_BC_ERROR(ParaPreorder({1, 0}), bc::ErrorCode::kInvalidArgument);
}

TEST(ParaPreorder, EnumerateCompositions) {
  for (int p = 1; p <= 6; ++p) EXPECT_EQ(bc::enumerate_preorders(p).size(), std::size_t{1} << (p - 1));
}

TEST(QuotientBySim, Examples) {
  auto [a, pa] = bc::quotient_by_sim(ParaPreorder({1, 1, 1}));
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(pa, bc::identity_map(ParaPreorder::simplex(2)));
  EXPECT_EQ(bc::quotient_by_sim(ParaPreorder({2, 1})).first.n, 1);
  EXPECT_EQ(bc::quotient_by_sim(ParaPreorder({3})).first.n, 0);
}

TEST(Conv, Examples) {
  EXPECT_EQ(bc::enumerate_conv(ParaPreorder({1, 1, 1})).size(), 7U);
  EXPECT_EQ(bc::enumerate_conv(ParaPreorder({2, 1})).size(), 3U);
  EXPECT_EQ(bc::enumerate_conv(ParaPreorder::simplex(0)).size(), 1U);
  for (const auto& p : bc::enumerate_preorders(4)) {
    EXPECT_EQ(bc::enumerate_conv(p).size(), bc::oracle::conv_count(p.sizes()));
  }
}

TEST(Conv, OrderAndCovers) {
  ParaPreorder p = ParaPreorder::simplex(2);
  bc::ConvPoset c = bc::enumerate_conv(p);
  EXPECT_EQ(c.elements[c.least_index()], ConvexRelation::least(p));
  for (const auto& e : c.elements) EXPECT_TRUE(ConvexRelation::least(p).leq(e));
  // Each element with g gaps has g covers above it (g > 1).
  EXPECT_EQ(c.covers.size(), 3U * 2U + 3U * 0U + 1U * 3U);
  for (const auto& [lo, up] : c.covers) {
    EXPECT_TRUE(c.elements[lo].leq(c.elements[up]));
    EXPECT_EQ(c.elements[lo].gap_count(), c.elements[up].gap_count() + 1);
  }
  std::vector<int> none;
  EXPECT_BC_ERROR(ConvexRelation(p, none), bc::ErrorCode::kInvalidArgument);
  std::vector<int> out_of_range{3};
  EXPECT_BC_ERROR(ConvexRelation(p, out_of_range), bc::ErrorCode::kInvalidArgument);
}

TEST(QuotientByRelation, Examples) {
  ParaPreorder p = ParaPreorder::simplex(2);
  auto [a, pa] = bc::quotient_by_relation(p, ConvexRelation::least(p));
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(pa, bc::identity_map(p));
  std::vector<int> g2{2};
  EXPECT_EQ(bc::quotient_by_relation(p, ConvexRelation(p, g2)).first.n, 0);
  std::vector<int> g02{0, 2};
  ConvexRelation e(p, g02);
  EXPECT_EQ(bc::quotient_by_relation(p, e).first.n, 1);
  EXPECT_TRUE(e.related(1, 2));
  EXPECT_FALSE(e.related(0, 1));
  EXPECT_FALSE(e.related(2, 3));
}

TEST(PullbackRelation, Examples) {
  ParaPreorder p2 = ParaPreorder::simplex(2);
  ParaPreorder p1 = ParaPreorder::simplex(1);
  std::vector<int> g1{1};
  EXPECT_EQ(bc::pullback_relation(bc::identity_map(p2), ConvexRelation(p2, g1)), ConvexRelation(p2, g1));
  PreordMap proj = morph(p2, p1, {0, 0, 1});
  ConvexRelation pulled = bc::pullback_relation(proj, ConvexRelation::least(p1));
  EXPECT_EQ(pulled.gap_count(), 2);
  EXPECT_TRUE(pulled.related(0, 1));
  EXPECT_EQ(pulled.gaps(), (std::vector<int>{1, 2}));
}

TEST(Morphisms, Validation) {
  ParaPreorder p1 = ParaPreorder::simplex(1);
  EXPECT_NO_THROW(bc::identity_map(p1));
  EXPECT_BC_ERROR(morph(p1, p1, {0, 0}), bc::ErrorCode::kNotEssentiallySurjective);
  EXPECT_BC_ERROR(morph(p1, p1, {1, 0}), bc::ErrorCode::kNotMonotone);
  // Equivalent elements must land in one class.
  EXPECT_BC_ERROR(morph(ParaPreorder({2}), p1, {0, 1}), bc::ErrorCode::kNotMonotone);
  EXPECT_NO_THROW(morph(ParaPreorder({2}), ParaPreorder::simplex(0), {0, 0}));
  // Within a class the order of images is free.
  EXPECT_NO_THROW(morph(p1, ParaPreorder({2}), {1, 0}));
}

TEST(Morphisms, EnumerationMatchesOracle) {
  auto pres = bc::enumerate_preorders(1);
  for (int p = 2; p <= 3; ++p) {
    for (auto& x : bc::enumerate_preorders(p)) pres.push_back(x);
  }
  for (const auto& s : pres) {
    for (const auto& t : pres) {
      auto lib = bc::enumerate_morphisms(s, t);
      auto brute = bc::oracle::preorder_maps(s.sizes(), t.sizes());
      ASSERT_EQ(lib.size(), brute.size()) << s.to_string() << " -> " << t.to_string();
      std::vector<std::vector<std::int64_t>> values;
      for (const auto& r : lib) values.push_back(r.values());
      std::sort(values.begin(), values.end());
      std::sort(brute.begin(), brute.end());
      EXPECT_EQ(values, brute);
    }
  }
}

TEST(Morphisms, ComposeAndShift) {
  ParaPreorder s({1, 2});
  ParaPreorder t = ParaPreorder::simplex(1);
  for (const auto& f : bc::enumerate_morphisms(s, t)) {
    EXPECT_EQ(bc::compose(bc::identity_map(t), f), f);
    EXPECT_EQ(bc::compose(f, bc::identity_map(s)), f);
    EXPECT_EQ(f.shifted(2).shifted(-2), f);
    EXPECT_EQ(f.shifted(1).canonical(), f);
  }
  EXPECT_BC_ERROR(bc::compose(bc::identity_map(s), bc::identity_map(t)), bc::ErrorCode::kTypeMismatch);
}

TEST(InducedQuotientMap, MatchesParaMaps) {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& h : bc::enumerate_hom(m, n, bc::HomKind::kSurj)) {
        PreordMap r = bc::from_para_map(h.rep());
        ParaPreorder s = ParaPreorder::simplex(m);
        ParaPreorder t = ParaPreorder::simplex(n);
        EXPECT_EQ(bc::as_para_map(r), h.rep());
        EXPECT_EQ(bc::induced_quotient_map(r, ConvexRelation::least(s), ConvexRelation::least(t)), h.rep());
      }
    }
  }
}

TEST(Amalgams, PointAndPoint) {
  ParaPreorder p0 = ParaPreorder::simplex(0);
  bc::AmalgamPoset a = bc::enumerate_amalgams(p0, p0);
  EXPECT_EQ(a.elements.size(), 3U);
  // The merged amalgam is above both strict interleavings.
  std::size_t merged = 0;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (a.elements[i].classes_per_period == 1) merged = i;
  }
  for (std::size_t i = 0; i < a.elements.size(); ++i) EXPECT_TRUE(a.leq[i][merged]);
}

TEST(Amalgams, JoinIsLeastUpperBound) {
  ParaPreorder i = ParaPreorder::simplex(1);
  ParaPreorder j = ParaPreorder({2});
  bc::AmalgamPoset a = bc::enumerate_amalgams(i, j);
  ASSERT_FALSE(a.elements.empty());
  for (std::size_t x = 0; x < a.elements.size(); ++x) {
    EXPECT_TRUE(a.leq[x][x]);
    for (std::size_t y = 0; y < a.elements.size(); ++y) {
      auto join = bc::join_amalgam(a.elements[x], a.elements[y], i, j);
      if (!join) continue;
      EXPECT_TRUE(bc::amalgam_leq(a.elements[x], *join, i, j));
      EXPECT_TRUE(bc::amalgam_leq(a.elements[y], *join, i, j));
      for (std::size_t z = 0; z < a.elements.size(); ++z) {
        if (a.leq[x][z] && a.leq[y][z]) EXPECT_TRUE(bc::amalgam_leq(*join, a.elements[z], i, j));
      }
    }
  }
}

TEST(Amalgams, ResourceBound) {
  EXPECT_BC_ERROR(bc::enumerate_amalgams(ParaPreorder::simplex(4), ParaPreorder::simplex(4)),
                  bc::ErrorCode::kResourceBound);
}

}  // namespace
