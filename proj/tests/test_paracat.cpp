#include <set>
#include <vector>

#include "brokencycle/paracat.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace {

using bc::ParaMap;

ParaMap map(int m, int n, std::vector<std::int64_t> v) { return ParaMap::from_values(m, n, v); }

TEST(ParaMap, FromValuesValidatesAndCanonicalizes) {
  EXPECT_BC_ERROR(map(1, 1, {1, 0}), bc::ErrorCode::kNotMonotone);
  EXPECT_BC_ERROR(map(1, 1, {0, 3}), bc::ErrorCode::kNotMonotone);
  ParaMap f = map(1, 1, {2, 3});
  EXPECT_EQ(f.shift(), 1);
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(f(0), 2);
  EXPECT_EQ(f(-1), 1);
}

TEST(ParaMap, ComposeExamples) {
  ParaMap f = map(1, 1, {0, 2});
  EXPECT_EQ(bc::compose(ParaMap::identity(1), f), f);
  ParaMap s = ParaMap::period_shift(2);
  ParaMap ss = bc::compose(s, s);
  EXPECT_EQ(ss.canonical(), ParaMap::identity(2));
  EXPECT_EQ(ss.shift(), 2);
  // The two surjections Par(1) -> Par(0).
  ParaMap g = map(1, 0, {0, 0});
  ParaMap h = map(1, 0, {0, 1});
  ParaMap hg_pre = map(1, 1, {0, 1});
  for (std::int64_t x = -4; x <= 4; ++x) {
    EXPECT_EQ(bc::compose(h, hg_pre)(x), h(hg_pre(x)));
    EXPECT_EQ(bc::compose(g, hg_pre)(x), g(hg_pre(x)));
  }
  EXPECT_BC_ERROR(bc::compose(g, g), bc::ErrorCode::kTypeMismatch);
}

TEST(ParaMap, Classify) {
  EXPECT_EQ(bc::classify(ParaMap::identity(2)), bc::MapClass::kBoth);
  EXPECT_EQ(bc::classify(map(0, 1, {0})), bc::MapClass::kInjective);
  EXPECT_EQ(bc::classify(map(1, 0, {0, 0})), bc::MapClass::kSurjective);
  EXPECT_EQ(bc::classify(map(1, 1, {0, 0})), bc::MapClass::kNeither);
}

TEST(EnumerateHom, SpecExamples) {
  EXPECT_EQ(bc::enumerate_hom(0, 0, bc::HomKind::kAll).size(), 1U);
  EXPECT_EQ(bc::enumerate_hom(1, 1, bc::HomKind::kAll).size(), 6U);
  EXPECT_EQ(bc::enumerate_hom(0, 1, bc::HomKind::kSurj).size(), 0U);
  EXPECT_EQ(bc::enumerate_hom(0, 1, bc::HomKind::kInj).size(), 2U);
  EXPECT_EQ(bc::enumerate_hom(1, 0, bc::HomKind::kSurj).size(), 2U);
}

TEST(EnumerateHom, MatchesFrozenOracleTables) {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(bc::enumerate_hom(m, n, bc::HomKind::kAll).size(), bc::oracle::kHomTable[m][n]);
      EXPECT_EQ(bc::enumerate_hom(m, n, bc::HomKind::kInj).size(), bc::oracle::kInjTable[m][n]);
      EXPECT_EQ(bc::enumerate_hom(m, n, bc::HomKind::kSurj).size(), bc::oracle::kSurjTable[m][n]);
    }
  }
}

TEST(EnumerateHom, CapIsEnforced) {
  EXPECT_BC_ERROR(bc::enumerate_hom(3, 3, bc::HomKind::kAll, 10), bc::ErrorCode::kResourceBound);
  EXPECT_BC_ERROR(bc::parse_hom_kind("bijective"), bc::ErrorCode::kInvalidArgument);
}

TEST(Dualize, Examples) {
  EXPECT_EQ(bc::dualize_map(ParaMap::identity(2)), ParaMap::identity(2));
  ParaMap f = map(0, 1, {0});
  ParaMap d = bc::dualize_map(f);
  EXPECT_EQ(d.m(), 1);
  EXPECT_EQ(d.n(), 0);
  EXPECT_EQ(d(0), 0);
  EXPECT_EQ(d(1), 0);
  EXPECT_TRUE(bc::is_surjective(d));
  EXPECT_EQ(bc::compose(d, f), ParaMap::identity(0));
}

TEST(Dualize, ContravariantAndInvolutive) {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int p = 0; p <= 2; ++p) {
        for (const auto& g : bc::enumerate_hom(n, p, bc::HomKind::kAll)) {
          for (const auto& f : bc::enumerate_hom(m, n, bc::HomKind::kAll)) {
            EXPECT_EQ(bc::dualize_map(bc::compose(g.rep(), f.rep())),
                      bc::compose(bc::dualize_map(f.rep()), bc::dualize_map(g.rep())));
          }
        }
      }
      for (const auto& f : bc::enumerate_hom(m, n, bc::HomKind::kAll)) {
        EXPECT_EQ(bc::double_dual_transport(f.rep()), f.rep());
        // The unit is natural.
        ParaMap dd = bc::dualize_map(bc::dualize_map(f.rep()));
        EXPECT_EQ(bc::compose(dd, bc::double_dual_unit(m)), bc::compose(bc::double_dual_unit(n), f.rep()));
      }
    }
  }
}

TEST(EmbedSimplex, Examples) {
  std::vector<int> id{0, 1, 2};
  EXPECT_EQ(bc::embed_simplex(id, 2), ParaMap::identity(2));
  std::vector<int> face{1};
  EXPECT_TRUE(bc::is_injective(bc::embed_simplex(face, 1)));
  std::vector<int> bad{1, 0};
  EXPECT_BC_ERROR(bc::embed_simplex(bad, 1), bc::ErrorCode::kNotMonotone);
}

TEST(ShiftAction, GroupAction) {
  for (const auto& h : bc::enumerate_hom(2, 1, bc::HomKind::kAll)) {
    const ParaMap& f = h.rep();
    EXPECT_EQ(bc::shift_action(f, 0), f);
    EXPECT_EQ(bc::shift_action(bc::shift_action(f, 1), -1), f);
    EXPECT_EQ(bc::cyc_canonicalize(bc::shift_action(f, 3)), bc::CycMap(f));
  }
}

TEST(CycMap, CompositionIndependentOfRepresentatives) {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int p = 0; p <= 2; ++p) {
        for (const auto& g : bc::enumerate_hom(n, p, bc::HomKind::kAll)) {
          for (const auto& f : bc::enumerate_hom(m, n, bc::HomKind::kAll)) {
            bc::CycMap expected = bc::compose(g, f);
            for (int a = -2; a <= 2; ++a) {
              for (int b = -2; b <= 2; ++b) {
                EXPECT_EQ(bc::cyc_canonicalize(
                              bc::compose(bc::shift_action(g.rep(), a), bc::shift_action(f.rep(), b))),
                          expected);
              }
            }
          }
        }
      }
    }
  }
}

TEST(Parasimplex, Codes) {
  bc::Parasimplex p{2};
  EXPECT_EQ(p.to_global({-1, 2}), -1);
  EXPECT_EQ(p.to_code(-1), (bc::ElementCode{-1, 2}));
  std::vector<bc::ElementCode> codes{{0, 1}, {1, 0}};
  EXPECT_EQ(ParaMap::from_codes(1, 2, codes).full_values(), (std::vector<std::int64_t>{1, 3}));
}

}  // namespace
