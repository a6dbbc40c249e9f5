#include <gtest/gtest.h>

#include "oracle.hpp"

namespace {

namespace o = bc::oracle;

void expect_counts(const o::ConvTildeCounts& a, const o::ConvTildeCounts& b) {
  EXPECT_EQ(a.preorders, b.preorders);
  EXPECT_EQ(a.objects, b.objects);
  EXPECT_EQ(a.morphisms, b.morphisms);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.cartesian, b.cartesian);
}

TEST(Oracle, HomTablesAreReproducible) {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(o::hom_count(m, n, o::Kind::kAll), o::kHomTable[m][n]);
      EXPECT_EQ(o::hom_count(m, n, o::Kind::kInj), o::kInjTable[m][n]);
      EXPECT_EQ(o::hom_count(m, n, o::Kind::kSurj), o::kSurjTable[m][n]);
      EXPECT_EQ(o::hom_closed_form(m, n), o::kHomTable[m][n]);
    }
  }
}

TEST(Oracle, BijectionsAreRotations) {
  // Self-bijections of Par(n) are the n + 1 rotations.
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(o::kInjTable[n][n], static_cast<std::size_t>(n + 1));
    EXPECT_EQ(o::kSurjTable[n][n], static_cast<std::size_t>(n + 1));
  }
}

TEST(Oracle, ConvCounts) {
  EXPECT_EQ(o::conv_count({1}), 1U);
  EXPECT_EQ(o::conv_count({1, 1, 1}), 7U);
  EXPECT_EQ(o::conv_count({2, 1}), 3U);
}

TEST(Oracle, ConvTildeIsReproducible) {
  for (int n = 0; n <= 3; ++n) expect_counts(o::conv_tilde(n), o::kConvTilde[n]);
}

}  // namespace
