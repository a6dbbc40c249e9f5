#include <random>
#include <vector>

#include "brokencycle/sdot.hpp"
#include "test_util.hpp"

namespace {

using bc::ComplexMap;
using bc::Field;
using bc::FilteredObject;
using bc::HomologyDims;
using bc::Matrix;
using bc::TwoPeriodicComplex;

const Field kF(5);

TEST(Complex, ValidationAndHomology) {
  TwoPeriodicComplex acyclic(Matrix(kF, {{1}}), Matrix(kF, {{0}}));
  EXPECT_EQ(bc::homology_dims(acyclic), (HomologyDims{0, 0}));
  EXPECT_EQ(bc::homology_dims(TwoPeriodicComplex::trivial(kF, 2, 3)), (HomologyDims{2, 3}));
  EXPECT_EQ(bc::homology_dims(TwoPeriodicComplex::zero(kF)), (HomologyDims{0, 0}));
  EXPECT_BC_ERROR(TwoPeriodicComplex(Matrix(kF, {{1}}), Matrix(kF, {{1}})), bc::ErrorCode::kNotAComplex);
  EXPECT_BC_ERROR(TwoPeriodicComplex(Matrix(kF, {{1, 0}}), Matrix(kF, {{0}})), bc::ErrorCode::kDimensionMismatch);
}

TEST(Complex, ShiftIsInvolution) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    TwoPeriodicComplex x = bc::random_complex(kF, 4, rng);
    TwoPeriodicComplex s = bc::shift(x);
    EXPECT_EQ(bc::shift(s), x);
    EXPECT_EQ(s.dim(0), x.dim(1));
    HomologyDims h = bc::homology_dims(x);
    EXPECT_EQ(bc::homology_dims(s), (HomologyDims{h.h1, h.h0}));
  }
}

TEST(Cone, Examples) {
  std::mt19937_64 rng(32);
  TwoPeriodicComplex x = TwoPeriodicComplex::trivial(kF, 2, 1);
  TwoPeriodicComplex y = TwoPeriodicComplex::trivial(kF, 1, 3);
  EXPECT_EQ(bc::homology_dims(bc::cone(ComplexMap::identity(x))), (HomologyDims{0, 0}));
  TwoPeriodicComplex c = bc::cone(ComplexMap::zero(x, y));
  EXPECT_EQ(c.dim(0), 2U);
  EXPECT_EQ(c.dim(1), 5U);
  EXPECT_EQ(bc::homology_dims(c), (HomologyDims{2, 5}));
  EXPECT_BC_ERROR(ComplexMap(x, y, Matrix(kF, 1, 1), Matrix(kF, 3, 1)), bc::ErrorCode::kDimensionMismatch);
}

TEST(Cone, EulerAdditivity) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 30; ++k) {
    TwoPeriodicComplex x = bc::random_complex(kF, 3, rng);
    TwoPeriodicComplex y = bc::random_complex(kF, 3, rng);
    ComplexMap f = bc::random_map(x, y, rng);
    HomologyDims hx = bc::homology_dims(x);
    HomologyDims hy = bc::homology_dims(y);
    HomologyDims hc = bc::homology_dims(bc::cone(f));
    EXPECT_EQ(hc.euler(), hy.euler() - hx.euler());
    // The long exact sequence bounds the cone by the two ends.
    EXPECT_LE(hc.h0 + hc.h1, hx.h0 + hx.h1 + hy.h0 + hy.h1);
    EXPECT_EQ(bc::is_quasi_iso(f), hc == (HomologyDims{0, 0}));
  }
}

TEST(ComplexMap, ComposeAndValidate) {
  std::mt19937_64 rng(34);
  TwoPeriodicComplex x = bc::random_complex(kF, 3, rng);
  TwoPeriodicComplex y = bc::random_complex(kF, 3, rng);
  ComplexMap f = bc::random_map(x, y, rng);
  EXPECT_EQ(bc::compose(ComplexMap::identity(y), f), f);
  EXPECT_EQ(bc::compose(f, ComplexMap::identity(x)), f);
  EXPECT_EQ(bc::shift(bc::shift(f)), f);
  EXPECT_TRUE(bc::is_quasi_iso(ComplexMap::identity(x)));
  if (x != y) EXPECT_BC_ERROR(bc::compose(f, f), bc::ErrorCode::kInvalidArgument);
  TwoPeriodicComplex a(Matrix(kF, {{1}}), Matrix(kF, {{0}}));
  TwoPeriodicComplex t = TwoPeriodicComplex::trivial(kF, 1, 1);
  // f0 = 0, f1 = 1 does not commute with d0 = 1 on the source.
  EXPECT_BC_ERROR(ComplexMap(a, t, Matrix(kF, {{0}}), Matrix(kF, {{1}})), bc::ErrorCode::kInvalidArgument);
}

void expect_same_shape(const FilteredObject& a, const FilteredObject& b) {
  EXPECT_EQ(bc::fingerprint(a), bc::fingerprint(b));
}

TEST(Simplicial, FaceIdentities) {
  std::mt19937_64 rng(35);
  for (std::size_t n = 2; n <= 4; ++n) {
    FilteredObject f = bc::random_filtration(kF, n, 3, rng);
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        FilteredObject lhs = bc::face(bc::face(f, j), i);
        FilteredObject rhs = bc::face(bc::face(f, i), j - 1);
        if (i == 0) {
          expect_same_shape(lhs, rhs);
        } else {
          EXPECT_EQ(lhs, rhs) << i << " " << j;
        }
      }
    }
    EXPECT_BC_ERROR(bc::face(f, n + 1), bc::ErrorCode::kIndexOutOfRange);
  }
}

TEST(Simplicial, DegeneracyIdentities) {
  std::mt19937_64 rng(36);
  for (std::size_t n = 1; n <= 3; ++n) {
    FilteredObject f = bc::random_filtration(kF, n, 3, rng);
    for (std::size_t i = 0; i <= n; ++i) {
      FilteredObject s = bc::degeneracy(f, i);
      EXPECT_EQ(s.length(), n + 1);
      expect_same_shape(bc::face(s, i), f);
      expect_same_shape(bc::face(s, i + 1), f);
      if (i >= 1) EXPECT_EQ(bc::face(s, i + 1), f);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        expect_same_shape(bc::degeneracy(bc::degeneracy(f, j), i), bc::degeneracy(bc::degeneracy(f, i), j + 1));
      }
    }
    EXPECT_BC_ERROR(bc::degeneracy(f, n + 1), bc::ErrorCode::kIndexOutOfRange);
  }
}

TEST(Rotate, SmallExample) {
  TwoPeriodicComplex x1 = TwoPeriodicComplex::trivial(kF, 1, 0);
  TwoPeriodicComplex x2 = TwoPeriodicComplex::trivial(kF, 0, 1);
  FilteredObject f({x1, x2}, {ComplexMap::zero(x1, x2)});
  FilteredObject r = bc::rotate(f);
  ASSERT_EQ(r.length(), 2U);
  // cone(X1 -> X2) carries both, X1[1] moves X1 to odd degree.
  EXPECT_EQ(bc::homology_dims(r.object(1)), (HomologyDims{0, 2}));
  EXPECT_EQ(bc::homology_dims(r.object(2)), (HomologyDims{0, 1}));
  EXPECT_BC_ERROR(bc::rotate(FilteredObject(kF)), bc::ErrorCode::kIndexOutOfRange);
}

TEST(Rotate, Periodicity) {
  std::mt19937_64 rng(37);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int k = 0; k < 5; ++k) {
      FilteredObject f = bc::random_filtration(kF, n, 3, rng);
      bc::PeriodicityReport r = bc::rotation_periodicity_check(f);
      EXPECT_TRUE(r.pass) << r.detail;
      EXPECT_TRUE(r.fingerprint_match);
      if (n == 1) EXPECT_TRUE(r.explicit_equivalence);
    }
  }
}

TEST(Rotate, WrongSignIsCaught) {
  std::mt19937_64 rng(38);
  bool caught = false;
  for (int k = 0; k < 20 && !caught; ++k) {
    FilteredObject f = bc::random_filtration(kF, 2, 4, rng);
    const TwoPeriodicComplex& x1 = f.object(1);
    if (x1.d(0).is_zero() && x1.d(1).is_zero()) continue;
    EXPECT_TRUE(bc::rotation_periodicity_check(f).pass);
    caught = !bc::rotation_periodicity_check(f, bc::RotationModel::kWrongSign).pass;
  }
  EXPECT_TRUE(caught);
}

}  // namespace
