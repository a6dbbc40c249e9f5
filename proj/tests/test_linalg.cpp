#include <random>

#include "brokencycle/linalg.hpp"
#include "test_util.hpp"

namespace {

using bc::Field;
using bc::Matrix;

TEST(Field, Arithmetic) {
  Field f(7);
  EXPECT_EQ(f.reduce(-1), 6);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.inv(3), 5);
  EXPECT_EQ(f.neg(0), 0);
  EXPECT_BC_ERROR(f.inv(0), bc::ErrorCode::kInvalidArgument);
  EXPECT_BC_ERROR(Field(6), bc::ErrorCode::kInvalidArgument);
}

TEST(Matrix, RankKernelInverse) {
  Field f(101);
  Matrix m(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(bc::rank(m), 2U);
  Matrix k = bc::kernel(m);
  EXPECT_EQ(k.cols(), 1U);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_FALSE(bc::is_invertible(m));
  EXPECT_BC_ERROR(bc::inverse(m), bc::ErrorCode::kInvalidArgument);

  Matrix a(f, {{2, 1}, {1, 1}});
  EXPECT_TRUE((a * bc::inverse(a)).is_identity());
}

TEST(Matrix, EmptyShapes) {
  Field f(5);
  Matrix z(f, 0, 3);
  EXPECT_EQ(bc::kernel(z).cols(), 3U);
  EXPECT_TRUE(bc::kernel(Matrix(f, 3, 0)).empty());
  EXPECT_TRUE(Matrix::identity(f, 0).is_identity());
  EXPECT_EQ((Matrix(f, 2, 0) * Matrix(f, 0, 3)), Matrix(f, 2, 3));
}

TEST(Matrix, Blocks) {
  Field f(11);
  Matrix a(f, {{1, 2}});
  Matrix b(f, {{3}});
  Matrix d = bc::direct_sum(a, b);
  EXPECT_EQ(d, Matrix(f, {{1, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(bc::hstack(a, b), Matrix(f, {{1, 2, 3}}));
  EXPECT_EQ(bc::vstack(Matrix(f, {{1}}), b), Matrix(f, {{1}, {3}}));
  EXPECT_EQ(d.block(0, 1, 2, 2), Matrix(f, {{2, 0}, {0, 3}}));
}

TEST(Matrix, CanonicalBasisIsBasisIndependent) {
  Field f(101);
  std::mt19937_64 rng(1);
  Matrix basis = bc::random_matrix(f, 6, 3, rng);
  Matrix other = basis * bc::random_invertible(f, 3, rng);
  EXPECT_EQ(bc::canonical_basis(basis), bc::canonical_basis(other));
  EXPECT_TRUE(bc::column_span_contains(basis, other));
}

TEST(RowReduce, ParallelMatchesSerial) {
  Field f(101);
  std::mt19937_64 rng(2);
  for (std::size_t n : {1U, 5U, 40U, 130U}) {
    Matrix m = bc::random_matrix(f, n, n + 3, rng);
    // Force rank deficiency in half of the cases.
    if (n > 1 && n % 2 == 0) m.set_block(n - 1, 0, m.block(0, 0, 1, n + 3));
    bc::Echelon a = bc::row_reduce_serial(m);
    bc::Echelon b = bc::row_reduce(m);
    EXPECT_EQ(a.rref, b.rref);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

TEST(RandomInvertible, IsInvertible) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 0; n < 8; ++n) EXPECT_TRUE(bc::is_invertible(bc::random_invertible(Field(2), n, rng)));
}

}  // namespace
