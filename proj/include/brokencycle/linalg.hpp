#ifndef BROKENCYCLE_LINALG_HPP
#define BROKENCYCLE_LINALG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace bc {

/// The prime field F_p, 2 <= p < 2^31.
class Field {
 public:
  using Elem = std::int64_t;

  explicit Field(std::int64_t p = 101);

  std::int64_t characteristic() const { return p_; }

  Elem reduce(std::int64_t x) const {
    Elem r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem add(Elem a, Elem b) const { return reduce(a + b); }
  Elem sub(Elem a, Elem b) const { return reduce(a - b); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  /// Throws InvalidArgument on zero.
  Elem inv(Elem a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t p);

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p.
  Matrix(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  Matrix(Field field, const std::vector<std::vector<std::int64_t>>& rows);

  static Matrix zeros(Field field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Field::Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Field::Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { (*this)(r, c) = field_.reduce(v); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix scaled(Field::Elem s) const;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field::Elem> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal [[a, 0], [0, b]].
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Result of Gauss-Jordan elimination: the reduced row echelon form and
/// the pivot column of each non-zero row.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reference elimination, one thread.
Echelon row_reduce_serial(const Matrix& m);
/// Same result as row_reduce_serial; row updates are split across OpenMP
/// threads once the matrix is large enough to pay for it.
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}, in the standard free-variable form.
Matrix kernel(const Matrix& m);
/// Rows of the result are the RREF basis of the column span of `basis`
/// (transposed back so the columns are basis vectors).
Matrix canonical_basis(const Matrix& basis);
bool is_invertible(const Matrix& m);
/// Throws InvalidArgument if singular or not square.
Matrix inverse(const Matrix& m);
/// True when every column of `a` lies in the column span of `b`.
bool column_span_contains(const Matrix& b, const Matrix& a);

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng);

}  // namespace bc

#endif  // BROKENCYCLE_LINALG_HPP
