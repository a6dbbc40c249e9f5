#include "brokencycle/linalg.hpp"

#include <sstream>

#include "brokencycle/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bc {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field::Field(std::int64_t p) : p_(p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    raise(ErrorCode::kInvalidArgument, "field characteristic must be a prime below 2^31, got " +
                                           std::to_string(p));
  }
}

Field::Elem Field::inv(Elem a) const {
  a = reduce(a);
  if (a == 0) raise(ErrorCode::kInvalidArgument, "inverse of zero");
  // Fermat: a^(p-2).
  Elem result = 1;
  Elem base = a;
  std::int64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) raise(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    for (auto v : row) data_.push_back(field_.reduce(v));
  }
}

Matrix::Matrix(Field field, const std::vector<std::vector<std::int64_t>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) raise(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    for (auto v : row) data_.push_back(field_.reduce(v));
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    raise(ErrorCode::kIndexOutOfRange, "matrix block outside bounds");
  }
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    raise(ErrorCode::kIndexOutOfRange, "matrix set_block outside bounds");
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

Matrix Matrix::scaled(Field::Elem s) const {
  Matrix out = *this;
  s = field_.reduce(s);
  for (auto& v : out.data_) v = field_.mul(v, s);
  return out;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "] (" << rows_ << "x" << cols_ << " over F_" << field_.characteristic() << ")";
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) {
    raise(ErrorCode::kDimensionMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                             std::to_string(a.cols_) + " by " +
                                             std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  const Field& f = a.field_;
  Matrix c(f, a.rows_, b.cols_);
  const std::int64_t p = f.characteristic();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) = (c(i, j) + aik * b(k, j)) % p;
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) {
    raise(ErrorCode::kDimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_.neg(v);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) raise(ErrorCode::kDimensionMismatch, "hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) raise(ErrorCode::kDimensionMismatch, "vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

namespace {

// Gauss-Jordan elimination in place. When `parallel` is set, the
// elimination of the other rows against each pivot row is distributed
// over OpenMP threads; rows are independent within one pivot step.
Echelon eliminate(const Matrix& input, bool parallel) {
  Echelon result{input, {}};
  Matrix& m = result.rref;
  const Field& f = m.field();
  const std::int64_t p = f.characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    auto inv = f.inv(m(pivot_row, col));
    for (std::size_t c = col; c < cols; ++c) m(pivot_row, c) = f.mul(m(pivot_row, c), inv);

    const auto n_rows = static_cast<std::int64_t>(rows);
    const std::size_t pr = pivot_row;
#pragma omp parallel for schedule(static) if (parallel && rows * cols > 4096)
    for (std::int64_t r = 0; r < n_rows; ++r) {
      auto ru = static_cast<std::size_t>(r);
      if (ru == pr) continue;
      auto factor = m(ru, col);
      if (factor == 0) continue;
      auto neg_factor = p - factor;
      for (std::size_t c = col; c < cols; ++c) {
        m(ru, c) = (m(ru, c) + neg_factor * m(pr, c)) % p;
      }
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  return result;
}

}  // namespace

Echelon row_reduce_serial(const Matrix& m) { return eliminate(m, false); }

Echelon row_reduce(const Matrix& m) { return eliminate(m, true); }

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).rank();
}

Matrix kernel(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(f, n);
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(f, n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = f.neg(e.rref(r, fc));
    }
  }
  return basis;
}

Matrix canonical_basis(const Matrix& basis) {
  if (basis.cols() == 0) return basis;
  Echelon e = row_reduce(basis.transpose());
  return e.rref.block(0, 0, e.rank(), basis.rows()).transpose();
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorCode::kInvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    raise(ErrorCode::kInvalidArgument, "matrix is singular");
  }
  return e.rref.block(0, n, n, n);
}

bool column_span_contains(const Matrix& b, const Matrix& a) {
  if (a.cols() == 0) return true;
  if (b.cols() == 0) return a.is_zero();
  return rank(hstack(b, a)) == rank(b);
}

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, field.characteristic() - 1);
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

Matrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace bc
