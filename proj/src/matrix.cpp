#include "rb/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "rb/error.hpp"

namespace rb {

namespace {

void require_dims(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

Vector Vector::basis(Field field, std::size_t size, std::size_t i) {
  Vector v(field, size);
  v[i] = field.one();
  return v;
}

bool Vector::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_dims(size() == o.size(), "vector sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_dims(size() == o.size(), "vector difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) { return a.size() == b.size() && a.data_ == b.data_; }

Vector Vector::concat(const Vector& a, const Vector& b) {
  Vector out(a.field(), a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[a.size() + i] = b[i];
  return out;
}

Vector Vector::slice(std::size_t begin, std::size_t count) const {
  require_dims(begin + count <= size(), "vector slice");
  Vector out(field_, count);
  for (std::size_t i = 0; i < count; ++i) out[i] = data_[begin + i];
  return out;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < data_.size(); ++i) os << (i ? " " : "") << data_[i];
  os << ']';
  return os.str();
}

Matrix Matrix::identity(Field field, std::size_t n) { return scalar(field.one(), n); }

Matrix Matrix::scalar(const Scalar& s, std::size_t n) {
  Matrix m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_dims(columns[j].size() == rows, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  require_dims(v.size() == cols_, "matrix-vector product");
  Vector out(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_dims(a.cols_ == b.rows_, "matrix composition");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  require_dims(row0 + rows <= rows_ && col0 + cols <= cols_, "matrix block");
  Matrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

Matrix transpose(const Matrix& f) {
  Matrix t(f.field(), f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) t(j, i) = f(i, j);
  return t;
}

namespace {

// Row-reduces m in place; applies the same row operations to companion when
// given. Returns the rank and accumulates the determinant of the square part.
std::size_t eliminate(Matrix& m, Matrix* companion, Scalar* det) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && m(p, col).is_zero()) ++p;
    if (p == rows) {
      if (det) *det = m.field().zero();
      continue;
    }
    if (p != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(pivot_row, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j) std::swap((*companion)(p, j), (*companion)(pivot_row, j));
      if (det) *det = -*det;
    }
    Scalar inv = m(pivot_row, col).inverse();
    if (det) *det *= m(pivot_row, col);
    for (std::size_t j = 0; j < cols; ++j) m(pivot_row, j) *= inv;
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= factor * m(pivot_row, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          (*companion)(i, j) -= factor * (*companion)(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

Matrix invert(const Matrix& f) {
  require_dims(f.is_square(), "invert needs a square matrix");
  Matrix work = f;
  Matrix inv = Matrix::identity(f.field(), f.rows());
  if (eliminate(work, &inv, nullptr) < f.rows())
    throw Error(ErrorKind::SingularMatrix, "matrix " + f.to_string() + " is not invertible");
  return inv;
}

std::size_t rank(const Matrix& f) {
  Matrix work = f;
  return eliminate(work, nullptr, nullptr);
}

Scalar determinant(const Matrix& f) {
  require_dims(f.is_square(), "determinant needs a square matrix");
  Matrix work = f;
  Scalar det = f.field().one();
  if (eliminate(work, nullptr, &det) < f.rows()) return f.field().zero();
  return det;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

}  // namespace rb
