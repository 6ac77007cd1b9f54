#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rb/field.hpp"

namespace rb {

/// Coordinate column vector in the standard basis e_1..e_n.
class Vector {
 public:
  Vector(Field field, std::size_t size) : field_(field), data_(size, field.zero()) {}
  /// The basis vector e_i (0-based).
  static Vector basis(Field field, std::size_t size, std::size_t i);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return data_.size(); }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Scalar> entries() const noexcept { return data_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b);

  /// Concatenation, first block first.
  static Vector concat(const Vector& a, const Vector& b);
  Vector slice(std::size_t begin, std::size_t count) const;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> data_;
};

/// Dense matrix of a linear map acting on coordinate columns: column j is the
/// image of e_j.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n);
  static Matrix scalar(const Scalar& s, std::size_t n);
  /// Columns given as vectors.
  static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);
  /// Block diagonal diag(a, b).
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  /// Composition: (a * b)(v) = a(b(v)).
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v) { return a.apply(v); }
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Sub-block [row0, row0+rows) x [col0, col0+cols).
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Transpose map f*: W* -> V* in the dual bases.
Matrix transpose(const Matrix& f);
/// Exact inverse by Gauss-Jordan elimination. Throws Error(SingularMatrix).
Matrix invert(const Matrix& f);
std::size_t rank(const Matrix& f);
Scalar determinant(const Matrix& f);

std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace rb
