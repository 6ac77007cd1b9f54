#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rb/matrix.hpp"

namespace rb {

/// Element of V (x) V; entry (i, j) is the coefficient of e_i (x) e_j.
class Tensor2 {
 public:
  Tensor2(Field field, std::size_t dim) : grid_(field, dim, dim) {}
  /// Adopts a square coefficient grid.
  explicit Tensor2(Matrix grid);
  static Tensor2 outer(const Vector& a, const Vector& b);

  const Field& field() const noexcept { return grid_.field(); }
  std::size_t dim() const noexcept { return grid_.rows(); }
  Scalar& operator()(std::size_t i, std::size_t j) { return grid_(i, j); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }
  const Matrix& grid() const noexcept { return grid_; }
  bool is_zero() const { return grid_.is_zero(); }
  bool is_antisymmetric() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 t) { return t *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.grid_ == b.grid_; }

  std::string to_string() const;

 private:
  Matrix grid_;
};

/// Element of V (x) V (x) V; entry (i, j, k) is the coefficient of e_i (x) e_j (x) e_k.
class Tensor3 {
 public:
  Tensor3(Field field, std::size_t dim) : field_(field), dim_(dim), data_(dim * dim * dim, field.zero()) {}

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Scalar& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 t) { return t *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> data_;
};

/// sigma(t): swaps the two tensor slots.
Tensor2 flip(const Tensor2& t);
/// (f (x) g)(t).
Tensor2 apply(const Matrix& f, const Matrix& g, const Tensor2& t);
/// (f (x) g (x) h)(t).
Tensor3 apply(const Matrix& f, const Matrix& g, const Matrix& h, const Tensor3& t);

/// The map A* -> A, e^i |-> sum_j t(i, j) e_j, as a matrix in the dual basis.
Matrix tensor_to_map(const Tensor2& t);
/// Inverse of tensor_to_map.
Tensor2 map_to_tensor(const Matrix& m);
/// T: V -> A as sum_i T(e_i) (x) e^i inside (A + V*) (x) (A + V*), A block first.
Tensor2 map_to_tensor(const Matrix& T, std::size_t domain_dim, std::size_t codomain_dim);

}  // namespace rb
