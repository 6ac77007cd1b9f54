#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rb/report.hpp"
#include "rb/tensor.hpp"

namespace rb {

/// Finite-dimensional algebra by structure constants: e_i e_j = sum_k c(i,j,k) e_k.
/// Associativity is not enforced; see check_associativity.
class Algebra {
 public:
  /// Zero multiplication.
  Algebra(Field field, std::size_t dim) : constants_(field, dim) {}

  const Field& field() const noexcept { return constants_.field(); }
  std::size_t dim() const noexcept { return constants_.dim(); }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return constants_(i, j, k); }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return constants_(i, j, k); }
  const Tensor3& constants() const noexcept { return constants_; }

  Vector basis(std::size_t i) const { return Vector::basis(field(), dim(), i); }
  Vector mul(const Vector& a, const Vector& b) const;
  Vector mul_basis(std::size_t i, std::size_t j) const;
  /// L(a): b |-> ab.
  Matrix left(const Vector& a) const;
  /// R(a): b |-> ba.
  Matrix right(const Vector& a) const;
  Matrix left(std::size_t i) const { return left(basis(i)); }
  Matrix right(std::size_t i) const { return right(basis(i)); }
  bool is_zero() const { return constants_.is_zero(); }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Tensor3 constants_;
};

/// Coproduct by coefficients: Delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j.
class Coalgebra {
 public:
  Coalgebra(Field field, std::size_t dim) : coefficients_(field, dim) {}

  const Field& field() const noexcept { return coefficients_.field(); }
  std::size_t dim() const noexcept { return coefficients_.dim(); }
  Scalar& d(std::size_t k, std::size_t i, std::size_t j) { return coefficients_(k, i, j); }
  const Scalar& d(std::size_t k, std::size_t i, std::size_t j) const { return coefficients_(k, i, j); }
  const Tensor3& coefficients() const noexcept { return coefficients_; }

  Tensor2 delta(std::size_t k) const;
  Tensor2 delta(const Vector& a) const;
  bool is_zero() const { return coefficients_.is_zero(); }
  /// Builds Delta from its values on the basis.
  static Coalgebra from_values(Field field, const std::vector<Tensor2>& values);

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

 private:
  Tensor3 coefficients_;
};

/// A-bimodule (V, l, r) with an optional operator alpha on V. ell[i] is the
/// matrix of v |-> l(e_i)v and right[i] the matrix of v |-> v r(e_i).
struct Representation {
  Field field = Field::rationals();
  std::size_t algebra_dim = 0;
  std::size_t dim = 0;
  std::vector<Matrix> ell;
  std::vector<Matrix> right;
  std::optional<Matrix> alpha;

  /// Zero actions.
  static Representation zero(Field field, std::size_t algebra_dim, std::size_t dim);
  /// (A, L, R).
  static Representation adjoint(const Algebra& a);

  Matrix ell_of(const Vector& a) const;
  Matrix right_of(const Vector& a) const;
};

enum class Symmetry { Symmetric, Antisymmetric, None };

std::string_view to_string(Symmetry s);

/// Bilinear form by its gram matrix gram(i, j) = B(e_i, e_j).
struct BilinearForm {
  Matrix gram;
  Symmetry symmetry = Symmetry::None;

  std::size_t dim() const { return gram.rows(); }
  Scalar operator()(const Vector& a, const Vector& b) const;
};

CheckReport check_associativity(const Algebra& a);
/// (L(a), R(a)).
std::pair<Matrix, Matrix> mult_operators(const Algebra& a, const Vector& v);
CheckReport check_coassociativity(const Coalgebra& c);

/// Algebra on the dual space: (e^i o e^j)(e_k) = d(k,i,j).
Algebra dualize(const Coalgebra& c);
Coalgebra dualize_algebra(const Algebra& a);

/// A + B with block-diagonal constants. Throws FieldMismatch.
Algebra direct_sum(const Algebra& a, const Algebra& b);
Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b);

CheckReport check_bimodule(const Algebra& a, const Representation& v);
/// (V*, r*, l*), alpha |-> alpha*. Throws NotABimodule.
Representation dual_bimodule(const Algebra& a, const Representation& v);
/// Dual representation without validating the input.
Representation dual_actions(const Representation& v);

/// Checks the declared symmetry; nondegeneracy is a separate condition.
CheckReport check_symmetry(const BilinearForm& b);

}  // namespace rb
