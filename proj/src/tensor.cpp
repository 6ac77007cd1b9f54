#include "rb/tensor.hpp"

#include <sstream>

#include "rb/error.hpp"

namespace rb {

Tensor2::Tensor2(Matrix grid) : grid_(std::move(grid)) {
  if (!grid_.is_square()) throw Error(ErrorKind::DimensionMismatch, "tensor grid must be square");
}

Tensor2 Tensor2::outer(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "outer product");
  Tensor2 t(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t(i, j) = a[i] * b[j];
  return t;
}

bool Tensor2::is_antisymmetric() const { return (*this + flip(*this)).is_zero(); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  grid_ += o.grid_;
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  grid_ -= o.grid_;
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  grid_ *= s;
  return *this;
}

std::string Tensor2::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if ((*this)(i, j).is_zero()) continue;
      os << (any ? " + " : "") << (*this)(i, j) << "*e" << i + 1 << "(x)e" << j + 1;
      any = true;
    }
  return any ? os.str() : "0";
}

bool Tensor3::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dim_ != o.dim_) throw Error(ErrorKind::DimensionMismatch, "tensor sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dim_ != o.dim_) throw Error(ErrorKind::DimensionMismatch, "tensor difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

std::string Tensor3::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k).is_zero()) continue;
        os << (any ? " + " : "") << (*this)(i, j, k) << "*e" << i + 1 << "(x)e" << j + 1 << "(x)e" << k + 1;
        any = true;
      }
  return any ? os.str() : "0";
}

Tensor2 flip(const Tensor2& t) { return Tensor2(transpose(t.grid())); }

Tensor2 apply(const Matrix& f, const Matrix& g, const Tensor2& t) {
  if (!f.is_square() || !g.is_square() || f.rows() != t.dim() || g.rows() != t.dim())
    throw Error(ErrorKind::DimensionMismatch, "tensor map");
  return Tensor2(f * t.grid() * transpose(g));
}

Tensor3 apply(const Matrix& f, const Matrix& g, const Matrix& h, const Tensor3& t) {
  const std::size_t n = t.dim();
  for (const Matrix* m : {&f, &g, &h})
    if (m->rows() != n || m->cols() != n) throw Error(ErrorKind::DimensionMismatch, "tensor map");
  Tensor3 a(t.field(), n), b(t.field(), n), c(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (t(i, j, k).is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x)
          if (!f(x, i).is_zero()) a(x, j, k) += f(x, i) * t(i, j, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, j, k).is_zero()) continue;
        for (std::size_t y = 0; y < n; ++y)
          if (!g(y, j).is_zero()) b(i, y, k) += g(y, j) * a(i, j, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (b(i, j, k).is_zero()) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (!h(z, k).is_zero()) c(i, j, z) += h(z, k) * b(i, j, k);
      }
  return c;
}

Matrix tensor_to_map(const Tensor2& t) { return transpose(t.grid()); }

Tensor2 map_to_tensor(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "map_to_tensor needs a square map");
  return Tensor2(transpose(m));
}

Tensor2 map_to_tensor(const Matrix& T, std::size_t domain_dim, std::size_t codomain_dim) {
  if (T.rows() != codomain_dim || T.cols() != domain_dim)
    throw Error(ErrorKind::DimensionMismatch, "map_to_tensor: map shape does not match dims");
  const std::size_t n = codomain_dim;
  Tensor2 t(T.field(), n + domain_dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < domain_dim; ++i) t(a, n + i) = T(a, i);
  return t;
}

}  // namespace rb
