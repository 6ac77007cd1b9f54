#include "rb/algebra.hpp"

#include "rb/error.hpp"

namespace rb {

Vector Algebra::mul(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "algebra product");
  Vector out(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c(i, j, k).is_zero()) out[k] += ab * c(i, j, k);
    }
  }
  return out;
}

Vector Algebra::mul_basis(std::size_t i, std::size_t j) const {
  Vector out(field(), dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
  return out;
}

Matrix Algebra::left(const Vector& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c(i, j, k).is_zero()) m(k, j) += a[i] * c(i, j, k);
  }
  return m;
}

Matrix Algebra::right(const Vector& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c(i, j, k).is_zero()) m(k, i) += a[j] * c(i, j, k);
  }
  return m;
}

Tensor2 Coalgebra::delta(std::size_t k) const {
  Tensor2 t(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) t(i, j) = d(k, i, j);
  return t;
}

Tensor2 Coalgebra::delta(const Vector& a) const {
  if (a.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "coproduct argument");
  Tensor2 t(field(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (!a[k].is_zero()) t += a[k] * delta(k);
  return t;
}

Coalgebra Coalgebra::from_values(Field field, const std::vector<Tensor2>& values) {
  Coalgebra c(field, values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].dim() != values.size()) throw Error(ErrorKind::DimensionMismatch, "coproduct value");
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = 0; j < values.size(); ++j) c.d(k, i, j) = values[k](i, j);
  }
  return c;
}

Representation Representation::zero(Field field, std::size_t algebra_dim, std::size_t dim) {
  Representation v;
  v.field = field;
  v.algebra_dim = algebra_dim;
  v.dim = dim;
  v.ell.assign(algebra_dim, Matrix(field, dim, dim));
  v.right.assign(algebra_dim, Matrix(field, dim, dim));
  return v;
}

Representation Representation::adjoint(const Algebra& a) {
  Representation v = zero(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    v.ell[i] = a.left(i);
    v.right[i] = a.right(i);
  }
  return v;
}

Matrix Representation::ell_of(const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    if (!a[i].is_zero()) m += a[i] * ell[i];
  return m;
}

Matrix Representation::right_of(const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    if (!a[i].is_zero()) m += a[i] * right[i];
  return m;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Antisymmetric: return "antisymmetric";
    case Symmetry::None: return "none";
  }
  return "none";
}

Scalar BilinearForm::operator()(const Vector& a, const Vector& b) const {
  Scalar s = gram.field().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!b[j].is_zero()) s += a[i] * gram(i, j) * b[j];
  }
  return s;
}

CheckReport check_associativity(const Algebra& a) {
  CheckReport report("associativity");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector assoc(a.field(), n);
        for (std::size_t m = 0; m < n; ++m) {
          if (!a.c(i, j, m).is_zero())
            for (std::size_t t = 0; t < n; ++t) assoc[t] += a.c(i, j, m) * a.c(m, k, t);
          if (!a.c(j, k, m).is_zero())
            for (std::size_t t = 0; t < n; ++t) assoc[t] -= a.c(j, k, m) * a.c(i, m, t);
        }
        report.expect_zero("(e_i e_j) e_k = e_i (e_j e_k)", {i, j, k}, assoc);
      }
  return report;
}

std::pair<Matrix, Matrix> mult_operators(const Algebra& a, const Vector& v) { return {a.left(v), a.right(v)}; }

CheckReport check_coassociativity(const Coalgebra& c) {
  CheckReport report("coassociativity");
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3 res(c.field(), n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (!c.d(k, m, z).is_zero() && !c.d(m, x, y).is_zero()) res(x, y, z) += c.d(k, m, z) * c.d(m, x, y);
            if (!c.d(k, x, m).is_zero() && !c.d(m, y, z).is_zero()) res(x, y, z) -= c.d(k, x, m) * c.d(m, y, z);
          }
        }
    report.expect_zero("(Delta (x) id) Delta = (id (x) Delta) Delta", {k}, res);
  }
  return report;
}

Algebra dualize(const Coalgebra& c) {
  Algebra a(c.field(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) a.c(i, j, k) = c.d(k, i, j);
  return a;
}

Coalgebra dualize_algebra(const Algebra& a) {
  Coalgebra c(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c.d(k, i, j) = a.c(i, j, k);
  return c;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim();
  Algebra s(a.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s.c(n + i, n + j, n + k) = b.c(i, j, k);
  return s;
}

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b) {
  return dualize_algebra(direct_sum(dualize(a), dualize(b)));
}

CheckReport check_bimodule(const Algebra& a, const Representation& v) {
  CheckReport report("bimodule");
  if (v.algebra_dim != a.dim() || v.ell.size() != a.dim() || v.right.size() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "representation does not match the algebra dimension");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector ab = a.mul_basis(i, j);
      report.expect_zero("l(a)l(b) = l(ab)", {i, j}, v.ell[i] * v.ell[j] - v.ell_of(ab));
      report.expect_zero("(v r(a)) r(b) = v r(ab)", {i, j}, v.right[j] * v.right[i] - v.right_of(ab));
      report.expect_zero("(l(a)v) r(b) = l(a)(v r(b))", {i, j}, v.right[j] * v.ell[i] - v.ell[i] * v.right[j]);
    }
  return report;
}

Representation dual_actions(const Representation& v) {
  Representation d = Representation::zero(v.field, v.algebra_dim, v.dim);
  for (std::size_t i = 0; i < v.algebra_dim; ++i) {
    d.ell[i] = transpose(v.right[i]);
    d.right[i] = transpose(v.ell[i]);
  }
  if (v.alpha) d.alpha = transpose(*v.alpha);
  return d;
}

Representation dual_bimodule(const Algebra& a, const Representation& v) {
  CheckReport r = check_bimodule(a, v);
  if (!r.passed()) throw Error(ErrorKind::NotABimodule, "dual_bimodule: input is not a bimodule\n" + r.to_string());
  return dual_actions(v);
}

CheckReport check_symmetry(const BilinearForm& b) {
  CheckReport report(std::string("symmetry (") + std::string(to_string(b.symmetry)) + ")");
  if (b.symmetry == Symmetry::None) return report;
  Matrix t = transpose(b.gram);
  Matrix res = b.symmetry == Symmetry::Symmetric ? b.gram - t : b.gram + t;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j)
      if (!res(i, j).is_zero())
        report.fail(b.symmetry == Symmetry::Symmetric ? "B(a,b) = B(b,a)" : "B(a,b) = -B(b,a)", {i, j},
                    res(i, j).to_string());
  return report;
}

}  // namespace rb
