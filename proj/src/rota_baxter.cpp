#include "rb/rota_baxter.hpp"

#include "rb/error.hpp"

namespace rb {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
}

// One witness per nonzero column v of an operator identity evaluated at e_a.
void expect_zero_columns(CheckReport& report, const std::string& condition, std::size_t a, const Matrix& residual) {
  for (std::size_t v = 0; v < residual.cols(); ++v) {
    Vector col = residual.column(v);
    report.expect_zero(condition, {a, v}, col);
  }
}

}  // namespace

CheckReport check_rb_algebra(const Algebra& a, const Matrix& P, const Scalar& weight) {
  require_square(P, a.dim(), "Rota-Baxter operator");
  CheckReport report("rb-algebra");
  const std::size_t n = a.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(P.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector inner = a.mul(a.basis(i), images[j]) + a.mul(images[i], a.basis(j)) + weight * a.mul_basis(i, j);
      Vector res = a.mul(images[i], images[j]) - P * inner;
      report.expect_zero("P(a)P(b) = P(aP(b)) + P(P(a)b) + lambda P(ab)", {i, j}, res);
    }
  return report;
}

CheckReport check_rb_coalgebra(const Coalgebra& c, const Matrix& Q, const Scalar& weight) {
  require_square(Q, c.dim(), "Rota-Baxter co-operator");
  CheckReport report("rb-coalgebra");
  const Matrix id = Matrix::identity(c.field(), c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Tensor2 dq = c.delta(Q.column(k));
    Tensor2 res = apply(Q, Q, c.delta(k)) - apply(Q, id, dq) - apply(id, Q, dq) - weight * dq;
    report.expect_zero("(Q(x)Q)Delta = (Q(x)id)Delta Q + (id(x)Q)Delta Q + lambda Delta Q", {k}, res);
  }
  return report;
}

CheckReport rb_representation_residuals(const RBAlgebra& base, const Representation& rep) {
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "representation has no operator alpha");
  require_square(base.P, base.dim(), "Rota-Baxter operator");
  require_square(*rep.alpha, rep.dim, "alpha");
  const Matrix& al = *rep.alpha;
  const Scalar& w = base.weight;
  CheckReport report("rb-representation");
  for (std::size_t i = 0; i < base.dim(); ++i) {
    Vector pa = base.P.column(i);
    Matrix lp = rep.ell_of(pa), rp = rep.right_of(pa);
    const Matrix& l = rep.ell[i];
    const Matrix& r = rep.right[i];
    expect_zero_columns(report, "l(P(a))alpha(v) = alpha(l(P(a))v + l(a)alpha(v) + lambda l(a)v)", i,
                        lp * al - al * lp - al * l * al - w * (al * l));
    expect_zero_columns(report, "alpha(v)r(P(a)) = alpha(alpha(v)r(a) + v r(P(a)) + lambda v r(a))", i,
                        rp * al - al * r * al - al * rp - w * (al * r));
  }
  return report;
}

CheckReport check_rb_representation(const RBAlgebra& base, const Representation& rep) {
  CheckReport bimodule = check_bimodule(base.algebra, rep);
  if (!bimodule.passed())
    throw Error(ErrorKind::NotABimodule, "rb-representation: (V, l, r) is not a bimodule\n" + bimodule.to_string());
  return rb_representation_residuals(base, rep);
}

CheckReport admissibility_residuals(const RBAlgebra& base, const Representation& rep, const Matrix& beta) {
  require_square(base.P, base.dim(), "Rota-Baxter operator");
  require_square(beta, rep.dim, "beta");
  const Scalar& w = base.weight;
  CheckReport report("admissibility");
  for (std::size_t i = 0; i < base.dim(); ++i) {
    Vector pa = base.P.column(i);
    Matrix lp = rep.ell_of(pa), rp = rep.right_of(pa);
    const Matrix& l = rep.ell[i];
    const Matrix& r = rep.right[i];
    expect_zero_columns(report, "beta(v r(P(a))) - beta(v)r(P(a)) - beta(beta(v)r(a)) - lambda beta(v)r(a) = 0", i,
                        beta * rp - rp * beta - beta * r * beta - w * (r * beta));
    expect_zero_columns(report, "beta(l(P(a))v) - l(P(a))beta(v) - beta(l(a)beta(v)) - lambda l(a)beta(v) = 0", i,
                        beta * lp - lp * beta - beta * l * beta - w * (l * beta));
  }
  return report;
}

CheckReport check_admissible(const RBAlgebra& base, const Representation& rep, const Matrix& beta) {
  CheckReport bimodule = check_bimodule(base.algebra, rep);
  if (!bimodule.passed())
    throw Error(ErrorKind::NotABimodule, "admissible: (V, l, r) is not a bimodule\n" + bimodule.to_string());
  CheckReport direct = admissibility_residuals(base, rep, beta);
  Representation dual = dual_actions(rep);
  dual.alpha = transpose(beta);
  CheckReport via_dual = rb_representation_residuals(base, dual);
  if (direct.passed() != via_dual.passed())
    throw Error(ErrorKind::Inconsistent, "admissibility: direct and dual-representation verdicts differ");
  CheckReport report("admissible");
  report.add(std::move(direct));
  CheckReport dual_part("dual-representation");
  dual_part.add(std::move(via_dual));
  report.add(std::move(dual_part));
  return report;
}

CheckReport check_q_admissible(const RBAlgebra& base, const Matrix& Q) {
  CheckReport r = check_admissible(base, Representation::adjoint(base.algebra), Q);
  CheckReport report("q-admissible");
  report.add(std::move(r));
  return report;
}

CheckReport check_equivalence(const RBAlgebra& base, const Representation& r1, const Representation& r2,
                              const Matrix& phi) {
  CheckReport report("equivalence");
  if (phi.rows() != r2.dim || phi.cols() != r1.dim)
    throw Error(ErrorKind::DimensionMismatch, "equivalence map shape");
  if (!phi.is_square() || rank(phi) != phi.rows()) {
    report.fail("phi invertible", {}, "rank " + std::to_string(rank(phi)));
    return report;
  }
  for (std::size_t i = 0; i < base.dim(); ++i) {
    report.expect_zero("phi(l1(a)v) = l2(a)phi(v)", {i}, phi * r1.ell[i] - r2.ell[i] * phi);
    report.expect_zero("phi(v r1(a)) = phi(v) r2(a)", {i}, phi * r1.right[i] - r2.right[i] * phi);
  }
  if (r1.alpha && r2.alpha) report.expect_zero("phi alpha1 = alpha2 phi", {}, phi * *r1.alpha - *r2.alpha * phi);
  return report;
}

Algebra semidirect_algebra(const Algebra& a, const Representation& rep) {
  if (rep.algebra_dim != a.dim()) throw Error(ErrorKind::DimensionMismatch, "semidirect product dims");
  const std::size_t n = a.dim(), m = rep.dim;
  Algebra s(a.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        s.c(i, n + j, n + k) = rep.ell[i](k, j);
        s.c(n + j, i, n + k) = rep.right[i](k, j);
      }
  return s;
}

RBAlgebra semidirect_product(const RBAlgebra& base, const Representation& rep, Validation validation) {
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "semidirect product needs alpha");
  if (validation == Validation::Checked) {
    CheckReport bimodule = check_bimodule(base.algebra, rep);
    if (!bimodule.passed())
      throw Error(ErrorKind::NotARBRepresentation, "semidirect product: not a bimodule\n" + bimodule.to_string());
    CheckReport r = rb_representation_residuals(base, rep);
    if (!r.passed())
      throw Error(ErrorKind::NotARBRepresentation, "semidirect product: not a representation\n" + r.to_string());
  }
  return {semidirect_algebra(base.algebra, rep), Matrix::block_diagonal(base.P, *rep.alpha), base.weight};
}

}  // namespace rb
