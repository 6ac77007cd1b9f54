#include "rb/bialgebra.hpp"

#include "rb/error.hpp"
#include "rb/yang_baxter.hpp"

namespace rb {

namespace {

void require_same_dim(const Algebra& a, const Coalgebra& c) {
  if (a.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "algebra and coproduct dimensions differ");
}

}  // namespace

CheckReport check_asi_bialgebra(const ASIBialgebra& b) {
  require_same_dim(b.algebra, b.coproduct);
  const Algebra& A = b.algebra;
  const Coalgebra& C = b.coproduct;
  const Matrix id = Matrix::identity(A.field(), A.dim());
  CheckReport report("asi-bialgebra");
  report.add(check_associativity(A));
  report.add(check_coassociativity(C));
  CheckReport cocycle("cocycle");
  CheckReport antisymmetry("antisymmetry");
  std::vector<Matrix> L, R;
  std::vector<Tensor2> D;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    L.push_back(A.left(i));
    R.push_back(A.right(i));
    D.push_back(C.delta(i));
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Tensor2 res = C.delta(A.mul_basis(i, j)) - apply(R[j], id, D[i]) - apply(id, L[i], D[j]);
      cocycle.expect_zero("Delta(ab) = (R(b)(x)id)Delta(a) + (id(x)L(a))Delta(b)", {i, j}, res);
      Tensor2 lhs = apply(L[i], id, D[j]) - apply(id, R[i], D[j]);
      Tensor2 rhs = flip(apply(id, R[j], D[i]) - apply(L[j], id, D[i]));
      antisymmetry.expect_zero("(L(a)(x)id - id(x)R(a))Delta(b) = sigma((id(x)R(b) - L(b)(x)id)Delta(a))", {i, j},
                               lhs - rhs);
    }
  report.add(std::move(cocycle));
  report.add(std::move(antisymmetry));
  return report;
}

namespace {

CheckReport algebra_side(const RBASIBialgebra& b) {
  const Algebra& A = b.algebra;
  const Matrix &P = b.P, &Q = b.Q;
  const Scalar& w = b.weight;
  CheckReport report("algebra-side");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector a = A.basis(i), bb = A.basis(j);
      Vector qa = Q.column(i), pb = P.column(j), pa = P.column(i), qb = Q.column(j);
      report.expect_zero("Q(aP(b)) = Q(a)P(b) + Q(Q(a)b) + lambda Q(a)b", {i, j},
                         Q * A.mul(a, pb) - A.mul(qa, pb) - Q * A.mul(qa, bb) - w * A.mul(qa, bb));
      report.expect_zero("Q(P(a)b) = P(a)Q(b) + Q(aQ(b)) + lambda aQ(b)", {i, j},
                         Q * A.mul(pa, bb) - A.mul(pa, qb) - Q * A.mul(a, qb) - w * A.mul(a, qb));
    }
  return report;
}

CheckReport coalgebra_side(const RBASIBialgebra& b) {
  const Coalgebra& C = b.coproduct;
  const Matrix &P = b.P, &Q = b.Q;
  const Scalar& w = b.weight;
  const Matrix id = Matrix::identity(C.field(), C.dim());
  CheckReport report("coalgebra-side");
  for (std::size_t k = 0; k < C.dim(); ++k) {
    Tensor2 d = C.delta(k);
    Tensor2 dp = C.delta(P.column(k));
    report.expect_zero("(id(x)Q)Delta P = (P(x)Q)Delta + (P(x)id)Delta P + lambda(P(x)id)Delta", {k},
                       apply(id, Q, dp) - apply(P, Q, d) - apply(P, id, dp) - w * apply(P, id, d));
    report.expect_zero("(Q(x)id)Delta P = (Q(x)P)Delta + (id(x)P)Delta P + lambda(id(x)P)Delta", {k},
                       apply(Q, id, dp) - apply(Q, P, d) - apply(id, P, dp) - w * apply(id, P, d));
  }
  return report;
}

}  // namespace

CheckReport compatibility_residuals(const RBASIBialgebra& b) {
  require_same_dim(b.algebra, b.coproduct);
  CheckReport report("compatibility");
  report.add(algebra_side(b));
  report.add(coalgebra_side(b));
  return report;
}

CheckReport check_rb_asi_bialgebra(const RBASIBialgebra& b) {
  CheckReport report("rb-asi-bialgebra");
  report.add(check_asi_bialgebra({b.algebra, b.coproduct}));
  report.add(check_rb_algebra(b.algebra, b.P, b.weight));
  report.add(check_rb_coalgebra(b.coproduct, b.Q, b.weight));
  CheckReport compat = compatibility_residuals(b);
  // Same identities read as Q admissible to (A, P) and P* admissible to (A*, Q*).
  RBAlgebra base = b.rb_algebra();
  RBAlgebra dual = dual_rb_algebra(b);
  bool q_adm = admissibility_residuals(base, Representation::adjoint(b.algebra), b.Q).passed();
  bool p_adm = admissibility_residuals(dual, Representation::adjoint(dual.algebra), transpose(b.P)).passed();
  if (q_adm != compat.parts()[0].passed() || p_adm != compat.parts()[1].passed())
    throw Error(ErrorKind::Inconsistent, "compatibility identities disagree with the admissibility conditions");
  report.add(std::move(compat));
  return report;
}

Algebra build_matched_algebra(const MatchedPairData& m) {
  if (m.A.field() != m.B.field()) throw Error(ErrorKind::FieldMismatch, "matched pair over different fields");
  const std::size_t n = m.A.dim(), k = m.B.dim();
  if (m.on_b.algebra_dim != n || m.on_b.dim != k || m.on_a.algebra_dim != k || m.on_a.dim != n)
    throw Error(ErrorKind::DimensionMismatch, "matched pair action dimensions");
  Algebra s = direct_sum(m.A, m.B);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        s.c(i, n + j, t) = m.on_a.right[j](t, i);
        s.c(n + j, i, t) = m.on_a.ell[j](t, i);
      }
      for (std::size_t t = 0; t < k; ++t) {
        s.c(i, n + j, n + t) = m.on_b.ell[i](t, j);
        s.c(n + j, i, n + t) = m.on_b.right[i](t, j);
      }
    }
  return s;
}

RBAlgebra build_matched_product(const MatchedPairData& m) {
  if (!m.has_operators()) throw Error(ErrorKind::InvalidArgument, "matched product needs both operators");
  return {build_matched_algebra(m), Matrix::block_diagonal(*m.PA, *m.PB), m.weight};
}

CheckReport check_matched_pair(const MatchedPairData& m) {
  build_matched_algebra(m);  // dimension validation
  const Algebra &A = m.A, &B = m.B;
  auto lA = [&](const Vector& a, const Vector& b) { return m.on_b.ell_of(a) * b; };
  auto rA = [&](const Vector& b, const Vector& a) { return m.on_b.right_of(a) * b; };
  auto lB = [&](const Vector& b, const Vector& a) { return m.on_a.ell_of(b) * a; };
  auto rB = [&](const Vector& a, const Vector& b) { return m.on_a.right_of(b) * a; };

  CheckReport report("matched-pair");
  CheckReport aa("associativity-A"), ab("associativity-B");
  aa.add(check_associativity(A));
  ab.add(check_associativity(B));
  report.add(std::move(aa));
  report.add(std::move(ab));
  CheckReport bim_b = check_bimodule(A, m.on_b);
  CheckReport bim_a = check_bimodule(B, m.on_a);
  CheckReport bb("bimodule-A-on-B"), ba("bimodule-B-on-A");
  bb.add(std::move(bim_b));
  ba.add(std::move(bim_a));
  report.add(std::move(bb));
  report.add(std::move(ba));

  CheckReport compat("matched-pair-identities");
  const std::size_t n = A.dim(), k = B.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        Vector a = A.basis(i), b = B.basis(x), b2 = B.basis(y);
        compat.expect_zero("l_A(a)(bb') = l_A(a r_B(b))b' + (l_A(a)b)b'", {i, x, y},
                           lA(a, B.mul(b, b2)) - lA(rB(a, b), b2) - B.mul(lA(a, b), b2));
        compat.expect_zero("(bb')r_A(a) = b r_A(l_B(b')a) + b(b' r_A(a))", {x, y, i},
                           rA(B.mul(b, b2), a) - rA(b, lB(b2, a)) - B.mul(b, rA(b2, a)));
        compat.expect_zero("l_A(l_B(b)a)b' + (b r_A(a))b' = b r_A(a r_B(b')) + b(l_A(a)b')", {i, x, y},
                           lA(lB(b, a), b2) + B.mul(rA(b, a), b2) - rA(b, rB(a, b2)) - B.mul(b, lA(a, b2)));
      }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector b = B.basis(x), a = A.basis(i), a2 = A.basis(j);
        compat.expect_zero("l_B(b)(aa') = l_B(b r_A(a))a' + (l_B(b)a)a'", {x, i, j},
                           lB(b, A.mul(a, a2)) - lB(rA(b, a), a2) - A.mul(lB(b, a), a2));
        compat.expect_zero("(aa')r_B(b) = a r_B(l_A(a')b) + a(a' r_B(b))", {i, j, x},
                           rB(A.mul(a, a2), b) - rB(a, lA(a2, b)) - A.mul(a, rB(a2, b)));
        compat.expect_zero("l_B(l_A(a)b)a' + (a r_B(b))a' = a r_B(b r_A(a')) + a(l_B(b)a')", {i, x, j},
                           lB(lA(a, b), a2) + A.mul(rB(a, b), a2) - rB(a, rA(b, a2)) - A.mul(a, lB(b, a2)));
      }
  report.add(std::move(compat));

  if (m.has_operators()) {
    RBAlgebra pa{A, *m.PA, m.weight}, pb{B, *m.PB, m.weight};
    CheckReport ra("rb-algebra-A"), rb("rb-algebra-B");
    ra.add(check_rb_algebra(pa));
    rb.add(check_rb_algebra(pb));
    report.add(std::move(ra));
    report.add(std::move(rb));
    Representation vb = m.on_b, va = m.on_a;
    vb.alpha = *m.PB;
    va.alpha = *m.PA;
    CheckReport rep_b("rb-representation-B-over-A"), rep_a("rb-representation-A-over-B");
    rep_b.add(rb_representation_residuals(pa, vb));
    rep_a.add(rb_representation_residuals(pb, va));
    report.add(std::move(rep_b));
    report.add(std::move(rep_a));
  }
  return report;
}

MatchedPairData dual_matched_pair(const RBAlgebra& a, const RBAlgebra& astar) {
  if (a.dim() != astar.dim()) throw Error(ErrorKind::DimensionMismatch, "A and A* dimensions differ");
  Representation on_b = dual_actions(Representation::adjoint(a.algebra));
  Representation on_a = dual_actions(Representation::adjoint(astar.algebra));
  return {a.algebra, astar.algebra, std::move(on_b), std::move(on_a), a.P, astar.P, a.weight};
}

CheckReport check_invariance(const Algebra& a, const BilinearForm& form) {
  if (form.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "form dimension");
  CheckReport report("invariance");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector ab = a.mul_basis(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar res = form(ab, a.basis(k)) - form(a.basis(i), a.mul_basis(j, k));
        if (!res.is_zero()) report.fail("B(ab, c) = B(a, bc)", {i, j, k}, res.to_string());
      }
    }
  return report;
}

CheckReport check_frobenius(const FrobeniusData& f) {
  CheckReport report("frobenius");
  report.add(check_invariance(f.base.algebra, f.form));
  report.add(check_symmetry(f.form));
  CheckReport nondeg("nondegenerate");
  std::size_t rk = rank(f.form.gram);
  nondeg.expect(rk == f.form.dim(), "gram invertible", "rank " + std::to_string(rk));
  report.add(std::move(nondeg));
  report.add(check_rb_algebra(f.base));
  return report;
}

Matrix adjoint_operator(const BilinearForm& form, const Matrix& P) {
  return invert(form.gram) * transpose(P) * form.gram;
}

Matrix frobenius_map(const BilinearForm& form) { return transpose(form.gram); }

BilinearForm form_from_equivalence(const Matrix& phi) { return {transpose(phi), Symmetry::None}; }

BilinearForm double_form(const Field& field, std::size_t n) {
  Matrix g(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = field.one();
    g(n + i, i) = field.one();
  }
  return {std::move(g), Symmetry::Symmetric};
}

CheckReport check_double_construction(const RBAlgebra& a, const RBAlgebra& astar) {
  MatchedPairData m = dual_matched_pair(a, astar);
  RBAlgebra d = build_matched_product(m);
  CheckReport report("double-construction");
  report.add(check_associativity(d.algebra));
  report.add(check_invariance(d.algebra, double_form(a.field(), a.dim())));
  report.add(check_rb_algebra(d));
  return report;
}

FrobeniusData build_double_construction(const RBAlgebra& a, const RBAlgebra& astar, Validation validation) {
  MatchedPairData m = dual_matched_pair(a, astar);
  if (validation == Validation::Checked) {
    CheckReport r = check_matched_pair(m);
    if (!r.passed())
      throw Error(ErrorKind::NotAMatchedPair, "double construction: not a matched pair of Rota-Baxter algebras\n" +
                                                  r.to_string());
  }
  return {build_matched_product(m), double_form(a.field(), a.dim())};
}

RBASIBialgebra bialgebra_from_dual(const RBAlgebra& a, const RBAlgebra& astar) {
  if (a.dim() != astar.dim()) throw Error(ErrorKind::DimensionMismatch, "A and A* dimensions differ");
  return {a.algebra, dualize_algebra(astar.algebra), a.P, transpose(astar.P), a.weight};
}

RBAlgebra dual_rb_algebra(const RBASIBialgebra& b) {
  return {dualize(b.coproduct), transpose(b.Q), b.weight};
}

EquivalenceReport check_triple_equivalence(const RBAlgebra& a, const RBAlgebra& astar) {
  EquivalenceReport report("triple-equivalence");
  report.add(check_matched_pair(dual_matched_pair(a, astar)));
  report.add(check_double_construction(a, astar));
  report.add(check_rb_asi_bialgebra(bialgebra_from_dual(a, astar)));
  return report;
}

RBASIBialgebra dual_bialgebra(const RBASIBialgebra& b, Validation validation) {
  if (validation == Validation::Checked) {
    CheckReport r = check_rb_asi_bialgebra(b);
    if (!r.passed()) throw Error(ErrorKind::NotABialgebra, "dual bialgebra: input fails\n" + r.to_string());
  }
  Coalgebra delta = dualize_algebra(b.algebra);
  Coalgebra neg(delta.field(), delta.dim());
  const Scalar minus_one = -delta.field().one();
  for (std::size_t k = 0; k < delta.dim(); ++k)
    for (std::size_t i = 0; i < delta.dim(); ++i)
      for (std::size_t j = 0; j < delta.dim(); ++j) neg.d(k, i, j) = minus_one * delta.d(k, i, j);
  return {dualize(b.coproduct), std::move(neg), transpose(b.Q), transpose(b.P), b.weight};
}

RBASIBialgebra double_bialgebra(const RBASIBialgebra& b, Validation validation) {
  if (validation == Validation::Checked) {
    CheckReport r = check_rb_asi_bialgebra(b);
    if (!r.passed()) throw Error(ErrorKind::NotABialgebra, "double bialgebra: input fails\n" + r.to_string());
  }
  const std::size_t n = b.dim();
  MatchedPairData m = dual_matched_pair(b.rb_algebra(), dual_rb_algebra(b));
  Algebra product = build_matched_algebra(m);
  Tensor2 r(b.algebra.field(), 2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = b.algebra.field().one();
  Coalgebra delta = coboundary_delta(product, r);
  return {std::move(product), std::move(delta), Matrix::block_diagonal(b.P, transpose(b.Q)),
          Matrix::block_diagonal(b.Q, transpose(b.P)), b.weight};
}

CheckReport check_block_closed(const RBASIBialgebra& b, std::size_t begin, std::size_t count) {
  const std::size_t n = b.dim();
  if (begin + count > n) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  auto inside = [&](std::size_t i) { return i >= begin && i < begin + count; };
  CheckReport report("block-closed");
  for (std::size_t i = begin; i < begin + count; ++i) {
    for (std::size_t j = begin; j < begin + count; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!inside(k) && !b.algebra.c(i, j, k).is_zero()) report.fail("product stays in block", {i, j, k}, "");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((!inside(x) || !inside(y)) && !b.coproduct.d(i, x, y).is_zero())
          report.fail("coproduct stays in block", {i, x, y}, "");
    for (std::size_t k = 0; k < n; ++k) {
      if (!inside(k) && !b.P(k, i).is_zero()) report.fail("P preserves block", {i, k}, "");
      if (!inside(k) && !b.Q(k, i).is_zero()) report.fail("Q preserves block", {i, k}, "");
    }
  }
  return report;
}

RBASIBialgebra restrict_block(const RBASIBialgebra& b, std::size_t begin, std::size_t count) {
  if (begin + count > b.dim()) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  const Field& f = b.algebra.field();
  Algebra a(f, count);
  Coalgebra c(f, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) {
        a.c(i, j, k) = b.algebra.c(begin + i, begin + j, begin + k);
        c.d(k, i, j) = b.coproduct.d(begin + k, begin + i, begin + j);
      }
  return {std::move(a), std::move(c), b.P.block(begin, begin, count, count), b.Q.block(begin, begin, count, count),
          b.weight};
}

ASIBialgebra direct_sum(const ASIBialgebra& a, const ASIBialgebra& b) {
  return {direct_sum(a.algebra, b.algebra), direct_sum(a.coproduct, b.coproduct)};
}

}  // namespace rb
