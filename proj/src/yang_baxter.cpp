#include "rb/yang_baxter.hpp"

#include "rb/error.hpp"

namespace rb {

namespace {

Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

void require_antisymmetric(const RElement& r, const char* what) {
  if (!r.is_antisymmetric()) throw Error(ErrorKind::NotAntisymmetric, std::string(what) + ": r is not antisymmetric");
}

void require_weight_zero(const Scalar& w, const char* what) {
  if (!w.is_zero()) throw Error(ErrorKind::NotWeightZero, std::string(what) + ": weight must be zero");
}

CheckReport named(std::string name, CheckReport inner) {
  CheckReport r(std::move(name));
  r.add(std::move(inner));
  return r;
}

void expect_zero_columns(CheckReport& report, const std::string& condition, std::size_t a, const Matrix& residual) {
  for (std::size_t v = 0; v < residual.cols(); ++v) report.expect_zero(condition, {a, v}, residual.column(v));
}

// beta(l(a)alpha(u)) = beta(l(Q(a))u) + l(Q(a))alpha(u) + lambda l(Q(a))u and the right-action analogue.
CheckReport mixed_identities(const RBAlgebra& base, const Representation& rep, const Matrix& Q, const Matrix& alpha,
                             const Matrix& beta) {
  CheckReport report("mixed-identities");
  const Scalar& w = base.weight;
  for (std::size_t i = 0; i < base.dim(); ++i) {
    Vector qa = Q.column(i);
    Matrix lq = rep.ell_of(qa), rq = rep.right_of(qa);
    expect_zero_columns(report, "beta(l(a)alpha(u)) = beta(l(Q(a))u) + l(Q(a))alpha(u) + lambda l(Q(a))u", i,
                        beta * rep.ell[i] * alpha - beta * lq - lq * alpha - w * lq);
    expect_zero_columns(report, "beta(alpha(u)r(a)) = beta(u r(Q(a))) + alpha(u)r(Q(a)) + lambda u r(Q(a))", i,
                        beta * rep.right[i] * alpha - beta * rq - rq * alpha - w * rq);
  }
  return report;
}

CheckReport rb_and_admissible(std::string name, const RBAlgebra& s, const Matrix& Q) {
  CheckReport report(std::move(name));
  report.add(check_rb_algebra(s));
  report.add(admissibility_residuals(s, Representation::adjoint(s.algebra), Q));
  return report;
}

void require_rb_base(const RBAlgebra& base, const char* what, ErrorKind kind) {
  CheckReport assoc = check_associativity(base.algebra);
  CheckReport rb = check_rb_algebra(base);
  if (!assoc.passed() || !rb.passed())
    throw Error(kind, std::string(what) + ": (A, P) is not a Rota-Baxter algebra\n" + assoc.to_string() +
                          rb.to_string());
}

}  // namespace

Coalgebra coboundary_delta(const Algebra& a, const RElement& r) {
  if (r.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "r does not match the algebra dimension");
  std::vector<Tensor2> values;
  for (std::size_t k = 0; k < a.dim(); ++k)
    values.emplace_back(r.grid() * transpose(a.left(k)) - a.right(k) * r.grid());
  return Coalgebra::from_values(a.field(), values);
}

Tensor3 aybe_residual(const Algebra& a, const RElement& r) {
  if (r.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "r does not match the algebra dimension");
  const std::size_t n = a.dim();
  Tensor3 res(a.field(), n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (r(p, q).is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u) {
          if (r(s, u).is_zero()) continue;
          Scalar rr = r(p, q) * r(s, u);
          for (std::size_t k = 0; k < n; ++k) {
            // r12 r13: e_p e_s (x) e_q (x) e_u
            if (!a.c(p, s, k).is_zero()) res(k, q, u) += rr * a.c(p, s, k);
            // r13 r23: e_p (x) e_s (x) e_q e_u
            if (!a.c(q, u, k).is_zero()) res(p, s, k) += rr * a.c(q, u, k);
            // r23 r12: e_s (x) e_p e_u (x) e_q
            if (!a.c(p, u, k).is_zero()) res(s, k, q) -= rr * a.c(p, u, k);
          }
        }
    }
  return res;
}

RBASIBialgebra coboundary_bialgebra(const RBAlgebra& base, const Matrix& Q, const RElement& r) {
  return {base.algebra, coboundary_delta(base.algebra, r), base.P, Q, base.weight};
}

CheckReport coboundary_conditions(const RBAlgebra& base, const Matrix& Q, const RElement& r) {
  const Algebra& A = base.algebra;
  const std::size_t n = A.dim();
  if (r.dim() != n) throw Error(ErrorKind::DimensionMismatch, "r does not match the algebra dimension");
  require_rb_base(base, "coboundary conditions", ErrorKind::NotQAdmissible);
  CheckReport adm = admissibility_residuals(base, Representation::adjoint(A), Q);
  if (!adm.passed()) throw Error(ErrorKind::NotQAdmissible, "coboundary conditions: Q is not admissible\n" + adm.to_string());

  const Field& f = A.field();
  const Matrix I = id(f, n);
  const Matrix& P = base.P;
  const Scalar& w = base.weight;
  const Tensor2 X = apply(Q, I, r) - apply(I, P, r);
  const Tensor2 Y = apply(P, I, r) - apply(I, Q, r);

  CheckReport balance("balance");
  const Tensor2 s = r + flip(r);
  for (std::size_t j = 0; j < n; ++j) {
    Tensor2 u = apply(I, A.left(j), s) - apply(A.right(j), I, s);
    for (std::size_t i = 0; i < n; ++i)
      balance.expect_zero("(L(a) (x) id - id (x) R(a))(id (x) L(b) - R(b) (x) id)(r + sigma(r)) = 0", {i, j},
                          apply(A.left(i), I, u) - apply(I, A.right(i), u));
  }

  CheckReport coassoc("coassociativity-condition");
  const Tensor3 y = aybe_residual(A, r);
  for (std::size_t i = 0; i < n; ++i)
    coassoc.expect_zero("(id (x) id (x) L(a) - R(a) (x) id (x) id)(r12 r13 + r13 r23 - r23 r12) = 0", {i},
                        apply(I, I, A.left(i), y) - apply(A.right(i), I, I, y));

  CheckReport corbo("co-rota-baxter"), dual_right("dual-admissibility-right"), dual_left("dual-admissibility-left");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector pa = P.column(i), qa = Q.column(i);
    const Matrix L = A.left(i), R = A.right(i);
    const Matrix Lp = A.left(pa), Rp = A.right(pa), Lq = A.left(qa), Rq = A.right(qa);
    corbo.expect_zero(
        "(id (x) QL(a) - id (x) L(Q(a)))(Q (x) id - id (x) P)(r) + (QR(a) (x) id - R(Q(a)) (x) id)(P (x) id - id (x) Q)(r) = 0",
        {i}, apply(I, Q * L - Lq, X) + apply(Q * R - Rq, I, Y));
    dual_right.expect_zero(
        "(id (x) L(P(a)) - R(P(a)) (x) id + id (x) QL(a) + PR(a) (x) id + lambda id (x) L(a))(P (x) id - id (x) Q)(r) = 0",
        {i}, apply(I, Lp + Q * L + w * L, Y) + apply(P * R - Rp, I, Y));
    dual_left.expect_zero(
        "(id (x) L(P(a)) - R(P(a)) (x) id - id (x) PL(a) - QR(a) (x) id - lambda R(a) (x) id)(Q (x) id - id (x) P)(r) = 0",
        {i}, apply(I, Lp - P * L, X) - apply(Rp + Q * R + w * R, I, X));
  }

  CheckReport report("coboundary-conditions");
  report.add(std::move(balance));
  report.add(std::move(coassoc));
  report.add(std::move(corbo));
  report.add(std::move(dual_right));
  report.add(std::move(dual_left));

  CheckReport full = check_rb_asi_bialgebra(coboundary_bialgebra(base, Q, r));
  const CheckReport* cocycle = full.part("asi-bialgebra") ? full.part("asi-bialgebra")->part("cocycle") : nullptr;
  if (cocycle && !cocycle->passed())
    throw Error(ErrorKind::Inconsistent, "coboundary coproduct fails the cocycle identity\n" + cocycle->to_string());
  if (full.passed() != report.passed())
    throw Error(ErrorKind::Inconsistent, "coboundary conditions disagree with the bialgebra checker\n" +
                                             report.to_string() + full.to_string());
  return report;
}

CheckReport admissibility_conditions(const RElement& r, const Matrix& P, const Matrix& Q) {
  const Matrix I = id(r.field(), r.dim());
  CheckReport report("admissibility-conditions");
  report.expect_zero("(P (x) id - id (x) Q)(r) = 0", {}, apply(P, I, r) - apply(I, Q, r));
  std::size_t first = report.failures();
  report.expect_zero("(Q (x) id - id (x) P)(r) = 0", {}, apply(Q, I, r) - apply(I, P, r));
  std::size_t second = report.failures() - first;
  if (r.is_antisymmetric() && (first == 0) != (second == 0))
    throw Error(ErrorKind::Inconsistent, "admissibility conditions differ for antisymmetric r");
  return report;
}

CheckReport admissible_aybe(const RBAlgebra& base, const Matrix& Q, const RElement& r) {
  CheckReport report("admissible-aybe");
  CheckReport aybe("aybe");
  aybe.expect_zero("r12 r13 + r13 r23 - r23 r12 = 0", {}, aybe_residual(base.algebra, r));
  report.add(std::move(aybe));
  report.add(admissibility_conditions(r, base.P, Q));
  return report;
}

CheckReport operator_form_check(const RBAlgebra& base, const Matrix& Q, const RElement& r) {
  require_antisymmetric(r, "operator form");
  const Algebra& A = base.algebra;
  const std::size_t n = A.dim();
  const Matrix M = tensor_to_map(r);
  CheckReport product("operator-identity");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(M.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector arg = transpose(A.right(images[i])).column(j) + transpose(A.left(images[j])).column(i);
      product.expect_zero("r(a*)r(b*) = r(R*(r(a*))b* + a*L*(r(b*)))", {i, j},
                          A.mul(images[i], images[j]) - M * arg);
    }
  CheckReport commute("intertwining");
  commute.expect_zero("P r = r Q*", {}, base.P * M - M * transpose(Q));
  CheckReport report("operator-form");
  report.add(std::move(product));
  report.add(std::move(commute));
  if (report.passed() != admissible_aybe(base, Q, r).passed())
    throw Error(ErrorKind::Inconsistent, "operator form and tensor form verdicts differ");
  return report;
}

CheckReport connes_check(const BilinearForm& omega, const Algebra& a) {
  if (omega.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "form does not match the algebra dimension");
  const std::size_t n = a.dim();
  CheckReport report("connes-cocycle");
  const Matrix& g = omega.gram;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!(g(i, j) + g(j, i)).is_zero())
        report.fail("w(a, b) = -w(b, a)", {i, j}, (g(i, j) + g(j, i)).to_string());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = omega(a.mul_basis(i, j), a.basis(k)) + omega(a.mul_basis(j, k), a.basis(i)) +
                   omega(a.mul_basis(k, i), a.basis(j));
        if (!s.is_zero()) report.fail("w(ab, c) + w(bc, a) + w(ca, b) = 0", {i, j, k}, s.to_string());
      }
  return report;
}

BilinearForm omega_from_r(const RElement& r) {
  return {transpose(invert(tensor_to_map(r))), Symmetry::Antisymmetric};
}

EquivalenceReport connes_correspondence(const RBAlgebra& base, const Matrix& Q, const RElement& r) {
  require_antisymmetric(r, "Connes correspondence");
  BilinearForm omega = omega_from_r(r);
  EquivalenceReport eq("connes-correspondence");
  eq.add(admissible_aybe(base, Q, r));
  CheckReport cocycle("connes-adjoint");
  cocycle.add(connes_check(omega, base.algebra));
  CheckReport adj("adjoint");
  adj.expect_zero("adjoint of P is Q", {}, adjoint_operator(omega, base.P) - Q);
  cocycle.add(std::move(adj));
  eq.add(std::move(cocycle));
  if (!eq.consistent()) throw Error(ErrorKind::Inconsistent, "Connes correspondence verdicts differ\n" + eq.to_string());
  return eq;
}

Matrix p_r(const FrobeniusData& f, const RElement& r) { return tensor_to_map(r) * frobenius_map(f.form); }

EquivalenceReport frobenius_rb_correspondence(const FrobeniusData& f, const RElement& r) {
  require_weight_zero(f.base.weight, "Frobenius correspondence");
  require_antisymmetric(r, "Frobenius correspondence");
  if (f.form.symmetry != Symmetry::Symmetric)
    throw Error(ErrorKind::InvalidArgument, "Frobenius correspondence needs a symmetric form");
  CheckReport frob = check_frobenius(f);
  if (!frob.passed())
    throw Error(ErrorKind::InvalidArgument, "Frobenius correspondence: not a Rota-Baxter Frobenius algebra\n" +
                                                frob.to_string());
  const Matrix& P = f.base.P;
  const Matrix Pr = p_r(f, r);
  EquivalenceReport eq("frobenius-correspondence");
  eq.add(admissible_aybe(f.base, adjoint_operator(f), r));
  CheckReport op("p_r-commuting-rota-baxter");
  op.add(check_rb_algebra(f.base.algebra, Pr, f.base.weight));
  CheckReport commute("commuting");
  commute.expect_zero("P P_r = P_r P", {}, P * Pr - Pr * P);
  op.add(std::move(commute));
  eq.add(std::move(op));
  if (!eq.consistent())
    throw Error(ErrorKind::Inconsistent, "Frobenius correspondence verdicts differ\n" + eq.to_string());
  return eq;
}

RElement r_from_P(const FrobeniusData& f) {
  require_weight_zero(f.base.weight, "r_P");
  RElement r = map_to_tensor(f.base.P * invert(frobenius_map(f.form)));
  Matrix neg = Matrix(f.base.field(), f.base.dim(), f.base.dim()) - f.base.P;
  if (adjoint_operator(f) == neg && !r.is_antisymmetric())
    throw Error(ErrorKind::Inconsistent, "r_P is not antisymmetric although the adjoint of P is -P");
  return r;
}

RBASIBialgebra frobenius_bialgebra(const FrobeniusData& f) {
  require_weight_zero(f.base.weight, "Frobenius bialgebra");
  Matrix neg = Matrix(f.base.field(), f.base.dim(), f.base.dim()) - f.base.P;
  if (!(adjoint_operator(f) == neg))
    throw Error(ErrorKind::InvalidArgument, "Frobenius bialgebra needs the adjoint of P to be -P");
  RElement r = r_from_P(f);
  return {f.base.algebra, coboundary_delta(f.base.algebra, r), f.base.P, neg, f.base.weight};
}

CheckReport weak_o_residuals(const OOperatorData& d) {
  const Representation& rep = d.rep;
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "O-operator representation has no alpha");
  const Algebra& A = d.base.algebra;
  if (d.T.rows() != A.dim() || d.T.cols() != rep.dim)
    throw Error(ErrorKind::DimensionMismatch, "T must map V to A");
  CheckReport report("weak-o-operator");
  std::vector<Vector> images;
  for (std::size_t u = 0; u < rep.dim; ++u) images.push_back(d.T.column(u));
  for (std::size_t u = 0; u < rep.dim; ++u)
    for (std::size_t v = 0; v < rep.dim; ++v) {
      Vector arg = rep.ell_of(images[u]).column(v) + rep.right_of(images[v]).column(u);
      report.expect_zero("T(u)T(v) = T(l(T(u))v + u r(T(v)))", {u, v}, A.mul(images[u], images[v]) - d.T * arg);
    }
  report.expect_zero("P T = T alpha", {}, d.base.P * d.T - d.T * *rep.alpha);
  return report;
}

CheckReport check_weak_o_operator(const OOperatorData& d) {
  CheckReport bimodule = check_bimodule(d.base.algebra, d.rep);
  if (!bimodule.passed()) throw Error(ErrorKind::NotABimodule, "O-operator: (V, l, r) is not a bimodule\n" + bimodule.to_string());
  return weak_o_residuals(d);
}

CheckReport check_o_operator(const OOperatorData& d) {
  CheckReport report("o-operator");
  report.add(check_weak_o_operator(d));
  report.add(rb_representation_residuals(d.base, d.rep));
  return report;
}

EquivalenceReport semidirect_dual_admissibility(const RBAlgebra& base, const Representation& rep, const Matrix& Q,
                                                const Matrix& alpha, const Matrix& beta) {
  CheckReport bimodule = check_bimodule(base.algebra, rep);
  if (!bimodule.passed())
    throw Error(ErrorKind::NotABimodule, "semidirect admissibility: not a bimodule\n" + bimodule.to_string());
  require_rb_base(base, "semidirect admissibility", ErrorKind::InvalidArgument);

  RBAlgebra direct{semidirect_algebra(base.algebra, rep), Matrix::block_diagonal(base.P, alpha), base.weight};
  RBAlgebra dual{semidirect_algebra(base.algebra, dual_actions(rep)),
                 Matrix::block_diagonal(base.P, transpose(beta)), base.weight};

  Representation with_alpha = rep;
  with_alpha.alpha = alpha;
  CheckReport items("itemized");
  items.add(named("representation", rb_representation_residuals(base, with_alpha)));
  items.add(named("q-admissible", admissibility_residuals(base, Representation::adjoint(base.algebra), Q)));
  items.add(named("admissible-quadruple", admissibility_residuals(base, rep, beta)));
  items.add(mixed_identities(base, rep, Q, alpha, beta));

  EquivalenceReport eq("semidirect-dual-admissibility");
  eq.add(rb_and_admissible("semidirect", direct, Matrix::block_diagonal(Q, beta)));
  eq.add(rb_and_admissible("dual-semidirect", dual, Matrix::block_diagonal(Q, transpose(alpha))));
  eq.add(std::move(items));
  if (!eq.consistent())
    throw Error(ErrorKind::Inconsistent, "semidirect admissibility verdicts differ\n" + eq.to_string());
  return eq;
}

LiftResult lift_o_operator(const OOperatorData& d, const Matrix& Q, const Matrix& beta) {
  const RBAlgebra& base = d.base;
  const Representation& rep = d.rep;
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "O-operator representation has no alpha");
  CheckReport bimodule = check_bimodule(base.algebra, rep);
  if (!bimodule.passed())
    throw Error(ErrorKind::LiftPreconditionFailed, "lift: (V, l, r) is not a bimodule\n" + bimodule.to_string());
  CheckReport quadruple = admissibility_residuals(base, rep, beta);
  if (!quadruple.passed())
    throw Error(ErrorKind::LiftPreconditionFailed, "lift: (V, l, r, beta) is not an admissible quadruple\n" +
                                                       quadruple.to_string());
  if (!(d.T * beta == Q * d.T))
    throw Error(ErrorKind::LiftPreconditionFailed, "lift: T beta = Q T fails\n" + (d.T * beta - Q * d.T).to_string());

  const std::size_t n = base.dim(), m = rep.dim;
  Representation dual = dual_actions(rep);
  dual.alpha = transpose(beta);
  LiftResult out{semidirect_product(base, dual, Validation::Unchecked),
                 Matrix::block_diagonal(Q, transpose(*rep.alpha)),
                 RElement(base.field(), n + m),
                 CheckReport("lift"),
                 CheckReport("bialgebra-conditions"),
                 std::nullopt};
  RElement t = map_to_tensor(d.T, m, n);
  out.r = t - flip(t);

  CheckReport anti("antisymmetric");
  anti.expect(out.r.is_antisymmetric(), "r = -sigma(r)");
  CheckReport aybe = admissible_aybe(out.algebra, out.Q, out.r);
  CheckReport weak = weak_o_residuals(d);
  if (aybe.passed() != weak.passed())
    throw Error(ErrorKind::Inconsistent, "lift: admissible AYBE and weak O-operator verdicts differ\n" +
                                             aybe.to_string() + weak.to_string());
  out.solution.add(std::move(anti));
  out.solution.add(std::move(aybe));
  out.solution.add(std::move(weak));

  CheckReport& cond = out.bialgebra_conditions;
  cond.add(check_associativity(base.algebra));
  cond.add(check_rb_algebra(base));
  cond.add(named("representation", rb_representation_residuals(base, rep)));
  cond.add(named("o-operator", weak_o_residuals(d)));
  cond.add(named("q-admissible", admissibility_residuals(base, Representation::adjoint(base.algebra), Q)));
  cond.add(mixed_identities(base, rep, Q, *rep.alpha, beta));
  if (cond.passed()) {
    RBASIBialgebra b = coboundary_bialgebra(out.algebra, out.Q, out.r);
    CheckReport full = check_rb_asi_bialgebra(b);
    if (!full.passed()) throw Error(ErrorKind::Inconsistent, "lift: assembled bialgebra fails\n" + full.to_string());
    out.bialgebra = std::move(b);
  }
  return out;
}

PiSpec PiSpec::scalar_x(const Scalar& theta) {
  if (!(theta == theta.field().one()) && !(theta == -theta.field().one()))
    throw Error(ErrorKind::InvalidArgument, "theta x needs theta = 1 or -1");
  return {Kind::ScalarX, theta};
}

PiSpec PiSpec::neg_x_plus_theta(const Scalar& theta) {
  if (theta.is_zero()) throw Error(ErrorKind::InvalidArgument, "-x + theta needs theta != 0");
  return {Kind::NegXPlusTheta, theta};
}

PiSpec PiSpec::theta_x_inverse(const Scalar& theta) {
  if (theta.is_zero()) throw Error(ErrorKind::InvalidArgument, "theta x^-1 needs theta != 0");
  return {Kind::ThetaXInverse, theta};
}

Matrix PiSpec::apply(const Matrix& x) const {
  switch (kind) {
    case Kind::ScalarX: return theta * x;
    case Kind::NegXPlusTheta: return Matrix::scalar(theta, x.rows()) - x;
    case Kind::ThetaXInverse:
      try {
        return theta * invert(x);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularMatrix) throw Error(ErrorKind::NotInvertible, "theta x^-1 on a singular map");
        throw;
      }
  }
  return x;
}

CheckReport pi_admissible_check(const PiSpec& pi, const RBAlgebra& base, const Representation& rep) {
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "Pi-admissible equations need alpha");
  const Algebra& A = base.algebra;
  const Matrix& P = base.P;
  const Matrix& al = *rep.alpha;
  const Scalar& w = base.weight;
  const Scalar& th = pi.theta;
  const std::size_t n = A.dim(), m = rep.dim;
  const Field& f = A.field();
  const Matrix In = id(f, n), Im = id(f, m);
  // Eager invertibility for theta x^-1.
  Matrix Qpi = pi.apply(P);
  Matrix beta = pi.apply(al);

  CheckReport report("pi-admissible");
  CheckReport rep_part("representation");
  for (std::size_t i = 0; i < n; ++i) {
    Vector pa = P.column(i);
    Matrix lp = rep.ell_of(pa), rp = rep.right_of(pa);
    const Matrix& l = rep.ell[i];
    const Matrix& r = rep.right[i];
    if (pi.kind != PiSpec::Kind::ThetaXInverse) {
      expect_zero_columns(rep_part, "l(P(a))alpha(v) = alpha(l(P(a))v) + alpha(l(a)alpha(v)) + lambda alpha(l(a)v)", i,
                          lp * al - al * lp - al * l * al - w * (al * l));
      expect_zero_columns(rep_part, "alpha(v)r(P(a)) = alpha(alpha(v)r(a)) + alpha(v r(P(a))) + lambda alpha(v r(a))",
                          i, rp * al - al * r * al - al * rp - w * (al * r));
    }
  }

  CheckReport alg("algebra");
  CheckReport mod("module");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector pa = P.column(i);
    const Matrix L = A.left(i), R = A.right(i), Lp = A.left(pa), Rp = A.right(pa);
    const Matrix& l = rep.ell[i];
    const Matrix& r = rep.right[i];
    const Matrix lp = rep.ell_of(pa), rp = rep.right_of(pa);
    switch (pi.kind) {
      case PiSpec::Kind::ScalarX: {
        const Matrix K = th * P + P + w * In;
        const Matrix Ka = th * al + al + w * Im;
        // Columns j of the algebra identities are the basis elements b = e_j.
        expect_zero_columns(alg, "(theta P + P + lambda id)(aP(b)) + lambda P(ab) = 0", i, K * L * P + w * (P * L));
        expect_zero_columns(alg, "(theta P + P + lambda id)(P(a)b) + lambda P(ab) = 0", i, K * Lp + w * (P * L));
        expect_zero_columns(mod, "(theta alpha + alpha + lambda id)(l(a)alpha(v)) + lambda alpha(l(a)v) = 0", i,
                            Ka * l * al + w * (al * l));
        expect_zero_columns(mod, "(theta alpha + alpha + lambda id)(alpha(v)r(a)) + lambda alpha(v r(a)) = 0", i,
                            Ka * r * al + w * (al * r));
        expect_zero_columns(mod, "(theta alpha + alpha + lambda id)(l(P(a))v) + lambda alpha(l(a)v) = 0", i,
                            Ka * lp + w * (al * l));
        expect_zero_columns(mod, "(theta alpha + alpha + lambda id)(v r(P(a))) + lambda alpha(v r(a)) = 0", i,
                            Ka * rp + w * (al * r));
        break;
      }
      case PiSpec::Kind::NegXPlusTheta: {
        const Scalar c = w + th;
        expect_zero_columns(alg, "(lambda + theta)(P(ab) + aP(b) - theta ab) = 0", i, c * (P * L + L * P - th * L));
        expect_zero_columns(alg, "(lambda + theta)(P(ab) + P(a)b - theta ab) = 0", i, c * (P * L + Lp - th * L));
        expect_zero_columns(mod, "(lambda + theta)(l(a)alpha(v) + alpha(l(a)v) - theta l(a)v) = 0", i,
                            c * (l * al + al * l - th * l));
        expect_zero_columns(mod, "(lambda + theta)(alpha(v)r(a) + alpha(v r(a)) - theta v r(a)) = 0", i,
                            c * (r * al + al * r - th * r));
        expect_zero_columns(mod, "(lambda + theta)(l(P(a))v + alpha(l(a)v) - theta l(a)v) = 0", i,
                            c * (lp + al * l - th * l));
        expect_zero_columns(mod, "(lambda + theta)(v r(P(a)) + alpha(v r(a)) - theta v r(a)) = 0", i,
                            c * (rp + al * r - th * r));
        break;
      }
      case PiSpec::Kind::ThetaXInverse: {
        expect_zero_columns(alg, "P(aP(b)) = theta ab", i, P * L * P - th * L);
        expect_zero_columns(alg, "P(P(a)b) = theta ab", i, P * Lp - th * L);
        expect_zero_columns(mod, "alpha(l(a)alpha(v)) = theta l(a)v", i, al * l * al - th * l);
        expect_zero_columns(mod, "alpha(l(P(a))v) = theta l(a)v", i, al * lp - th * l);
        expect_zero_columns(mod, "alpha(alpha(v)r(a)) = theta v r(a)", i, al * r * al - th * r);
        expect_zero_columns(mod, "alpha(v r(P(a))) = theta v r(a)", i, al * rp - th * r);
        expect_zero_columns(mod, "l(P(a))alpha(v) = (lambda alpha + 2 theta id)(l(a)v)", i,
                            lp * al - (w * al + (th + th) * Im) * l);
        expect_zero_columns(mod, "alpha(v)r(P(a)) = (lambda alpha + 2 theta id)(v r(a))", i,
                            rp * al - (w * al + (th + th) * Im) * r);
        break;
      }
    }
  }
  if (pi.kind != PiSpec::Kind::ThetaXInverse) report.add(std::move(rep_part));
  report.add(std::move(alg));
  report.add(std::move(mod));

  EquivalenceReport eq = semidirect_dual_admissibility(base, rep, Qpi, al, beta);
  if (eq.reports()[1].passed() != report.passed())
    throw Error(ErrorKind::Inconsistent, "Pi-admissible equations disagree with the semidirect admissibility\n" +
                                             report.to_string() + eq.to_string());
  return report;
}

RBASIBialgebra cons2_bialgebra(const OOperatorData& d) {
  CheckReport o = check_o_operator(d);
  if (!o.passed()) throw Error(ErrorKind::LiftPreconditionFailed, "cons2: not an O-operator\n" + o.to_string());
  const Scalar& w = d.base.weight;
  const Matrix Q = Matrix(d.base.field(), d.base.dim(), d.base.dim()) - d.base.P - w * id(d.base.field(), d.base.dim());
  const Matrix beta = Matrix(d.rep.field, d.rep.dim, d.rep.dim) - *d.rep.alpha - w * id(d.rep.field, d.rep.dim);
  LiftResult res = lift_o_operator(d, Q, beta);
  if (!res.bialgebra)
    throw Error(ErrorKind::Inconsistent, "cons2: bialgebra conditions fail\n" + res.bialgebra_conditions.to_string());
  return std::move(*res.bialgebra);
}

}  // namespace rb
