#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/dendriform.hpp"
#include "rb/search.hpp"

namespace rb {
namespace {

using namespace testing;

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

Matrix projection(Field f, std::size_t n, std::size_t begin, std::size_t count) {
  Matrix m(f, n, n);
  for (std::size_t i = begin; i < begin + count; ++i) m(i, i) = f.one();
  return m;
}

Tensor2 embed(const Tensor2& r, std::size_t n, std::size_t offset) {
  Tensor2 out(r.field(), n);
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) out(offset + i, offset + j) = r(i, j);
  return out;
}

// A dim-2 algebra over F3 with a nonzero antisymmetric AYBE solution.
std::pair<Algebra, RElement> coboundary_piece() {
  for (const Algebra& a : associative_algebras(F3, 2)) {
    if (a.is_zero()) continue;
    for (const RElement& r : search_antisym_aybe(a, kDefaultBudget, 1))
      if (!r.is_zero() && !coboundary_delta(a, r).is_zero()) return {a, r};
  }
  ADD_FAILURE() << "no coboundary piece";
  return {Algebra(F3, 2), RElement(F3, 2)};
}

TEST(ScalarExample, EveryStructure) {
  const Scalar w = Q.parse("-2/7");
  const Algebra a = upper_triangular(Q);
  const Matrix s = Matrix::scalar(-w, 3);
  EXPECT_TRUE(check_rb_algebra(a, s, w).passed());
  EXPECT_TRUE(check_rb_coalgebra(dualize_algebra(a), s, w).passed());
  const auto [b, r] = coboundary_piece();
  const Matrix s3 = Matrix::scalar(-F3.one(), 2);
  EXPECT_TRUE(check_rb_asi_bialgebra({b, coboundary_delta(b, r), s3, s3, F3.one()}).passed());
}

TEST(DirectSumExample, ProjectionsGiveBialgebra) {
  const auto [a, r] = coboundary_piece();
  const Algebra s = direct_sum(a, a);
  const Coalgebra d = direct_sum(coboundary_delta(a, r), coboundary_delta(a, r));
  const Scalar w = -F3.one();
  const RBASIBialgebra b{s, d, projection(F3, 4, 0, 2), projection(F3, 4, 2, 2), w};
  EXPECT_TRUE(check_rb_algebra(b.rb_algebra()).passed());
  EXPECT_TRUE(check_rb_asi_bialgebra(b).passed());
}

TEST(DirectSumExample, CoboundaryFromSummedTensor) {
  const auto [a, r1] = coboundary_piece();
  const RElement r2 = F3.from_int(2) * r1;
  const Algebra s = direct_sum(a, a);
  const RElement r = embed(r1, 4, 0) + embed(r2, 4, 2);
  EXPECT_EQ(coboundary_delta(s, r), direct_sum(coboundary_delta(a, r1), coboundary_delta(a, r2)));
  const RBAlgebra base{s, projection(F3, 4, 0, 2), -F3.one()};
  const Matrix Qm = projection(F3, 4, 2, 2);
  EXPECT_TRUE(coboundary_conditions(base, Qm, r).passed());
  // (P (x) id - id (x) Q)(r) = r1 - r2 is nonzero.
  EXPECT_FALSE(admissibility_conditions(r, base.P, Qm).passed());
}

TEST(OOperatorExamples, IdentityAndOperator) {
  for (const RBAlgebra& b : rb_corpus(F2, 2)) {
    const Matrix I = Matrix::identity(F2, b.dim());
    Representation l = left_only(b.algebra), r = right_only(b.algebra);
    l.alpha = b.P;
    r.alpha = b.P;
    EXPECT_TRUE(check_o_operator({b, l, I}).passed());
    EXPECT_TRUE(check_o_operator({b, r, I}).passed());
    if (!b.weight.is_zero()) continue;
    Representation adj = Representation::adjoint(b.algebra);
    adj.alpha = b.P;
    EXPECT_TRUE(check_o_operator({b, adj, b.P}).passed());
  }
}

TEST(LiftExamples, TensorShapes) {
  for (const RBAlgebra& b : rb_corpus(F3, 2)) {
    const std::size_t n = b.dim();
    const Matrix beta = Matrix::scalar(-b.weight, n) - b.P;
    Representation l = left_only(b.algebra);
    l.alpha = b.P;
    const LiftResult a = lift_o_operator({b, l, Matrix::identity(F3, n)}, beta, beta);
    const Tensor2 t1 = map_to_tensor(Matrix::identity(F3, n), n, n);
    EXPECT_EQ(a.r, t1 - flip(t1));
    ASSERT_TRUE(a.bialgebra.has_value());
    if (!b.weight.is_zero()) continue;
    Representation adj = Representation::adjoint(b.algebra);
    adj.alpha = b.P;
    const LiftResult c = lift_o_operator({b, adj, b.P}, beta, beta);
    const Tensor2 t2 = map_to_tensor(b.P, n, n);
    EXPECT_EQ(c.r, t2 - flip(t2));
    EXPECT_TRUE(c.bialgebra.has_value());
  }
}

TEST(LiftExamples, ZeroOperator) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  Representation l = left_only(b.algebra);
  l.alpha = b.P;
  const Matrix beta = Matrix::scalar(-b.weight, 2) - b.P;
  const LiftResult res = lift_o_operator({b, l, Matrix(F2, 2, 2)}, beta, beta);
  EXPECT_TRUE(res.r.is_zero());
  EXPECT_TRUE(res.solution.passed());
}

TEST(PiExamples, ThetaInverseOnUnitAlgebra) {
  // P = c id with c = -lambda; the equations force c^2 = theta.
  const Scalar w = F5.from_int(2);
  const Scalar c = -w;
  const RBAlgebra b{unit_algebra(F5), Matrix::scalar(c, 1), w};
  Representation adj = Representation::adjoint(b.algebra);
  adj.alpha = b.P;
  for (const Scalar& t : F5.elements()) {
    if (t.is_zero()) continue;
    EXPECT_EQ(pi_admissible_check(PiSpec::theta_x_inverse(t), b, adj).passed(), t == c * c) << t.to_string();
  }
}

TEST(PiExamples, WeightZeroNegation) {
  for (const RBAlgebra& b : rb_corpus(F3, 2)) {
    if (!b.weight.is_zero()) continue;
    Representation adj = Representation::adjoint(b.algebra);
    adj.alpha = b.P;
    EXPECT_TRUE(pi_admissible_check(PiSpec::scalar_x(-F3.one()), b, adj).passed());
  }
}

TEST(DendriformExamples, TrivialStructure) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  const DendriformAlgebra d{Algebra(F2, 2), b.algebra};
  EXPECT_TRUE(check_dendriform(d).passed());
  EXPECT_EQ(associated_algebra(d), b.algebra);
  const Representation v = dendriform_rep(d);
  const Representation l = left_only(b.algebra);
  EXPECT_EQ(v.ell, l.ell);
  EXPECT_EQ(v.right, l.right);
  const RBDendriform r{d, b.P, b.weight};
  EXPECT_TRUE(check_rb_dendriform(r).passed());
  Representation la = l;
  la.alpha = b.P;
  const RBASIBialgebra x = dendriform_bialgebra(r), y = cons2_bialgebra({b, la, Matrix::identity(F2, 2)});
  EXPECT_EQ(x.algebra, y.algebra);
  EXPECT_EQ(x.coproduct, y.coproduct);
  EXPECT_EQ(x.P, y.P);
  EXPECT_EQ(x.Q, y.Q);
}

TEST(DendriformExamples, InducedOnDualNumbers) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  const RBDendriform r = induced_dendriform(b);
  EXPECT_EQ(r.dend.succ, make_algebra(F2, 2, {{1, 1, 2, 1}}));
  EXPECT_EQ(r.dend.prec, make_algebra(F2, 2, {{1, 1, 2, 1}}));
  const std::array<RBASIBialgebra, 4> four = four_bialgebras(b);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(check_rb_asi_bialgebra(four[i]).passed());
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_FALSE(four[i].algebra == four[j].algebra && four[i].coproduct == four[j].coproduct &&
                   four[i].P == four[j].P && four[i].Q == four[j].Q);
  }
}

TEST(DendriformExamples, PerturbedFormFails) {
  for (const FrobeniusData& d : symmetric_frobenius_corpus(F3, 2, F3.zero())) {
    const RBDendriform r = induced_dendriform(d.base);
    if (r.dend.prec.is_zero() && r.dend.succ.is_zero()) continue;
    std::size_t failing = 0;
    for (const Matrix& g : single_entry_mutations(d.form.gram))
      failing += !check_two_cocycle({g, Symmetry::None}, r.dend).passed();
    EXPECT_GT(failing, 0u);
    return;
  }
  FAIL() << "no nonzero induced structure";
}

}  // namespace
}  // namespace rb
