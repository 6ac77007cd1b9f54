#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/rota_baxter.hpp"

namespace rb {
namespace {

using namespace testing;

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

// Every one-dimensional bimodule over a, with zero operator.
std::vector<Representation> line_bimodules(const Algebra& a) {
  std::vector<Representation> out;
  const std::size_t n = a.dim();
  const std::uint32_t p = a.field().characteristic();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < 2 * n; ++t) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Representation r = Representation::zero(a.field(), n, 1);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      r.ell[i](0, 0) = a.field().from_int(static_cast<long long>(c % p));
      c /= p;
      r.right[i](0, 0) = a.field().from_int(static_cast<long long>(c % p));
      c /= p;
    }
    if (check_bimodule(a, r).passed()) out.push_back(std::move(r));
  }
  return out;
}

TEST(RBAlgebra, ScalarOperatorOnAnyAlgebra) {
  const Scalar w = Q.parse("3/2");
  for (const Algebra& a : {unit_algebra(Q), truncated_poly(Q, 3), upper_triangular(Q)})
    EXPECT_TRUE(check_rb_algebra(a, Matrix::scalar(-w, a.dim()), w).passed());
  for (const RBAlgebra& b : rb_corpus(F3, 1))
    EXPECT_TRUE(check_rb_algebra(b.algebra, Matrix::scalar(-b.weight, 1), b.weight).passed());
}

TEST(RBAlgebra, ProjectionOntoSummand) {
  const Algebra a = direct_sum(unit_algebra(Q), truncated_poly(Q, 2));
  const Matrix proj = make_matrix(Q, 3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(check_rb_algebra(a, proj, Q.from_int(-1)).passed());
  EXPECT_FALSE(check_rb_algebra(a, proj, Q.from_int(1)).passed());
}

TEST(RBAlgebra, DualNumbersOverF2) {
  const Algebra a = truncated_poly(F2, 2);
  const Matrix P = make_matrix(F2, 2, 2, {0, 0, 1, 0});
  EXPECT_TRUE(check_rb_algebra(a, P, F2.zero()).passed());
  EXPECT_FALSE(check_rb_algebra(a, P, F2.one()).passed());
  EXPECT_EQ(rb_operators(a, F2.zero()).size(), 2u);
}

TEST(RBAlgebra, NullAlgebraAcceptsEveryOperator) {
  for (const Matrix& P : all_matrices(F3, 2, 2))
    for (const Scalar& w : F3.elements()) EXPECT_TRUE(check_rb_algebra(null_algebra(F3, 2), P, w).passed());
}

TEST(RBAlgebra, AgreesWithOracle) {
  for (const Algebra& a : associative_algebras(F2, 2))
    for (const Matrix& P : all_matrices(F2, 2, 2))
      for (const Scalar& w : F2.elements()) EXPECT_EQ(check_rb_algebra(a, P, w).passed(), oracle_is_rb(a, P, w));
}

TEST(RBAlgebra, WeightTransport) {
  for (const RBAlgebra& b : rb_corpus(F3, 2)) {
    const Matrix other = Matrix::scalar(-b.weight, b.dim()) - b.P;
    EXPECT_TRUE(check_rb_algebra(b.algebra, other, b.weight).passed());
  }
}

TEST(RBAlgebra, DimensionMismatch) {
  EXPECT_RB_ERROR(check_rb_algebra(unit_algebra(Q), Matrix::identity(Q, 2), Q.zero()), ErrorKind::DimensionMismatch);
}

TEST(RBCoalgebra, ScalarOperatorOnAnyCoalgebra) {
  const Scalar w = Q.from_int(5);
  const Coalgebra c = dualize_algebra(upper_triangular(Q));
  EXPECT_TRUE(check_rb_coalgebra(c, Matrix::scalar(-w, 3), w).passed());
}

TEST(RBCoalgebra, DualToRBAlgebra) {
  for (const Algebra& a : associative_algebras(F2, 2)) {
    const Coalgebra c = dualize_algebra(a);
    for (const Matrix& Qm : all_matrices(F2, 2, 2))
      for (const Scalar& w : F2.elements())
        EXPECT_EQ(check_rb_coalgebra(c, Qm, w).passed(), check_rb_algebra(a, transpose(Qm), w).passed());
  }
}

TEST(RBRepresentation, AdjointWithP) {
  for (const RBAlgebra& b : rb_corpus(F2, 2)) {
    Representation adj = Representation::adjoint(b.algebra);
    adj.alpha = b.P;
    EXPECT_TRUE(check_rb_representation(b, adj).passed());
  }
}

TEST(RBRepresentation, OneSidedActions) {
  for (const RBAlgebra& b : rb_corpus(F2, 2)) {
    Representation l = left_only(b.algebra), r = right_only(b.algebra);
    l.alpha = b.P;
    r.alpha = b.P;
    EXPECT_TRUE(check_rb_representation(b, l).passed());
    EXPECT_TRUE(check_rb_representation(b, r).passed());
  }
}

TEST(RBRepresentation, NotABimodule) {
  const RBAlgebra b{truncated_poly(Q, 2), Matrix(Q, 2, 2), Q.zero()};
  Representation r = Representation::zero(Q, 2, 2);
  r.ell[0] = Matrix::identity(Q, 2);
  r.ell[1] = Matrix::identity(Q, 2);
  r.alpha = Matrix(Q, 2, 2);
  EXPECT_RB_ERROR(check_rb_representation(b, r), ErrorKind::NotABimodule);
}

TEST(RBRepresentation, MutationIsDetected) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  Representation adj = Representation::adjoint(b.algebra);
  std::size_t failing = 0;
  for (const Matrix& m : single_entry_mutations(b.P)) {
    adj.alpha = m;
    failing += !check_rb_representation(b, adj).passed();
  }
  EXPECT_GT(failing, 0u);
}

TEST(Admissible, AdjointWithTransportedOperator) {
  for (const RBAlgebra& b : rb_corpus(F2, 2)) {
    const Matrix beta = Matrix::scalar(-b.weight, b.dim()) - b.P;
    EXPECT_TRUE(check_admissible(b, Representation::adjoint(b.algebra), beta).passed());
  }
}

TEST(Admissible, EquivalentToDualRepresentationOnLines) {
  // Exhaustive over one-dimensional bimodules and every beta, dim A <= 2 over F2.
  std::size_t pass = 0, total = 0;
  for (const RBAlgebra& b : rb_corpus(F2, 2))
    for (const Representation& v : line_bimodules(b.algebra))
      for (const Matrix& beta : all_matrices(F2, 1, 1)) {
        const bool direct = check_admissible(b, v, beta).passed();
        Representation dual = dual_actions(v);
        dual.alpha = transpose(beta);
        EXPECT_EQ(direct, check_rb_representation(b, dual).passed());
        pass += direct;
        ++total;
      }
  EXPECT_GT(pass, 0u);
  EXPECT_LT(pass, total);
}

TEST(Admissible, QAdmissibleScalar) {
  for (const RBAlgebra& b : rb_corpus(F3, 1))
    EXPECT_TRUE(check_q_admissible(b, Matrix::scalar(-b.weight, b.dim()) - b.P).passed());
}

TEST(Equivalence, IdentityAndZero) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  Representation adj = Representation::adjoint(b.algebra);
  adj.alpha = b.P;
  EXPECT_TRUE(check_equivalence(b, adj, adj, Matrix::identity(F2, 2)).passed());
  EXPECT_FALSE(check_equivalence(b, adj, adj, Matrix(F2, 2, 2)).passed());
  EXPECT_RB_ERROR(check_equivalence(b, adj, adj, Matrix(F2, 1, 2)), ErrorKind::DimensionMismatch);
}

TEST(Equivalence, SymmetricFrobeniusGivesCoadjoint) {
  for (const Field& f : {F2, F3})
    for (const Scalar& w : f.elements())
      for (const FrobeniusData& d : symmetric_frobenius_corpus(f, 2, w)) {
        Representation adj = Representation::adjoint(d.base.algebra);
        adj.alpha = adjoint_operator(d);
        Representation coadj = dual_actions(Representation::adjoint(d.base.algebra));
        coadj.alpha = transpose(d.base.P);
        EXPECT_TRUE(check_equivalence(d.base, adj, coadj, frobenius_map(d.form)).passed());
      }
}

TEST(Semidirect, AdjointOnUnitAlgebra) {
  const Scalar w = Q.from_int(2);
  const RBAlgebra b{unit_algebra(Q), Matrix::scalar(-w, 1), w};
  Representation adj = Representation::adjoint(b.algebra);
  adj.alpha = b.P;
  const RBAlgebra s = semidirect_product(b, adj);
  EXPECT_EQ(s.algebra, make_algebra(Q, 2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}));
  EXPECT_EQ(s.P, Matrix::scalar(-w, 2));
  EXPECT_TRUE(check_rb_algebra(s).passed());
}

TEST(Semidirect, ZeroModuleReturnsBase) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  Representation z = Representation::zero(F2, 2, 0);
  z.alpha = Matrix(F2, 0, 0);
  const RBAlgebra s = semidirect_product(b, z);
  EXPECT_EQ(s.algebra, b.algebra);
  EXPECT_EQ(s.P, b.P);
}

TEST(Semidirect, CheckedModeRejects) {
  const RBAlgebra b{truncated_poly(F2, 2), make_matrix(F2, 2, 2, {0, 0, 1, 0}), F2.zero()};
  Representation adj = Representation::adjoint(b.algebra);
  adj.alpha = Matrix::identity(F2, 2);
  EXPECT_RB_ERROR(semidirect_product(b, adj), ErrorKind::NotARBRepresentation);
  const RBAlgebra s = semidirect_product(b, adj, Validation::Unchecked);
  EXPECT_FALSE(check_rb_algebra(s).passed());
}

TEST(Semidirect, RepresentationIffRBAlgebra) {
  // One-dimensional modules, all operators, dim A <= 2 over F2.
  for (const RBAlgebra& b : rb_corpus(F2, 2))
    for (Representation v : line_bimodules(b.algebra))
      for (const Matrix& alpha : all_matrices(F2, 1, 1)) {
        v.alpha = alpha;
        const bool rep = rb_representation_residuals(b, v).passed();
        const RBAlgebra s = semidirect_product(b, v, Validation::Unchecked);
        EXPECT_EQ(rep, check_associativity(s.algebra).passed() && check_rb_algebra(s).passed());
      }
}

}  // namespace
}  // namespace rb
