#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/dendriform.hpp"

namespace rb {
namespace {

using namespace testing;

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

std::vector<RBAlgebra> weight_zero(Field f, std::size_t dim) {
  std::vector<RBAlgebra> out;
  for (RBAlgebra& b : rb_corpus(f, dim))
    if (b.weight.is_zero()) out.push_back(std::move(b));
  return out;
}

TEST(Dendriform, ZeroProducts) {
  EXPECT_TRUE(check_dendriform(DendriformAlgebra::zero(Q, 3)).passed());
  EXPECT_TRUE(associated_algebra(DendriformAlgebra::zero(Q, 3)).is_zero());
}

TEST(Dendriform, NonDendriformRejected) {
  DendriformAlgebra d{nonassociative_example(Q), Algebra(Q, 2)};
  EXPECT_FALSE(check_dendriform(d).passed());
  EXPECT_RB_ERROR(associated_algebra(d), ErrorKind::NotDendriform);
  EXPECT_RB_ERROR(dendriform_rep(d), ErrorKind::NotDendriform);
}

TEST(Induced, ProductsAndAssociatedAlgebra) {
  for (const RBAlgebra& b : weight_zero(F3, 2)) {
    const RBDendriform r = induced_dendriform(b);
    EXPECT_TRUE(check_dendriform(r.dend).passed());
    EXPECT_TRUE(check_rb_dendriform(r).passed());
    const Algebra star = associated_algebra(r.dend);
    EXPECT_TRUE(check_associativity(star).passed());
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) {
        const Vector ei = b.algebra.basis(i), ej = b.algebra.basis(j);
        EXPECT_EQ(r.dend.succ.mul(ei, ej), b.algebra.mul(b.P * ei, ej));
        EXPECT_EQ(r.dend.prec.mul(ei, ej), b.algebra.mul(ei, b.P * ej));
      }
    EXPECT_TRUE(check_rb_algebra(star, b.P, b.weight).passed());
  }
}

TEST(Induced, OperatorIsHomomorphismAndActionsFactor) {
  for (const RBAlgebra& b : weight_zero(F3, 2)) {
    const RBDendriform r = induced_dendriform(b);
    const Algebra star = associated_algebra(r.dend);
    const Representation v = dendriform_rep(r.dend);
    const Representation adj = Representation::adjoint(b.algebra);
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const Vector pi = b.P * b.algebra.basis(i);
      Matrix l(F3, b.dim(), b.dim()), rr(F3, b.dim(), b.dim());
      for (std::size_t k = 0; k < b.dim(); ++k) {
        l = l + pi[k] * adj.ell[k];
        rr = rr + pi[k] * adj.right[k];
      }
      EXPECT_EQ(v.ell[i], l);
      EXPECT_EQ(v.right[i], rr);
      for (std::size_t j = 0; j < b.dim(); ++j) {
        const Vector ej = b.algebra.basis(j);
        EXPECT_EQ(b.P * star.mul(b.algebra.basis(i), ej), b.algebra.mul(pi, b.P * ej));
      }
    }
  }
}

TEST(Induced, RequiresWeightZero) {
  const RBAlgebra b{unit_algebra(Q), Matrix::scalar(-Q.one(), 1), Q.one()};
  EXPECT_RB_ERROR(induced_dendriform(b), ErrorKind::NotWeightZero);
}

TEST(Induced, IdentityIsOOperator) {
  for (const RBAlgebra& b : weight_zero(F2, 2)) {
    const RBDendriform r = induced_dendriform(b);
    const Algebra star = associated_algebra(r.dend);
    Representation v = dendriform_rep(r.dend);
    v.alpha = b.P;
    EXPECT_TRUE(check_o_operator({{star, b.P, b.weight}, v, Matrix::identity(F2, b.dim())}).passed());
  }
}

TEST(Cocycle, SymmetricFrobeniusForms) {
  std::size_t cases = 0;
  for (const Field& f : {F2, F3})
    for (const FrobeniusData& d : symmetric_frobenius_corpus(f, 2, f.zero())) {
      const RBDendriform r = induced_dendriform(d.base);
      EXPECT_TRUE(check_two_cocycle(d.form, r.dend).passed());
      EXPECT_TRUE(check_sharp_identity(d.form, r.dend).passed());
      ++cases;
    }
  EXPECT_GT(cases, 0u);
}

TEST(Cocycle, AntisymmetricFormFails) {
  const RBDendriform r = induced_dendriform({truncated_poly(Q, 2), make_matrix(Q, 2, 2, {0, 0, 1, 0}), Q.zero()});
  const BilinearForm b{make_matrix(Q, 2, 2, {0, 1, -1, 0}), Symmetry::Antisymmetric};
  EXPECT_FALSE(check_two_cocycle(b, r.dend).passed());
}

TEST(FourBialgebras, WeightZeroCorpus) {
  for (const RBAlgebra& b : weight_zero(F2, 2))
    for (const RBASIBialgebra& bi : four_bialgebras(b)) {
      EXPECT_EQ(bi.dim(), 2 * b.dim());
      EXPECT_TRUE(check_rb_asi_bialgebra(bi).passed());
    }
  const RBAlgebra nonzero{unit_algebra(Q), Matrix::scalar(-Q.one(), 1), Q.one()};
  EXPECT_RB_ERROR(four_bialgebras(nonzero), ErrorKind::NotWeightZero);
}

TEST(DendriformBialgebra, FromInducedStructure) {
  for (const RBAlgebra& b : weight_zero(F2, 2))
    EXPECT_TRUE(check_rb_asi_bialgebra(dendriform_bialgebra(induced_dendriform(b))).passed());
}

TEST(ManinTriple, FromWeightZeroBialgebras) {
  std::size_t cases = 0;
  for (const RBASIBialgebra& b : bialgebra_corpus(weight_zero(F2, 2))) {
    const DendriformManinTriple m = manin_triple_from_bialgebra(b);
    EXPECT_TRUE(check_dendriform(m.dend).passed());
    EXPECT_TRUE(check_manin_triple(m.dend, m.form).passed());
    EXPECT_TRUE(check_manin_restrictions(b, m).passed());
    const DendriformAlgebra first = restrict_block(m.dend, 0, b.dim());
    EXPECT_EQ(first.succ, induced_dendriform(b.rb_algebra()).dend.succ);
    ++cases;
  }
  EXPECT_GT(cases, 0u);
}

}  // namespace
}  // namespace rb
