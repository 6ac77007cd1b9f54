#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/algebra.hpp"

namespace rb {
namespace {

using namespace testing;

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

TEST(Associativity, Examples) {
  EXPECT_TRUE(check_associativity(unit_algebra(Q)).passed());
  EXPECT_TRUE(check_associativity(null_algebra(Q, 1)).passed());
  const CheckReport r = check_associativity(nonassociative_example(Q));
  ASSERT_FALSE(r.passed());
  ASSERT_FALSE(r.witnesses().empty());
  EXPECT_EQ(r.witnesses()[0].indices, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Associativity, AgreesWithOracleOnAllTables) {
  // Every structure table of dim 2 over F2.
  std::size_t associative = 0;
  for (std::uint32_t code = 0; code < 256; ++code) {
    Algebra a(F2, 2);
    for (std::size_t t = 0; t < 8; ++t) a.c(t / 4, (t / 2) % 2, t % 2) = F2.from_int((code >> t) & 1);
    const bool ok = check_associativity(a).passed();
    EXPECT_EQ(ok, oracle_associative(a));
    associative += ok;
  }
  EXPECT_EQ(associative, associative_algebras(F2, 2).size());
}

TEST(WitnessCap, KeepsSixteenAndCountsAll) {
  // A dense non-associative table fails on many triples.
  Algebra a(Q, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a.c(i, j, (i + 2 * j) % 3) = Q.from_int(static_cast<long long>(i + 1));
  const CheckReport r = check_associativity(a);
  EXPECT_GT(r.total_failures(), CheckReport::kMaxWitnesses);
  EXPECT_EQ(r.witnesses().size(), CheckReport::kMaxWitnesses);
}

TEST(MultOperators, Examples) {
  const auto [l0, r0] = mult_operators(null_algebra(Q, 2), Vector::basis(Q, 2, 0));
  EXPECT_TRUE(l0.is_zero() && r0.is_zero());
  const Algebra d = truncated_poly(F2, 2);
  const auto [lz, rz] = mult_operators(d, Vector(F2, 2));
  EXPECT_TRUE(lz.is_zero() && rz.is_zero());
  const auto [lx, rx] = mult_operators(d, d.basis(1));
  const Matrix expected = make_matrix(F2, 2, 2, {0, 0, 1, 0});
  EXPECT_EQ(lx, expected);
  EXPECT_EQ(rx, expected);
}

TEST(MultOperators, HomomorphismProperties) {
  for (const Field& f : {F2, Field::prime(3)})
    for (const Algebra& a : associative_algebras(f, 2))
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          const Vector ab = a.mul_basis(i, j);
          EXPECT_EQ(a.left(ab), a.left(i) * a.left(j));
          EXPECT_EQ(a.right(ab), a.right(j) * a.right(i));
        }
}

TEST(Coassociativity, Examples) {
  EXPECT_TRUE(check_coassociativity(Coalgebra(Q, 3)).passed());
  EXPECT_TRUE(check_coassociativity(dualize_algebra(truncated_poly(Q, 3))).passed());
  EXPECT_FALSE(check_coassociativity(dualize_algebra(nonassociative_example(Q))).passed());
}

TEST(Dualize, Examples) {
  EXPECT_TRUE(dualize(Coalgebra(Q, 2)).is_zero());
  const Algebra a = upper_triangular(Q);
  EXPECT_EQ(dualize(dualize_algebra(a)), a);
  Coalgebra c(Q, 1);
  c.d(0, 0, 0) = Q.one();
  EXPECT_EQ(dualize(c), unit_algebra(Q));
}

TEST(Dualize, RoundTripOnCorpus) {
  for (const Algebra& a : associative_algebras(F2, 2)) {
    EXPECT_EQ(dualize(dualize_algebra(a)), a);
    EXPECT_TRUE(check_coassociativity(dualize_algebra(a)).passed());
  }
}

TEST(DirectSum, Examples) {
  const Algebra kk = direct_sum(unit_algebra(Q), unit_algebra(Q));
  EXPECT_EQ(kk, make_algebra(Q, 2, {{1, 1, 1, 1}, {2, 2, 2, 1}}));
  const Algebra a = truncated_poly(Q, 2);
  EXPECT_EQ(direct_sum(a, Algebra(Q, 0)), a);
  EXPECT_RB_ERROR(direct_sum(a, unit_algebra(F2)), ErrorKind::FieldMismatch);
}

TEST(DirectSum, AssociativeIffBothSummandsAre) {
  const std::vector<Algebra> samples = {unit_algebra(Q), truncated_poly(Q, 2), nonassociative_example(Q),
                                        null_algebra(Q, 1)};
  for (const Algebra& a : samples)
    for (const Algebra& b : samples)
      EXPECT_EQ(check_associativity(direct_sum(a, b)).passed(),
                check_associativity(a).passed() && check_associativity(b).passed());
}

TEST(Bimodule, Examples) {
  for (const Algebra& a : associative_algebras(F2, 2)) {
    EXPECT_TRUE(check_bimodule(a, Representation::adjoint(a)).passed());
    EXPECT_TRUE(check_bimodule(a, Representation::zero(F2, 2, 3)).passed());
    EXPECT_TRUE(check_bimodule(a, left_only(a)).passed());
    EXPECT_TRUE(check_bimodule(a, right_only(a)).passed());
  }
}

TEST(Bimodule, DetectsBrokenAction) {
  const Algebra a = unit_algebra(Q);
  Representation v = Representation::adjoint(a);
  v.ell[0](0, 0) = Q.from_int(2);
  EXPECT_FALSE(check_bimodule(a, v).passed());
}

TEST(DualBimodule, Examples) {
  const Algebra a = upper_triangular(Q);
  const Representation adj = Representation::adjoint(a);
  const Representation d = dual_bimodule(a, adj);
  EXPECT_TRUE(check_bimodule(a, d).passed());
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(d.ell[i], transpose(adj.right[i]));
    EXPECT_EQ(d.right[i], transpose(adj.ell[i]));
  }
  const Representation z = dual_bimodule(a, Representation::zero(Q, 3, 2));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(z.ell[i].is_zero() && z.right[i].is_zero());
  const Representation dd = dual_bimodule(a, d);
  EXPECT_EQ(dd.ell, adj.ell);
  EXPECT_EQ(dd.right, adj.right);
}

TEST(DualBimodule, RejectsNonBimodule) {
  const Algebra a = unit_algebra(Q);
  Representation v = Representation::adjoint(a);
  v.right[0](0, 0) = Q.from_int(3);
  EXPECT_RB_ERROR(dual_bimodule(a, v), ErrorKind::NotABimodule);
}

TEST(Symmetry, DeclaredFlagIsChecked) {
  BilinearForm b{make_matrix(Q, 2, 2, {1, 2, 3, 4}), Symmetry::Symmetric};
  EXPECT_FALSE(check_symmetry(b).passed());
  b.symmetry = Symmetry::None;
  EXPECT_TRUE(check_symmetry(b).passed());
  BilinearForm w{make_matrix(Q, 2, 2, {0, 1, -1, 0}), Symmetry::Antisymmetric};
  EXPECT_TRUE(check_symmetry(w).passed());
}

}  // namespace
}  // namespace rb
