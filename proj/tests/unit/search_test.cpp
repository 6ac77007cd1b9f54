#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/search.hpp"

namespace rb {
namespace {

using namespace testing;

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

// Row-major entries as integers, for ordering comparisons.
std::vector<std::uint32_t> key(const Matrix& m) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(static_cast<std::uint32_t>(std::stoul(m(i, j).to_string())));
  return out;
}

TEST(SearchRB, DualNumbers) {
  const std::vector<Matrix> hits = search_rb_operators(truncated_poly(F2, 2), F2.zero());
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_TRUE(hits[0].is_zero());
  EXPECT_EQ(hits[1], make_matrix(F2, 2, 2, {0, 0, 1, 0}));
}

TEST(SearchRB, UnitAlgebraWeightZero) {
  for (const Field& f : {F2, F3, Field::prime(7)}) {
    const std::vector<Matrix> hits = search_rb_operators(unit_algebra(f), f.zero());
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_TRUE(hits[0].is_zero());
  }
}

TEST(SearchRB, CountsMatchOracle) {
  for (const Field& f : {F2, F3})
    for (const Algebra& a : associative_algebras(f, 2))
      for (const Scalar& w : f.elements()) EXPECT_EQ(search_rb_operators(a, w, kDefaultBudget, 1).size(), oracle_count_rb(a, w));
}

TEST(SearchRB, LexicographicAndThreadIndependent) {
  const Algebra a = upper_triangular(F2);
  for (const Scalar& w : F2.elements()) {
    const std::vector<Matrix> one = search_rb_operators(a, w, kDefaultBudget, 1);
    EXPECT_EQ(one, search_rb_operators(a, w, kDefaultBudget, 4));
    for (std::size_t i = 1; i < one.size(); ++i) EXPECT_LT(key(one[i - 1]), key(one[i]));
    for (const Matrix& P : one) EXPECT_TRUE(oracle_is_rb(a, P, w));
  }
}

TEST(SearchRB, Budget) {
  const Algebra a = truncated_poly(F3, 3);
  EXPECT_RB_ERROR(search_rb_operators(a, F3.zero(), 100), ErrorKind::BudgetExceeded);
  EXPECT_NO_THROW(search_rb_operators(a, F3.zero(), 19683));
  EXPECT_EQ(candidate_count(3, 9, 100), 101u);
  EXPECT_EQ(candidate_count(3, 9, kDefaultBudget), 19683u);
}

TEST(SearchRB, RationalsRejected) {
  EXPECT_RB_ERROR(search_rb_operators(unit_algebra(Q), Q.zero()), ErrorKind::InvalidArgument);
  EXPECT_RB_ERROR(search_antisym_aybe(unit_algebra(Q)), ErrorKind::InvalidArgument);
}

TEST(SearchAYBE, AntisymmetricTensorCounts) {
  EXPECT_EQ(antisymmetric_tensors(F3, 2).size(), 3u);
  EXPECT_EQ(antisymmetric_tensors(F3, 3).size(), 27u);
  // Characteristic 2 admits diagonal entries.
  EXPECT_EQ(antisymmetric_tensors(F2, 2).size(), 8u);
  for (const RElement& r : antisymmetric_tensors(F2, 2)) EXPECT_TRUE(r.is_antisymmetric());
}

TEST(SearchAYBE, MatchesFilteredOracle) {
  for (const Field& f : {F2, F3})
    for (const Algebra& a : associative_algebras(f, 2)) {
      std::vector<RElement> expect;
      for (const RElement& r : antisymmetric_tensors(f, 2))
        if (oracle_aybe(a, r).is_zero()) expect.push_back(r);
      EXPECT_EQ(search_antisym_aybe(a, kDefaultBudget, 1), expect);
      EXPECT_EQ(search_antisym_aybe(a, kDefaultBudget, 3), expect);
    }
}

TEST(SearchAYBE, NullAlgebraAcceptsAll) {
  EXPECT_EQ(search_antisym_aybe(null_algebra(F3, 3)).size(), 27u);
}

}  // namespace
}  // namespace rb
