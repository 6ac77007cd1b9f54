#pragma once

#include <cstdint>
#include <vector>

#include "rb/algebra.hpp"
#include "rb/yang_baxter.hpp"

namespace rb {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// p^free, or budget + 1 once it exceeds the budget.
std::uint64_t candidate_count(std::uint32_t p, std::size_t free_entries, std::uint64_t budget);

/// All n x n operators P with check_rb_algebra(A, P, weight) passing, in
/// lexicographic order (row-major, first entry most significant). Throws
/// InvalidArgument over Q and BudgetExceeded when p^(n^2) > budget.
std::vector<Matrix> search_rb_operators(const Algebra& a, const Scalar& weight,
                                        std::uint64_t budget = kDefaultBudget, unsigned threads = 0);

/// All antisymmetric r with zero AYBE residual, ordered by their free entries
/// (upper triangle row-major, plus the diagonal in characteristic 2).
std::vector<RElement> search_antisym_aybe(const Algebra& a, std::uint64_t budget = kDefaultBudget,
                                          unsigned threads = 0);

/// Every antisymmetric tensor of the given dimension in the same order.
std::vector<RElement> antisymmetric_tensors(const Field& field, std::size_t dim,
                                            std::uint64_t budget = kDefaultBudget);

}  // namespace rb
