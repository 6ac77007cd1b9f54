#include "rb/search.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <utility>

#include "rb/error.hpp"
#include "rb/rota_baxter.hpp"

namespace rb {

namespace {

// Free slots of an antisymmetric tensor, with the mirrored slot set to the negative.
std::vector<std::pair<std::size_t, std::size_t>> antisymmetric_slots(const Field& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (i != j || f.characteristic() == 2) slots.emplace_back(i, j);
  return slots;
}

std::vector<Scalar> digits(const std::vector<Scalar>& elements, std::uint64_t index, std::size_t count) {
  const std::uint64_t p = elements.size();
  std::vector<Scalar> out(count);
  for (std::size_t k = count; k-- > 0;) {
    out[k] = elements[index % p];
    index /= p;
  }
  return out;
}

template <class T>
std::vector<T> sharded(std::uint64_t total, unsigned threads,
                       const std::function<std::optional<T>(std::uint64_t)>& candidate) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::vector<std::vector<T>> shards(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned s) {
    try {
      const std::uint64_t begin = total * s / threads, end = total * (s + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i)
        if (auto hit = candidate(i)) shards[s].push_back(std::move(*hit));
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < threads; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  for (auto& s : shards)
    for (auto& x : s) out.push_back(std::move(x));
  return out;
}

std::uint64_t require_budget(const Field& f, std::size_t free, std::uint64_t budget) {
  if (!f.is_prime()) throw Error(ErrorKind::InvalidArgument, "search needs a prime field");
  std::uint64_t total = candidate_count(f.characteristic(), free, budget);
  if (total > budget)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(f.characteristic()) + "^" + std::to_string(free) +
                                               " candidates exceed the budget " + std::to_string(budget));
  return total;
}

}  // namespace

std::uint64_t candidate_count(std::uint32_t p, std::size_t free_entries, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free_entries; ++k) {
    if (total > budget / p) return budget + 1;
    total *= p;
  }
  return total;
}

std::vector<Matrix> search_rb_operators(const Algebra& a, const Scalar& weight, std::uint64_t budget,
                                        unsigned threads) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t total = require_budget(f, n * n, budget);
  const std::vector<Scalar> elements = f.elements();
  return sharded<Matrix>(total, threads, [&](std::uint64_t index) -> std::optional<Matrix> {
    std::vector<Scalar> d = digits(elements, index, n * n);
    Matrix P(f, n, n);
    for (std::size_t k = 0; k < n * n; ++k) P(k / n, k % n) = d[k];
    if (check_rb_algebra(a, P, weight).passed()) return P;
    return std::nullopt;
  });
}

std::vector<RElement> antisymmetric_tensors(const Field& field, std::size_t dim, std::uint64_t budget) {
  const auto slots = antisymmetric_slots(field, dim);
  const std::uint64_t total = require_budget(field, slots.size(), budget);
  const std::vector<Scalar> elements = field.elements();
  std::vector<RElement> out;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::vector<Scalar> d = digits(elements, index, slots.size());
    RElement r(field, dim);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      r(i, j) = d[k];
      if (i != j) r(j, i) = -d[k];
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RElement> search_antisym_aybe(const Algebra& a, std::uint64_t budget, unsigned threads) {
  const std::vector<RElement> all = antisymmetric_tensors(a.field(), a.dim(), budget);
  return sharded<RElement>(all.size(), threads, [&](std::uint64_t index) -> std::optional<RElement> {
    if (aybe_residual(a, all[index]).is_zero()) return all[index];
    return std::nullopt;
  });
}

}  // namespace rb
