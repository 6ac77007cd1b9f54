#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rb/tensor.hpp"

namespace rb {

/// One failing index tuple. Indices are 0-based; printing is 1-based.
struct Witness {
  std::string condition;
  std::vector<std::size_t> indices;
  std::string residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a checker. Keeps the first kMaxWitnesses failures and a total
/// count; composite checks keep their sub-reports and fail iff any part fails.
class CheckReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 16;

  explicit CheckReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  bool passed() const;
  /// Failures recorded directly on this report.
  std::size_t failures() const noexcept { return failures_; }
  /// Failures including all sub-reports.
  std::size_t total_failures() const;
  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }
  const std::vector<CheckReport>& parts() const noexcept { return parts_; }
  /// Sub-report by name, or nullptr.
  const CheckReport* part(const std::string& name) const;

  void fail(std::string condition, std::vector<std::size_t> indices, std::string residual);
  /// Records a failure unless the residual is zero.
  void expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Vector& residual);
  void expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Matrix& residual);
  void expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Tensor2& residual);
  void expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Tensor3& residual);
  void expect(bool ok, const std::string& condition, std::string detail = {});
  CheckReport& add(CheckReport part);

  /// Indented multi-line summary with witnesses.
  std::string to_string() const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;

 private:
  void write(std::string& out, int depth) const;

  std::string name_;
  std::size_t failures_ = 0;
  std::vector<Witness> witnesses_;
  std::vector<CheckReport> parts_;
};

/// Verdicts of several conditions a theorem asserts to be equivalent.
class EquivalenceReport {
 public:
  explicit EquivalenceReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void add(CheckReport report) { reports_.push_back(std::move(report)); }
  const std::vector<CheckReport>& reports() const noexcept { return reports_; }
  std::vector<bool> verdicts() const;
  /// All verdicts identical.
  bool consistent() const;
  /// All verdicts pass.
  bool all_pass() const;
  std::string to_string() const;

 private:
  std::string name_;
  std::vector<CheckReport> reports_;
};

}  // namespace rb
