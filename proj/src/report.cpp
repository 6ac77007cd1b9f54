#include "rb/report.hpp"

namespace rb {

bool CheckReport::passed() const {
  if (failures_ != 0) return false;
  for (const auto& p : parts_)
    if (!p.passed()) return false;
  return true;
}

std::size_t CheckReport::total_failures() const {
  std::size_t n = failures_;
  for (const auto& p : parts_) n += p.total_failures();
  return n;
}

const CheckReport* CheckReport::part(const std::string& name) const {
  for (const auto& p : parts_)
    if (p.name() == name) return &p;
  return nullptr;
}

void CheckReport::fail(std::string condition, std::vector<std::size_t> indices, std::string residual) {
  ++failures_;
  if (witnesses_.size() < kMaxWitnesses)
    witnesses_.push_back({std::move(condition), std::move(indices), std::move(residual)});
}

void CheckReport::expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Vector& residual) {
  if (!residual.is_zero()) fail(condition, std::move(indices), residual.to_string());
}

void CheckReport::expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Matrix& residual) {
  if (!residual.is_zero()) fail(condition, std::move(indices), residual.to_string());
}

void CheckReport::expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Tensor2& residual) {
  if (!residual.is_zero()) fail(condition, std::move(indices), residual.to_string());
}

void CheckReport::expect_zero(const std::string& condition, std::vector<std::size_t> indices, const Tensor3& residual) {
  if (!residual.is_zero()) fail(condition, std::move(indices), residual.to_string());
}

void CheckReport::expect(bool ok, const std::string& condition, std::string detail) {
  if (!ok) fail(condition, {}, std::move(detail));
}

CheckReport& CheckReport::add(CheckReport part) {
  parts_.push_back(std::move(part));
  return parts_.back();
}

void CheckReport::write(std::string& out, int depth) const {
  out.append(2 * depth, ' ');
  out += name_ + ": " + (passed() ? "pass" : "FAIL");
  if (failures_) out += " (" + std::to_string(failures_) + " failing)";
  out += '\n';
  for (const auto& w : witnesses_) {
    out.append(2 * depth + 2, ' ');
    out += w.condition;
    if (!w.indices.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) out += (i ? "," : "") + std::to_string(w.indices[i] + 1);
      out += ')';
    }
    if (!w.residual.empty()) out += ": " + w.residual;
    out += '\n';
  }
  for (const auto& p : parts_) p.write(out, depth + 1);
}

std::string CheckReport::to_string() const {
  std::string out;
  write(out, 0);
  return out;
}

std::vector<bool> EquivalenceReport::verdicts() const {
  std::vector<bool> v;
  for (const auto& r : reports_) v.push_back(r.passed());
  return v;
}

bool EquivalenceReport::consistent() const {
  for (const auto& r : reports_)
    if (r.passed() != reports_.front().passed()) return false;
  return true;
}

bool EquivalenceReport::all_pass() const {
  for (const auto& r : reports_)
    if (!r.passed()) return false;
  return true;
}

std::string EquivalenceReport::to_string() const {
  std::string out = name_ + ": " + (consistent() ? "consistent" : "INCONSISTENT") + '\n';
  for (const auto& r : reports_) out += "  " + r.name() + ": " + (r.passed() ? "pass" : "fail") + '\n';
  return out;
}

}  // namespace rb
