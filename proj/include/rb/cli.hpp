#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rb/report.hpp"
#include "rb/structure_file.hpp"

namespace rb::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kError = 2;

std::vector<std::string> check_names();
std::vector<std::string> construction_names();

/// Runs a named check on a named object. Throws UnknownCheck, KindMismatch.
CheckReport run_check(const StructureFile& s, const std::string& object, const std::string& check);

struct Derived {
  StructureFile file;
  /// Names of the certificates attached to file.
  std::vector<std::string> certificates;
  bool all_pass() const;
};

/// Input objects followed by the derived objects and their certificates. Acts on
/// the named bundle, or the first bundle of an accepted kind.
Derived derive(const std::string& construction, const StructureFile& s,
               const std::optional<std::string>& object = std::nullopt);

/// Flag, then RB_BUDGET, then the default. Throws InvalidArgument on a malformed value.
std::uint64_t resolve_budget(const std::optional<std::string>& flag, const char* env);

/// Base algebra, the hits and a search-result bundle.
StructureFile search(const std::string& space, const StructureFile& s, const std::string& weight,
                     std::uint64_t budget, const std::optional<std::string>& object = std::nullopt,
                     unsigned threads = 0);

struct CertificateStatus {
  std::string name;
  const Certificate* certificate;
  bool digest_matches;
  bool reproduced;
};

/// Re-runs every certificate against the file.
std::vector<CertificateStatus> verify_certificates(const StructureFile& s);

int cmd_check(const std::string& path, const std::string& object, const std::string& check, std::ostream& out,
              std::ostream& err);
int cmd_derive(const std::string& construction, const std::string& path, const std::optional<std::string>& out_path,
               const std::optional<std::string>& object, std::ostream& out, std::ostream& err);
int cmd_search(const std::string& space, const std::string& path, const std::string& weight,
               const std::optional<std::string>& budget, const std::optional<std::string>& object,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);
int cmd_report(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace rb::cli
