#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricfano/identity.hpp"
#include "toricfano/polytope_io.hpp"
#include "toricfano/toric_invariants.hpp"

namespace toricfano {

enum class Status { Ok, IdentityViolation, ValidationError, ParseError };

std::string_view to_string(Status s) noexcept;

/// Process exit code: 0 ok, 1 identity violation, 2 parse/validation error.
int exit_code(Status s) noexcept;

struct ValidityFlags {
  std::optional<bool> primitive;
  std::optional<bool> spanning;
  std::optional<bool> reflexive;
  std::optional<bool> smooth;
};

/// Quantities computed in diamond mode that do not need Chern numbers.
struct DiamondSummary {
  std::vector<Integer> chi;
  std::vector<Integer> even_betti;
  std::string e_polynomial;
  Rational lhs;
  Rational defect;
  Rational weighted_chi;
  std::optional<EhxSides> ehx;
};

struct EntryReport {
  std::string source;
  std::string mode;  ///< "toric" or "diamond"
  Status status = Status::Ok;
  std::string error;
  ValidityFlags validity;
  std::optional<ToricInvariants> invariants;
  std::optional<DiamondSummary> diamond;
  std::optional<IdentityReport> identity;
  /// Named exact consistency checks; any false entry is a violation.
  std::map<std::string, bool> checks;
  std::vector<std::string> diagnostics;
};

struct RunReport {
  std::vector<EntryReport> entries;

  std::size_t count(Status s) const;
  /// 2 if any entry failed to parse or validate, else 1 if any identity was
  /// violated, else 0.
  int exit_status() const;
};

struct CheckOptions {
  /// Treat polytope files as the anticanonical polytope in M.
  bool dual = false;
  /// Force diamond mode regardless of content sniffing.
  bool diamond = false;
};

/// Full toric pipeline: validate, dualize, enumerate faces, compute
/// invariants and run every identity check.
EntryReport check_polytope(const FanoPolytope& p, const std::string& source);
/// Same, starting from raw file data (so validity flags can be reported for
/// inputs that are not valid Fano polytopes).
EntryReport check_polytope_data(const PolytopeData& data, const std::string& source, bool dual);
EntryReport check_diamond(const DiamondFile& file, const std::string& source);

EntryReport check_file(const std::filesystem::path& path, const CheckOptions& options = {});
RunReport run_check(const std::filesystem::path& path, const CheckOptions& options = {});

/// Expands directories (non-recursively, sorted) into their regular files.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::filesystem::path>& inputs);

/// Checks every file; `jobs` > 1 runs on a worker pool. Entry order always
/// follows the expanded input order.
RunReport run_batch(const std::vector<std::filesystem::path>& inputs, unsigned jobs = 1);

nlohmann::json to_json(const EntryReport& entry);
nlohmann::json to_json(const RunReport& report);
std::string to_text(const RunReport& report);

}  // namespace toricfano
