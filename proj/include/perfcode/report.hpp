#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "perfcode/group_spec.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/verify.hpp"

namespace perfcode {

// Assembled results behind each CLI command, decoupled from rendering so the
// JSON and text forms are guaranteed to speak about the same data.  Every
// JSON document carries "schema": 1 and a "timing_ms" field; all other fields
// are deterministic functions of the invocation.

inline constexpr int kReportSchemaVersion = 1;

struct CheckOutcome {
  GroupSpec spec;
  std::string subgroup_input;  // the --subgroup argument as given
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  PerfectCodeReport report;
  std::set<std::string> shortcuts;
  std::optional<std::string> psl_case;  // only for psl2 groups with q = ±1 mod 8
  bool want_witness = false;

  bool cross_checked = false;
  bool basic_agrees = true;              // double-coset criterion vs full decision
  bool oracle_skipped = false;           // search out of bounds
  std::optional<bool> oracle_found;      // set when the search ran
  std::vector<Permutation> oracle_set;   // found connection set (may be empty)

  std::int64_t timing_ms = 0;

  // True when no cross-check disagreement occurred (drives the exit code).
  bool consistent() const {
    return basic_agrees && (!oracle_found || *oracle_found == report.is_perfect_code);
  }
};

struct SampleRow {
  std::string generator;  // cycle string of the generating element
  std::size_t order = 0;
  bool is_perfect_code = false;
  std::string path;
  std::optional<std::string> psl_case;
  std::optional<bool> classification_agrees;
};

struct SampleOutcome {
  GroupSpec spec;
  std::size_t group_order = 0;
  std::vector<SampleRow> rows;
  std::int64_t timing_ms = 0;

  bool consistent() const {
    for (const SampleRow& row : rows)
      if (row.classification_agrees && !*row.classification_agrees) return false;
    return true;
  }
};

struct GroupInfoOutcome {
  GroupSpec spec;
  std::size_t order = 0;
  int degree = 0;
  std::uint64_t two_part_of_order = 1;
  std::size_t sylow2_order = 1;
  bool sylow2_cyclic = false;
  bool sylow2_dihedral = false;
  bool sylow2_elementary_abelian = false;
  bool sylow2_abelian = false;
  bool abelian = false;
  bool every_subgroup_perfect_code = false;
  std::vector<std::string> generators;
  // Populated for projective groups only: the order of the defining field and
  // its monic modulus polynomial as a coefficient list, constant term first.
  std::optional<std::uint64_t> field_order;
  std::vector<int> field_modulus;
  std::int64_t timing_ms = 0;
};

struct VerifyOutcome {
  SuiteResult result;
  std::int64_t timing_ms = 0;
};

nlohmann::json check_json(const CheckOutcome& outcome);
std::string check_text(const CheckOutcome& outcome);

nlohmann::json sample_json(const SampleOutcome& outcome);
std::string sample_text(const SampleOutcome& outcome);

nlohmann::json group_info_json(const GroupInfoOutcome& outcome);
std::string group_info_text(const GroupInfoOutcome& outcome);

nlohmann::json verify_json(const VerifyOutcome& outcome);
std::string verify_text(const VerifyOutcome& outcome);

}  // namespace perfcode
