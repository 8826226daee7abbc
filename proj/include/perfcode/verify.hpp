#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/oracle.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/perm_group.hpp"

namespace perfcode {

// Knobs for the verification suites.  max_order filters which corpus groups
// get their full subgroup lattice swept; the fixed S6 example pairs and the
// PSL(2,q) parameter lists are constant-size and always run.
struct SuiteOptions {
  std::size_t max_order = 120;
  std::size_t oracle_index_bound = kDefaultOracleIndexBound;
  std::size_t oracle_group_bound = kDefaultOracleGroupBound;
  std::uint32_t seed = 12345;       // sampling seed for the psl suite
  std::size_t sample_count = 200;   // sampled 2-generated subgroups per large q
};

struct SuiteResult {
  std::string suite;
  std::vector<std::string> lines;     // one per ambient group: coverage summary
  std::size_t checked = 0;            // individual property evaluations
  std::vector<std::string> failures;  // counterexamples, with full witnesses
  bool ok() const { return failures.empty(); }
};

// The suite registry, in canonical output order:
//   sl2                three-way equivalence: H, every Sylow 2-subgroup of H,
//                      and some Sylow 2-subgroup of H agree on perfect-code
//                      status in G
//   ngq                full decision == double-coset decision on the reduced
//                      pair (P, Q), plus witness-structure validation
//   sub                a perfect code of G is a perfect code of every
//                      intermediate subgroup
//   conjugate          perfect-code status is conjugation-invariant, and found
//                      connection sets transport along conjugation
//   ns                 if some Sylow 2-subgroup of H is a perfect code of G
//                      then so is H
//   ele                every_subgroup_is_perfect_code agrees with the
//                      exhaustive per-subgroup sweep
//   oracle-equivalence search for an admissible connection set succeeds
//                      exactly when the double-coset criterion says it must
//   psl                PSL(2,q) classification agrees with the checker;
//                      q even or q = ±3 mod 8 makes every subgroup a code
const std::vector<std::string>& suite_names();

// Runs one suite over the built-in corpus.  Throws ParseError on an unknown
// suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

// Acceptance sweeps that are not CLI suites: agreement of the two square-root
// criteria with the double-coset decision wherever their hypotheses hold, and
// soundness of every witness attached to a false verdict.
SuiteResult run_square_root_agreement_sweep(const SuiteOptions& options = {});
SuiteResult run_witness_soundness_sweep(const SuiteOptions& options = {});

// Structural validation of a decision report for (G, H): a true verdict must
// carry no witness; a false verdict's witness must lie outside H and generate
// an inverse-closed, involution-free double coset covering an odd number of
// left cosets.  Returns a description of the first violation, or nothing.
std::optional<std::string> validate_report(const Subgroup& G, const Subgroup& H,
                                           const PerfectCodeReport& report);

// All distinct subgroups <g> for g in G, sorted by (order, element list).
std::vector<Subgroup> distinct_cyclic_subgroups(const Subgroup& G);

}  // namespace perfcode
