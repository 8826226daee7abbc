#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perfcode/perm_group.hpp"

namespace perfcode {

// One prebuilt test-corpus group, identified by its spec token.
struct CorpusEntry {
  std::string token;
  GroupPtr group;
};

// Small groups (order <= 120) used by the verification suites: symmetric and
// alternating groups, cyclic and dihedral families, and the quaternion group
// of order 8 in its regular representation.  Built once and cached.
const std::vector<CorpusEntry>& builtin_corpus();

// Full subgroup list of a corpus group, computed once per group and cached.
// Safe to call with any group, but only corpus groups benefit from caching
// across calls.
const std::vector<Subgroup>& cached_subgroups(const GroupPtr& g);

// A worked example inside S6: H = <(1 2)(3 5), (3 4 5)> has order 6 with
// Sylow 2-subgroup Q = <(1 2)(3 5)>, and P = <(1 2), (3 5), (3 4 5 6)> is a
// Sylow 2-subgroup of S6 containing Q.  Q is a perfect code of P (it has the
// complement <(1 2), (3 4 5 6)> there), yet neither Q nor H is a perfect code
// of S6 itself — x = (1 3 2 5) normalizes Q, has x² in Q, and xQ contains no
// involution.  So testing Q inside a Sylow 2-subgroup of the whole group
// proves nothing; the decisive ambient group is the normalizer of Q.
struct S6ReductionExample {
  GroupPtr g;
  Subgroup h;
  Subgroup q;
  Subgroup p;
};
const S6ReductionExample& s6_example();

// Prime powers q for which the PSL(2,q) suites run the full subgroup or
// sampling sweeps, and the larger list used only for order checks.
const std::vector<std::uint64_t>& psl_suite_parameters();
const std::vector<std::uint64_t>& psl_order_check_parameters();

}  // namespace perfcode
