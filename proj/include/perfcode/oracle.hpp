#pragma once

#include <optional>
#include <vector>

#include "perfcode/perm_group.hpp"

namespace perfcode {

inline constexpr std::size_t kDefaultOracleIndexBound = 24;
inline constexpr std::size_t kDefaultOracleGroupBound = 48;

// An inverse-closed, identity-free subset of an ambient group: the edge set
// descriptor of a Cayley graph on that group.
class ConnectionSet {
 public:
  // Sorts, deduplicates, and validates: every element in the parent, no
  // identity, closed under inverse (SemanticError otherwise). The empty set
  // is valid and describes the edgeless graph.
  ConnectionSet(GroupPtr parent, std::vector<Permutation> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

 private:
  GroupPtr parent_;
  std::vector<Permutation> elements_;
};

// Definition-level check: is C a perfect code of Cay(G, S)? C must be an
// independent set and every vertex outside C must have exactly one neighbor
// in C, where x ~ y iff y·x⁻¹ ∈ S. Throws SemanticError when C or S leaves G.
bool cayley_perfect_code_check(const Subgroup& G, const ConnectionSet& S,
                               const std::vector<Permutation>& C);

// Searches for an inverse-closed S that makes H a perfect code of Cay(G, S):
// equivalently S ∪ {1} must be a left transversal of H in G. Backtracks over
// the nontrivial left cosets in canonical order, trying involutions first
// inside each coset and propagating the forced partner choice s⁻¹ for the
// coset s⁻¹H. Feasible only at desk scale, so it requires |G:H| within
// index_bound or |G| within group_bound (BoundError otherwise). Returns the
// first admissible set found, deterministically, or nothing.
std::optional<ConnectionSet> find_admissible_connection_set(
    const Subgroup& G, const Subgroup& H,
    std::size_t index_bound = kDefaultOracleIndexBound,
    std::size_t group_bound = kDefaultOracleGroupBound);

// Checks that S is a valid connection set for G and that H is a perfect code
// of Cay(G, S). Never throws: any malformed input simply yields false.
bool verify_witness(const Subgroup& G, const Subgroup& H,
                    const std::vector<Permutation>& S);

}  // namespace perfcode
