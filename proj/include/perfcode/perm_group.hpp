#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "perfcode/permutation.hpp"

namespace perfcode {

class PermutationGroup;
class Subgroup;
using GroupPtr = std::shared_ptr<const PermutationGroup>;

inline constexpr std::size_t kDefaultOrderCap = 100000;
inline constexpr std::size_t kDefaultSubgroupEnumBound = 300;

// A finite permutation group, fully enumerated at construction. Elements are
// kept sorted in canonical order (lexicographic on image tables), so groups
// are equal exactly when their element lists are, cosets have well-defined
// minimal representatives, and every algorithm that scans "in canonical
// order" is deterministic.
class PermutationGroup : public std::enable_shared_from_this<PermutationGroup> {
 public:
  // Breadth-first product closure of the generators. Throws BoundError if the
  // element count exceeds order_cap.
  static GroupPtr closure(int degree, std::vector<Permutation> generators,
                          std::size_t order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  Permutation identity() const { return Permutation(degree_); }

 private:
  PermutationGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems)
      : degree_(degree), generators_(std::move(gens)), elements_(std::move(elems)) {}

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// A subgroup of an ambient PermutationGroup, stored as its full sorted element
// list plus a handle on the ambient group. The ambient group itself is
// represented as the improper subgroup (see whole()); every pairwise operation
// below takes subgroups of one common ambient group, so "is Q a perfect code
// of P" works for any chain Q <= P <= G without re-enumerating P as a group.
class Subgroup {
 public:
  // Sorts the elements and verifies they form a subgroup-shaped subset of the
  // parent: nonempty, inside the parent, identity present, inverse-closed.
  // (Product closure is guaranteed by the factories that build subgroups.)
  Subgroup(GroupPtr parent, std::vector<Permutation> elements);

  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  int degree() const { return parent_->degree(); }
  bool contains(const Permutation& p) const;
  bool is_subset_of(const Subgroup& other) const;
  Permutation identity() const { return Permutation(parent_->degree()); }

  bool operator==(const Subgroup& rhs) const {
    return parent_ == rhs.parent_ && elements_ == rhs.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Permutation> elements_;
};

// The group viewed as a subgroup of itself.
Subgroup whole(const GroupPtr& g);

// ⟨seed⟩ inside the ambient subgroup. Throws SemanticError if a seed element
// lies outside the ambient; the empty seed yields the trivial subgroup.
Subgroup generated_subgroup(const Subgroup& ambient, std::span<const Permutation> seed);
Subgroup generated_subgroup(const GroupPtr& group, std::span<const Permutation> seed);

// Left cosets gH partitioning G, in canonical order of their minimal
// representatives; each coset is sorted, so front() is its representative.
std::vector<std::vector<Permutation>> left_cosets(const Subgroup& G, const Subgroup& H);
std::size_t index(const Subgroup& G, const Subgroup& H);  // |G| / |H|

// {g·h·g⁻¹ : h ∈ H} — the subgroup H with points relabeled through g.
Subgroup conjugate_subgroup(const Subgroup& G, const Subgroup& H, const Permutation& g);

// {g ∈ G : g H g⁻¹ = H}.
Subgroup normalizer(const Subgroup& G, const Subgroup& H);

bool is_normal(const Subgroup& G, const Subgroup& H);

// Deterministic Sylow p-subgroup: start from ⟨x⟩ for the canonically first
// element of order p, then repeatedly adjoin the canonically first p-element
// of N_G(Q) \ Q whose adjunction still generates a p-group, until the full
// p-part of |G| is reached. Throws SemanticError unless p is prime.
Subgroup sylow(const Subgroup& G, int p);

// Same extension loop seeded at a given p-subgroup; returns a Sylow
// p-subgroup containing it. Throws SemanticError if q0 is not a p-group.
Subgroup sylow_containing(const Subgroup& G, int p, const Subgroup& q0);

// Every subgroup of G exactly once: all cyclic subgroups, closed under
// pairwise join, sorted by (order, element list). Throws BoundError when
// |G| exceeds the bound.
std::vector<Subgroup> all_subgroups(const Subgroup& G,
                                    std::size_t bound = kDefaultSubgroupEnumBound);

namespace detail {
// Enumeration core with an explicit seeding order over G's elements; exposed
// so tests can confirm the subgroup list does not depend on join order.
std::vector<Subgroup> all_subgroups_seeded(const Subgroup& G, std::size_t bound,
                                           std::span<const Permutation> seed_order);
}  // namespace detail

bool is_abelian(const Subgroup& H);
bool is_cyclic(const Subgroup& H);  // some element has order |H|

// Abelian with every non-identity element of one fixed prime order; the
// trivial subgroup counts.
bool is_elementary_abelian(const Subgroup& H);

// |H| = 2m (m >= 1) with a cyclic subgroup C of order m and an involution
// t outside C inverting C pointwise. The Klein four group (m = 2) counts; so
// does the order-2 group (m = 1), where the condition is vacuous.
bool is_dihedral(const Subgroup& H);

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t two_part(std::uint64_t n);  // largest power of 2 dividing n
bool is_prime(std::uint64_t n);
bool is_power_of(std::uint64_t n, std::uint64_t p);

// Greedy small generating set (diagnostics and compact printing).
std::vector<Permutation> small_generating_set(const Subgroup& H);
std::string describe_subgroup(const Subgroup& H);

}  // namespace perfcode
