#pragma once

#include <vector>

#include "perfcode/perm_group.hpp"
#include "perfcode/permutation.hpp"

namespace perfcode {

// One double coset H·x·H inside an ambient group, as a sorted element list.
// The representative is the canonically minimal element, and the number of
// left cosets of H inside the double coset is |elements| / |H|, which equals
// the index |H : H ∩ xHx⁻¹|.
struct DoubleCoset {
  Subgroup subgroup_h;
  Permutation representative;
  std::vector<Permutation> elements;
  std::size_t left_coset_count;

  bool contains(const Permutation& p) const;
  bool inverse_closed() const;       // D == D⁻¹ (equivalently: rep⁻¹ ∈ D)
  bool contains_involution() const;  // some element of order exactly 2
};

// The double coset of a single element x (x need not avoid H).
DoubleCoset double_coset_of(const Subgroup& G, const Subgroup& H, const Permutation& x);

// All double cosets HxH partitioning G, ordered by their canonically minimal
// representatives; the first entry is always H itself.
std::vector<DoubleCoset> double_coset_decomposition(const Subgroup& G, const Subgroup& H);

}  // namespace perfcode
