#include "perfcode/double_coset.hpp"

#include <algorithm>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

void require_pair(const Subgroup& g, const Subgroup& h, const char* op) {
  if (g.parent() != h.parent())
    throw SemanticError(std::string(op) + ": subgroups have different ambient groups");
  if (!h.is_subset_of(g))
    throw SemanticError(std::string(op) + ": second argument is not contained in the first");
}

// HxH as a sorted list. A double coset is a disjoint union of left cosets
// h·x·H, so expanding each fresh coset keeps the cost linear in |HxH|.
std::vector<Permutation> expand(const Subgroup& H, const Permutation& x) {
  std::vector<Permutation> elems;
  for (const auto& h1 : H.elements()) {
    const Permutation y = h1 * x;
    if (std::binary_search(elems.begin(), elems.end(), y)) continue;
    std::vector<Permutation> coset;
    coset.reserve(H.order());
    for (const auto& h2 : H.elements()) coset.push_back(y * h2);
    elems.insert(elems.end(), coset.begin(), coset.end());
    std::sort(elems.begin(), elems.end());
  }
  return elems;
}

}  // namespace

bool DoubleCoset::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool DoubleCoset::inverse_closed() const { return contains(representative.inverse()); }

bool DoubleCoset::contains_involution() const {
  for (const auto& e : elements)
    if (is_involution(e)) return true;
  return false;
}

DoubleCoset double_coset_of(const Subgroup& G, const Subgroup& H, const Permutation& x) {
  require_pair(G, H, "double_coset_of");
  if (!G.contains(x)) throw SemanticError("double_coset_of: element outside the group");
  auto elems = expand(H, x);
  const std::size_t count = elems.size() / H.order();
  Permutation rep = elems.front();
  return DoubleCoset{H, std::move(rep), std::move(elems), count};
}

std::vector<DoubleCoset> double_coset_decomposition(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "double_coset_decomposition");
  const auto& g_elems = G.elements();
  std::vector<bool> assigned(g_elems.size(), false);
  std::vector<DoubleCoset> out;
  for (std::size_t i = 0; i < g_elems.size(); ++i) {
    if (assigned[i]) continue;
    auto elems = expand(H, g_elems[i]);
    for (const auto& e : elems) {
      auto it = std::lower_bound(g_elems.begin(), g_elems.end(), e);
      assigned[static_cast<std::size_t>(it - g_elems.begin())] = true;
    }
    const std::size_t count = elems.size() / H.order();
    out.push_back(DoubleCoset{H, g_elems[i], std::move(elems), count});
  }
  return out;
}

}  // namespace perfcode
