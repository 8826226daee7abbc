#include "perfcode/oracle.hpp"

#include <algorithm>
#include <map>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

void require_pair(const Subgroup& g, const Subgroup& h, const char* op) {
  if (g.parent() != h.parent())
    throw SemanticError(std::string(op) + ": subgroups have different ambient groups");
  if (!h.is_subset_of(g))
    throw SemanticError(std::string(op) + ": second argument is not contained in the first");
}

}  // namespace

ConnectionSet::ConnectionSet(GroupPtr parent, std::vector<Permutation> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw SemanticError("connection set requires an ambient group");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& s : elements_) {
    if (!parent_->contains(s))
      throw SemanticError("connection set element outside the ambient group");
    if (s.is_identity()) throw SemanticError("connection set may not contain the identity");
    if (!std::binary_search(elements_.begin(), elements_.end(), s.inverse()))
      throw SemanticError("connection set is not inverse-closed");
  }
}

bool ConnectionSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool cayley_perfect_code_check(const Subgroup& G, const ConnectionSet& S,
                               const std::vector<Permutation>& C) {
  for (const auto& c : C)
    if (!G.contains(c)) throw SemanticError("cayley_perfect_code_check: C leaves the group");
  for (const auto& s : S.elements())
    if (!G.contains(s)) throw SemanticError("cayley_perfect_code_check: S leaves the group");

  std::vector<Permutation> code = C;
  std::sort(code.begin(), code.end());
  code.erase(std::unique(code.begin(), code.end()), code.end());
  const auto in_code = [&](const Permutation& p) {
    return std::binary_search(code.begin(), code.end(), p);
  };

  // Independence: no edge inside C. The neighbors of v are exactly S·v.
  for (const auto& c : code)
    for (const auto& s : S.elements())
      if (in_code(s * c)) return false;

  // Every outside vertex has exactly one neighbor in C.
  for (const auto& v : G.elements()) {
    if (in_code(v)) continue;
    int neighbors = 0;
    for (const auto& s : S.elements()) {
      if (in_code(s * v) && ++neighbors > 1) break;
    }
    if (neighbors != 1) return false;
  }
  return true;
}

namespace {

struct TransversalSearch {
  // Cosets in canonical-representative order; cosets[0..] exclude H itself.
  std::vector<std::vector<Permutation>> cosets;
  std::map<Permutation, std::size_t> coset_of;  // element -> coset position
  std::vector<std::optional<Permutation>> chosen;
  std::vector<std::vector<Permutation>> candidates;  // involutions first

  bool solve(std::size_t i) {
    while (i < cosets.size() && chosen[i].has_value()) ++i;
    if (i == cosets.size()) return true;
    for (const auto& s : candidates[i]) {
      const Permutation s_inv = s.inverse();
      if (s == s_inv) {  // involution: self-paired
        chosen[i] = s;
        if (solve(i + 1)) return true;
        chosen[i].reset();
        continue;
      }
      const std::size_t j = coset_of.at(s_inv);
      if (j == i) continue;  // s and s⁻¹ share a coset but differ: impossible
      if (chosen[j].has_value()) continue;  // partner coset already settled differently
      chosen[i] = s;
      chosen[j] = s_inv;
      if (solve(i + 1)) return true;
      chosen[i].reset();
      chosen[j].reset();
    }
    return false;
  }
};

}  // namespace

std::optional<ConnectionSet> find_admissible_connection_set(const Subgroup& G,
                                                            const Subgroup& H,
                                                            std::size_t index_bound,
                                                            std::size_t group_bound) {
  require_pair(G, H, "find_admissible_connection_set");
  const std::size_t idx = index(G, H);
  if (idx > index_bound && G.order() > group_bound)
    throw BoundError("find_admissible_connection_set: index " + std::to_string(idx) +
                     " and order " + std::to_string(G.order()) +
                     " both exceed the feasibility bounds");

  TransversalSearch search;
  for (auto& coset : left_cosets(G, H)) {
    if (H.contains(coset.front())) continue;  // skip H itself
    search.cosets.push_back(std::move(coset));
  }
  for (std::size_t i = 0; i < search.cosets.size(); ++i)
    for (const auto& e : search.cosets[i]) search.coset_of.emplace(e, i);
  search.chosen.assign(search.cosets.size(), std::nullopt);
  search.candidates.resize(search.cosets.size());
  for (std::size_t i = 0; i < search.cosets.size(); ++i) {
    auto& cand = search.candidates[i];
    for (const auto& e : search.cosets[i])
      if (is_involution(e)) cand.push_back(e);
    for (const auto& e : search.cosets[i])
      if (!is_involution(e)) cand.push_back(e);
  }

  if (!search.solve(0)) return std::nullopt;
  std::vector<Permutation> s_elems;
  s_elems.reserve(search.chosen.size());
  for (const auto& c : search.chosen) s_elems.push_back(*c);
  return ConnectionSet(G.parent(), std::move(s_elems));
}

bool verify_witness(const Subgroup& G, const Subgroup& H,
                    const std::vector<Permutation>& S) {
  if (G.parent() != H.parent() || !H.is_subset_of(G)) return false;

  // S must be a valid connection set drawn from G.
  std::vector<Permutation> s_sorted = S;
  std::sort(s_sorted.begin(), s_sorted.end());
  s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());
  if (s_sorted.size() != S.size()) return false;
  for (const auto& s : s_sorted) {
    if (s.degree() != G.degree() || !G.contains(s)) return false;
    if (s.is_identity()) return false;
    if (!std::binary_search(s_sorted.begin(), s_sorted.end(), s.inverse())) return false;
  }

  // S ∪ {1} must pick exactly one element from every left coset of H.
  if (s_sorted.size() + 1 != index(G, H)) return false;
  const auto cosets = left_cosets(G, H);
  for (const auto& coset : cosets) {
    const bool is_h = H.contains(coset.front());
    std::size_t hits = 0;
    for (const auto& e : coset)
      if (std::binary_search(s_sorted.begin(), s_sorted.end(), e)) ++hits;
    if (hits != (is_h ? 0u : 1u)) return false;
  }

  return cayley_perfect_code_check(G, ConnectionSet(G.parent(), std::move(s_sorted)),
                                   H.elements());
}

}  // namespace perfcode
