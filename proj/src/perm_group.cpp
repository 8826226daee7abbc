#include "perfcode/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

// Product closure of `seed` by breadth-first multiplication. In a finite
// group the set of all words in the seed (no explicit inverses needed) is
// already the generated subgroup. A cap of 0 disables the bound check.
std::set<Permutation> bfs_closure(int degree, std::span<const Permutation> seed,
                                  std::size_t cap) {
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id(degree);
  seen.insert(id);
  todo.push_back(id);
  std::vector<Permutation> gens;
  for (const auto& g : seed) {
    if (g.degree() != degree) throw SemanticError("generator degree mismatch");
    gens.push_back(g);
  }
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation nxt = cur * g;
      if (seen.insert(nxt).second) {
        if (cap != 0 && seen.size() > cap)
          throw BoundError("group order exceeds cap of " + std::to_string(cap));
        todo.push_back(std::move(nxt));
      }
    }
  }
  return seen;
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* op) {
  if (a.parent() != b.parent())
    throw SemanticError(std::string(op) + ": subgroups have different ambient groups");
}

void require_pair(const Subgroup& g, const Subgroup& h, const char* op) {
  require_same_parent(g, h, op);
  if (!h.is_subset_of(g))
    throw SemanticError(std::string(op) + ": second argument is not contained in the first");
}

}  // namespace

GroupPtr PermutationGroup::closure(int degree, std::vector<Permutation> generators,
                                   std::size_t order_cap) {
  if (degree < 1) throw SemanticError("group degree must be positive");
  if (generators.empty()) generators.push_back(Permutation(degree));
  auto elems_set = bfs_closure(degree, generators, order_cap);
  std::vector<Permutation> elems(elems_set.begin(), elems_set.end());
  return GroupPtr(new PermutationGroup(degree, std::move(generators), std::move(elems)));
}

bool PermutationGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Permutation> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw SemanticError("subgroup requires an ambient group");
  if (elements_.empty()) throw SemanticError("subgroup element list may not be empty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& e : elements_) {
    if (!parent_->contains(e)) throw SemanticError("subgroup element outside the ambient group");
    if (!std::binary_search(elements_.begin(), elements_.end(), e.inverse()))
      throw SemanticError("subgroup element list is not inverse-closed");
  }
  if (!contains(Permutation(parent_->degree())))
    throw SemanticError("subgroup element list lacks the identity");
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const int n = parent->degree();
  return Subgroup(std::move(parent), {Permutation(n)});
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

Subgroup whole(const GroupPtr& g) {
  if (!g) throw SemanticError("whole(): null group");
  return Subgroup(g, g->elements());
}

Subgroup generated_subgroup(const Subgroup& ambient, std::span<const Permutation> seed) {
  for (const auto& s : seed)
    if (!ambient.contains(s))
      throw SemanticError("generated_subgroup: seed element outside the ambient group");
  if (seed.empty()) return Subgroup::trivial(ambient.parent());
  auto elems = bfs_closure(ambient.degree(), seed, 0);
  return Subgroup(ambient.parent(), {elems.begin(), elems.end()});
}

Subgroup generated_subgroup(const GroupPtr& group, std::span<const Permutation> seed) {
  return generated_subgroup(whole(group), seed);
}

std::vector<std::vector<Permutation>> left_cosets(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "left_cosets");
  const auto& g_elems = G.elements();
  std::vector<bool> assigned(g_elems.size(), false);
  std::vector<std::vector<Permutation>> cosets;
  for (std::size_t i = 0; i < g_elems.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Permutation> coset;
    coset.reserve(H.order());
    for (const auto& h : H.elements()) coset.push_back(g_elems[i] * h);
    std::sort(coset.begin(), coset.end());
    for (const auto& e : coset) {
      auto it = std::lower_bound(g_elems.begin(), g_elems.end(), e);
      assigned[static_cast<std::size_t>(it - g_elems.begin())] = true;
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::size_t index(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "index");
  return G.order() / H.order();
}

Subgroup conjugate_subgroup(const Subgroup& G, const Subgroup& H, const Permutation& g) {
  require_pair(G, H, "conjugate_subgroup");
  if (!G.contains(g)) throw SemanticError("conjugate_subgroup: conjugator outside the group");
  const Permutation g_inv = g.inverse();
  std::vector<Permutation> out;
  out.reserve(H.order());
  for (const auto& h : H.elements()) out.push_back(g * h * g_inv);
  return Subgroup(G.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "normalizer");
  std::vector<Permutation> out;
  for (const auto& g : G.elements()) {
    const Permutation g_inv = g.inverse();
    bool normalizes = true;
    for (const auto& h : H.elements()) {
      if (!H.contains(g * h * g_inv)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(g);
  }
  return Subgroup(G.parent(), std::move(out));
}

bool is_normal(const Subgroup& G, const Subgroup& H) {
  return normalizer(G, H).order() == G.order();
}

namespace {

bool is_p_element(const Permutation& x, int p) {
  return is_power_of(static_cast<std::uint64_t>(element_order(x)),
                     static_cast<std::uint64_t>(p));
}

Subgroup extend_to_sylow(const Subgroup& G, Subgroup q, int p, std::uint64_t target) {
  while (q.order() < target) {
    const Subgroup n = normalizer(G, q);
    bool extended = false;
    for (const auto& y : n.elements()) {
      if (q.contains(y) || !is_p_element(y, p)) continue;
      std::vector<Permutation> seed = q.elements();
      seed.push_back(y);
      Subgroup bigger = generated_subgroup(G, seed);
      if (is_power_of(bigger.order(), static_cast<std::uint64_t>(p))) {
        q = std::move(bigger);
        extended = true;
        break;
      }
    }
    if (!extended)
      throw SemanticError("sylow extension stalled below the full p-part");  // unreachable
  }
  return q;
}

}  // namespace

Subgroup sylow(const Subgroup& G, int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw SemanticError("sylow: p must be prime");
  const std::uint64_t target = p_part(G.order(), static_cast<std::uint64_t>(p));
  if (target == 1) return Subgroup::trivial(G.parent());
  for (const auto& x : G.elements()) {
    if (element_order(x) == p) {
      std::vector<Permutation> seed{x};
      return extend_to_sylow(G, generated_subgroup(G, seed), p, target);
    }
  }
  throw SemanticError("sylow: no element of order p found");  // unreachable (Cauchy)
}

Subgroup sylow_containing(const Subgroup& G, int p, const Subgroup& q0) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw SemanticError("sylow_containing: p must be prime");
  require_pair(G, q0, "sylow_containing");
  if (!is_power_of(q0.order(), static_cast<std::uint64_t>(p)))
    throw SemanticError("sylow_containing: seed subgroup is not a p-group");
  if (q0.order() == 1) return sylow(G, p);
  const std::uint64_t target = p_part(G.order(), static_cast<std::uint64_t>(p));
  return extend_to_sylow(G, q0, p, target);
}

namespace detail {

std::vector<Subgroup> all_subgroups_seeded(const Subgroup& G, std::size_t bound,
                                           std::span<const Permutation> seed_order) {
  if (G.order() > bound)
    throw BoundError("all_subgroups: group order " + std::to_string(G.order()) +
                     " exceeds bound " + std::to_string(bound));

  // Nodes keyed by their sorted element list; each carries a small generating
  // set so joins stay cheap.
  std::map<std::vector<Permutation>, std::vector<Permutation>> nodes;
  std::deque<const std::vector<Permutation>*> worklist;  // keys into `nodes`

  const auto add_node = [&](Subgroup sub, std::vector<Permutation> gens) {
    auto [it, inserted] = nodes.emplace(sub.elements(), std::move(gens));
    if (inserted) worklist.push_back(&it->first);
  };

  add_node(Subgroup::trivial(G.parent()), {});
  for (const auto& g : seed_order) {
    std::vector<Permutation> seed{g};
    // Generate before handing the seed over: add_node's by-value parameter
    // would otherwise be free to move the vector out first.
    Subgroup cyclic = generated_subgroup(G, seed);
    add_node(std::move(cyclic), std::move(seed));
  }

  while (!worklist.empty()) {
    const std::vector<Permutation>* key = worklist.front();
    worklist.pop_front();
    const std::vector<Permutation> gens_a = nodes.at(*key);  // copy: map grows below
    // Join with every node currently known (snapshot of the keys first, since
    // inserting invalidates nothing in std::map but we must not loop forever).
    std::vector<const std::vector<Permutation>*> snapshot;
    snapshot.reserve(nodes.size());
    for (const auto& [k, v] : nodes) snapshot.push_back(&k);
    for (const auto* other : snapshot) {
      if (other == key) continue;
      std::vector<Permutation> joint = gens_a;
      const auto& gens_b = nodes.at(*other);
      joint.insert(joint.end(), gens_b.begin(), gens_b.end());
      std::sort(joint.begin(), joint.end());
      joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
      Subgroup joined = generated_subgroup(G, joint);
      add_node(std::move(joined), std::move(joint));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.emplace_back(G.parent(), node.first);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace detail

std::vector<Subgroup> all_subgroups(const Subgroup& G, std::size_t bound) {
  return detail::all_subgroups_seeded(G, bound, G.elements());
}

bool is_abelian(const Subgroup& H) {
  const auto& e = H.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i] * e[j] != e[j] * e[i]) return false;
  return true;
}

bool is_cyclic(const Subgroup& H) {
  const int target = static_cast<int>(H.order());
  for (const auto& x : H.elements())
    if (element_order(x) == target) return true;
  return false;
}

bool is_elementary_abelian(const Subgroup& H) {
  if (H.order() == 1) return true;
  if (!is_abelian(H)) return false;
  int p = 0;
  for (const auto& x : H.elements()) {
    const int ord = element_order(x);
    if (ord == 1) continue;
    if (p == 0) {
      if (!is_prime(static_cast<std::uint64_t>(ord))) return false;
      p = ord;
    } else if (ord != p) {
      return false;
    }
  }
  return true;
}

bool is_dihedral(const Subgroup& H) {
  if (H.order() % 2 != 0) return false;
  const std::size_t m = H.order() / 2;
  // Candidate cyclic subgroups C of order m, deduplicated by element list.
  std::set<std::vector<Permutation>> candidates;
  if (m == 1) {
    candidates.insert({H.identity()});
  } else {
    for (const auto& c : H.elements())
      if (static_cast<std::size_t>(element_order(c)) == m) {
        std::vector<Permutation> seed{c};
        candidates.insert(generated_subgroup(H, seed).elements());
      }
  }
  for (const auto& c_elems : candidates) {
    const auto in_c = [&](const Permutation& x) {
      return std::binary_search(c_elems.begin(), c_elems.end(), x);
    };
    for (const auto& t : H.elements()) {
      if (!is_involution(t) || in_c(t)) continue;
      bool inverts = true;
      for (const auto& c : c_elems) {
        if (t * c * t != c.inverse()) {
          inverts = false;
          break;
        }
      }
      if (inverts) return true;
    }
  }
  return false;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

std::uint64_t two_part(std::uint64_t n) { return p_part(n, 2); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Permutation> small_generating_set(const Subgroup& H) {
  std::vector<Permutation> gens;
  Subgroup span = Subgroup::trivial(H.parent());
  for (const auto& x : H.elements()) {
    if (span.order() == H.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated_subgroup(H, gens);
  }
  return gens;
}

std::string describe_subgroup(const Subgroup& H) {
  std::ostringstream os;
  os << "order " << H.order() << " = <";
  bool first = true;
  for (const auto& g : small_generating_set(H)) {
    if (!first) os << "; ";
    first = false;
    const std::string cyc = g.cycle_string();
    os << (cyc.empty() ? "()" : cyc);
  }
  if (first) os << "()";
  os << ">";
  return os.str();
}

}  // namespace perfcode
