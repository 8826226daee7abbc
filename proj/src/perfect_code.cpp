#include "perfcode/perfect_code.hpp"

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

bool obstructs(const DoubleCoset& d) {
  return d.left_coset_count % 2 == 1 && d.inverse_closed() && !d.contains_involution();
}

// Canonically first obstructing double-coset representative, or nothing when
// no double coset obstructs. Scans G in canonical order, so the first fresh
// representative of each double coset is its minimal element.
std::optional<Permutation> first_obstruction(const Subgroup& G, const Subgroup& H) {
  const auto& g_elems = G.elements();
  std::vector<bool> assigned(g_elems.size(), false);
  for (std::size_t i = 0; i < g_elems.size(); ++i) {
    if (assigned[i]) continue;
    DoubleCoset d = double_coset_of(G, H, g_elems[i]);
    for (const auto& e : d.elements) {
      auto it = std::lower_bound(g_elems.begin(), g_elems.end(), e);
      assigned[static_cast<std::size_t>(it - g_elems.begin())] = true;
    }
    if (H.contains(g_elems[i])) continue;  // the double coset H itself never counts
    if (obstructs(d)) return g_elems[i];
  }
  return std::nullopt;
}

// Does some h ∈ H make x·h an involution (or the identity)?
bool has_square_root_completion(const Permutation& x, const Subgroup& H) {
  for (const auto& h : H.elements()) {
    const Permutation xh = x * h;
    if ((xh * xh).is_identity()) return true;
  }
  return false;
}

}  // namespace

const char* decision_path_name(DecisionPath path) {
  switch (path) {
    case DecisionPath::kOddShortcut: return "odd-shortcut";
    case DecisionPath::kNgqReduction: return "ngq-reduction";
    case DecisionPath::kBasicCriterion: return "basic-criterion";
    case DecisionPath::kHxzCriterion: return "hxz-criterion";
    case DecisionPath::kEquivalentCriterion: return "equivalent-criterion";
  }
  return "unknown";
}

PerfectCodeReport basic_criterion(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "basic_criterion");
  PerfectCodeReport report;
  report.path = DecisionPath::kBasicCriterion;
  report.witness = first_obstruction(G, H);
  report.is_perfect_code = !report.witness.has_value();
  return report;
}

std::optional<Permutation> two_element_witness(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "two_element_witness");
  if (basic_criterion(G, H).is_perfect_code) return std::nullopt;
  for (const auto& x : G.elements()) {
    if (H.contains(x)) continue;
    if (!is_power_of(static_cast<std::uint64_t>(element_order(x)), 2)) continue;
    if (!H.contains(x * x)) continue;
    const DoubleCoset d = double_coset_of(G, H, x);
    if (d.left_coset_count % 2 == 1 && !d.contains_involution()) return x;
  }
  throw SemanticError("two_element_witness: no 2-element witness found");  // unreachable
}

bool hxz_criterion(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "hxz_criterion");
  if (!is_normal(G, H)) throw SemanticError("hxz_criterion: subgroup is not normal");
  for (const auto& x : G.elements()) {
    if (!H.contains(x * x)) continue;
    if (!has_square_root_completion(x, H)) return false;
  }
  return true;
}

bool equivalent_criterion(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "equivalent_criterion");
  const bool two_group = is_power_of(H.order(), 2);
  const bool odd_order = H.order() % 2 == 1;
  const bool odd_index = index(G, H) % 2 == 1;
  if (!two_group && !odd_order && !odd_index)
    throw SemanticError(
        "equivalent_criterion: needs H a 2-group, or |H| odd, or |G:H| odd");
  const Subgroup n = normalizer(G, H);
  for (const auto& x : n.elements()) {
    if (!H.contains(x * x)) continue;
    if (!has_square_root_completion(x, H)) return false;
  }
  return true;
}

std::optional<bool> odd_shortcut(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "odd_shortcut");
  if (H.order() % 2 == 1 || index(G, H) % 2 == 1) return true;
  return std::nullopt;
}

Subgroup reduce_to_sylow2(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "reduce_to_sylow2");
  return sylow(H, 2);
}

NgqPair reduce_ngq(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "reduce_ngq");
  Subgroup q = sylow(H, 2);
  Subgroup n = normalizer(G, q);
  const std::size_t n_order = n.order();
  Subgroup p = sylow(n, 2);
  return NgqPair{std::move(q), std::move(p), n_order};
}

PerfectCodeReport is_perfect_code(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "is_perfect_code");
  PerfectCodeReport report;
  if (odd_shortcut(G, H).value_or(false)) {
    report.is_perfect_code = true;
    report.path = DecisionPath::kOddShortcut;
    return report;
  }
  const NgqPair ngq = reduce_ngq(G, H);
  report.path = DecisionPath::kNgqReduction;
  report.reduction_trace = {
      {"Q", ngq.q.order()},
      {"N_G(Q)", ngq.normalizer_order},
      {"P", ngq.p.order()},
  };
  // Q is normal in P (P lives inside N_G(Q)), so the square-root condition
  // decides whether Q is a perfect code of P, which settles (G, H).
  report.is_perfect_code = hxz_criterion(ngq.p, ngq.q);
  if (!report.is_perfect_code) report.witness = first_obstruction(G, H);
  return report;
}

std::set<std::string> applicable_shortcuts(const Subgroup& G, const Subgroup& H) {
  require_pair(G, H, "applicable_shortcuts");
  std::set<std::string> out;
  const Subgroup sylow2_of_g = sylow(G, 2);
  if (is_normal(G, sylow2_of_g)) out.insert(kShortcutNormalSylow2);
  if (is_abelian(sylow2_of_g)) out.insert(kShortcutAbelianSylow2);
  if (is_elementary_abelian(sylow2_of_g)) out.insert(kShortcutElementaryAbelianSylow2);

  const Subgroup q = sylow(H, 2);
  const Subgroup p = sylow_containing(G, 2, q);
  const Subgroup n = normalizer(G, q);
  std::vector<Permutation> meet;
  std::set_intersection(p.elements().begin(), p.elements().end(), n.elements().begin(),
                        n.elements().end(), std::back_inserter(meet));
  if ((n.order() / meet.size()) % 2 == 1) out.insert(kShortcutQnormal);
  return out;
}

bool every_subgroup_is_perfect_code(const Subgroup& G) {
  return is_elementary_abelian(sylow(G, 2));
}

}  // namespace perfcode
