#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perfcode/double_coset.hpp"
#include "perfcode/perm_group.hpp"

namespace perfcode {

// A subgroup H <= G is a *perfect code* of G when some Cayley graph Cay(G, S)
// (S inverse-closed, identity-free; x ~ y iff y·x⁻¹ ∈ S) has H as a perfect
// code: H is independent and every outside vertex has exactly one neighbor in
// H. Equivalently: some inverse-closed S together with the identity forms a
// left transversal of H in G. The functions below decide this without
// searching for S.

enum class DecisionPath {
  kOddShortcut,          // |H| or |G:H| odd
  kNgqReduction,         // reduced to (Q, P) = (Sylow-2 of H, Sylow-2 of N_G(Q))
  kBasicCriterion,       // full double-coset scan
  kHxzCriterion,         // square-root condition, normal subgroups
  kEquivalentCriterion,  // square-root condition over the normalizer
};

const char* decision_path_name(DecisionPath path);

struct ReductionStep {
  std::string label;
  std::size_t order;
  bool operator==(const ReductionStep&) const = default;
};

struct PerfectCodeReport {
  bool is_perfect_code = false;
  DecisionPath path = DecisionPath::kBasicCriterion;
  // Present exactly when is_perfect_code is false; always lies outside H and
  // satisfies the double-coset obstruction (inverse-closed HxH, odd left-coset
  // count, involution-free).
  std::optional<Permutation> witness;
  std::vector<ReductionStep> reduction_trace;  // filled on the reduction path
};

// H is NOT a perfect code of G exactly when some double coset D = HxH with
// x outside H satisfies: D = D⁻¹, D holds an odd number of left cosets of H,
// and D contains no involution. Scans double cosets by canonical
// representative and reports the first obstruction as witness.
PerfectCodeReport basic_criterion(const Subgroup& G, const Subgroup& H);

// When H fails to be a perfect code there is always a 2-element witness:
// x outside H of 2-power order with x² ∈ H, |H : H ∩ xHx⁻¹| odd, and HxH
// involution-free. Returns the canonically first such x, or nothing when H is
// a perfect code.
std::optional<Permutation> two_element_witness(const Subgroup& G, const Subgroup& H);

// For H normal in G (SemanticError otherwise): H is a perfect code iff every
// x ∈ G with x² ∈ H admits h ∈ H with (x·h)² = 1.
bool hxz_criterion(const Subgroup& G, const Subgroup& H);

// Requires H to be a 2-group, or |H| odd, or |G:H| odd (SemanticError
// otherwise): H is a perfect code iff every x ∈ N_G(H) with x² ∈ H admits
// h ∈ H with (x·h)² = 1.
bool equivalent_criterion(const Subgroup& G, const Subgroup& H);

// true when |H| or |G:H| is odd (then H is always a perfect code); nothing
// when both are even and the cheap verdict does not apply.
std::optional<bool> odd_shortcut(const Subgroup& G, const Subgroup& H);

// Q = Sylow 2-subgroup of H; H is a perfect code of G iff Q is.
Subgroup reduce_to_sylow2(const Subgroup& G, const Subgroup& H);

struct NgqPair {
  Subgroup q;                    // Sylow 2-subgroup of H
  Subgroup p;                    // Sylow 2-subgroup of N_G(Q)
  std::size_t normalizer_order;  // |N_G(Q)|
};

// H is a perfect code of G iff Q is a perfect code of P (Q is normal in P,
// so the square-root condition decides it).
NgqPair reduce_ngq(const Subgroup& G, const Subgroup& H);

// Full decision: odd shortcut when it applies, otherwise the (Q, P) reduction
// with the square-root condition. False verdicts carry a sound double-coset
// witness for the original pair (G, H).
PerfectCodeReport is_perfect_code(const Subgroup& G, const Subgroup& H);

inline constexpr const char* kShortcutQnormal = "qnormal";
inline constexpr const char* kShortcutNormalSylow2 = "normal-sylow2";
inline constexpr const char* kShortcutAbelianSylow2 = "abelian-sylow2";
inline constexpr const char* kShortcutElementaryAbelianSylow2 = "elementary-abelian-sylow2";

// Which special-case reductions apply to (G, H):
//  - "qnormal": P ∩ N_G(Q) has odd index in N_G(Q), where Q = Sylow-2(H) and
//    P = Sylow-2(G) containing Q; then H is a perfect code of G iff Q is a
//    perfect code of P.
//  - "normal-sylow2": G has a normal Sylow 2-subgroup.
//  - "abelian-sylow2": the Sylow 2-subgroups of G are abelian.
//  - "elementary-abelian-sylow2": they are elementary abelian.
std::set<std::string> applicable_shortcuts(const Subgroup& G, const Subgroup& H);

// Every subgroup of G is a perfect code exactly when the Sylow 2-subgroups of
// G are elementary abelian.
bool every_subgroup_is_perfect_code(const Subgroup& G);

}  // namespace perfcode
