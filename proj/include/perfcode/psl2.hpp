#pragma once

#include <cstdint>
#include <vector>

#include "perfcode/gf.hpp"
#include "perfcode/perm_group.hpp"

namespace perfcode {

// A point of the projective line over GF(q), normalized so that y is 1 for
// affine points [x : 1] and the point at infinity is [1 : 0]. Values are
// field-element indices.
struct ProjectivePoint {
  int x = 0;
  int y = 0;
  bool operator==(const ProjectivePoint&) const = default;
};

// PSL(2, q) acting on the q+1 points of the projective line. The fixed point
// enumeration is [t : 1] for t in canonical field order followed by [1 : 0];
// permutation point i (1-based) is points[i-1]. The group is generated by the
// images of the transvections [[1, x^i], [0, 1]] (one per basis monomial of
// GF(q) over its prime field) together with [[0, 1], [-1, 0]]; its order
// q(q-1)(q+1)/d, d = gcd(2, q-1), is asserted at construction.
struct Psl2Group {
  std::uint64_t q = 0;
  int d = 1;  // 1 for even q, 2 for odd q
  FiniteField field;
  GroupPtr group;
  std::vector<ProjectivePoint> points;
};

std::uint64_t psl2_order(std::uint64_t q);

// Throws SemanticError when q is not a prime power, BoundError when q exceeds
// the field bound or the group order exceeds the cap.
Psl2Group psl2(std::uint64_t q, std::size_t order_cap = kDefaultOrderCap,
               std::uint64_t q_bound = kDefaultFieldBound);

// For odd prime powers q with q ≡ ±1 (mod 8), the Sylow 2-subgroups of
// PSL(2, q) are dihedral; this builds the group, computes one, and checks the
// shape. SemanticError when q is outside that family.
bool sylow2_is_dihedral_check(std::uint64_t q, std::size_t order_cap = kDefaultOrderCap);

// Classification of subgroup perfect codes of G = PSL(2, q), q ≡ ±1 (mod 8),
// by the Sylow 2-subgroup Q of H: perfect code iff Q is trivial, Q is
// noncyclic, or Q is cyclic of the maximal order two_part(|G|)/2.
enum class PslCase { kTrivialQ, kNoncyclicQ, kMaximalCyclicQ, kNone };

const char* psl_case_name(PslCase c);

struct PslClassification {
  PslCase sylow2_case = PslCase::kNone;
  bool is_perfect_code = false;
  std::size_t sylow2_order = 1;
};

PslClassification theorem_psl_classify(const Psl2Group& gq, const Subgroup& h);

// The classification verdict must match the general checker.
bool classify_vs_checker(const Psl2Group& gq, const Subgroup& h);

}  // namespace perfcode
