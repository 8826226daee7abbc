#include "perfcode/psl2.hpp"

#include <array>

#include "perfcode/errors.hpp"
#include "perfcode/perfect_code.hpp"

namespace perfcode {

namespace {

// Row-major 2x2 matrix of field-element indices acting on column vectors.
using Matrix = std::array<int, 4>;

ProjectivePoint normalize(const FiniteField& f, int x, int y) {
  if (y != f.zero()) return {f.mul(x, f.inv(y)), f.one()};
  return {f.one(), f.zero()};
}

Permutation moebius_permutation(const FiniteField& f, const Matrix& m,
                                const std::vector<ProjectivePoint>& points) {
  const int q = f.q();
  std::vector<int> images(q + 1);
  for (int i = 0; i <= q; ++i) {
    const ProjectivePoint& pt = points[i];
    const int nx = f.add(f.mul(m[0], pt.x), f.mul(m[1], pt.y));
    const int ny = f.add(f.mul(m[2], pt.x), f.mul(m[3], pt.y));
    const ProjectivePoint out = normalize(f, nx, ny);
    int target = -1;
    if (out.y == f.one()) {
      target = out.x;  // [t : 1] sits at position t in canonical field order
    } else {
      target = q;  // [1 : 0] is last
    }
    images[i] = target + 1;  // 1-based permutation points
  }
  return Permutation::from_images(images);
}

}  // namespace

std::uint64_t psl2_order(std::uint64_t q) {
  const std::uint64_t d = (q % 2 == 0) ? 1 : 2;
  return q * (q - 1) * (q + 1) / d;
}

Psl2Group psl2(std::uint64_t q, std::size_t order_cap, std::uint64_t q_bound) {
  FiniteField f = FiniteField::build(q, q_bound);

  std::vector<ProjectivePoint> points;
  points.reserve(q + 1);
  for (int t = 0; t < f.q(); ++t) points.push_back({t, f.one()});
  points.push_back({f.one(), f.zero()});

  std::vector<Permutation> gens;
  for (int i = 0; i < f.k(); ++i) {
    const Matrix shear{f.one(), f.monomial(i), f.zero(), f.one()};
    gens.push_back(moebius_permutation(f, shear, points));
  }
  const Matrix rotation{f.zero(), f.one(), f.neg(f.one()), f.zero()};
  gens.push_back(moebius_permutation(f, rotation, points));

  GroupPtr group = PermutationGroup::closure(static_cast<int>(q) + 1, std::move(gens), order_cap);
  if (group->order() != psl2_order(q))
    throw SemanticError("psl2 construction bug: order " + std::to_string(group->order()) +
                        " does not match " + std::to_string(psl2_order(q)));
  return Psl2Group{q, (q % 2 == 0) ? 1 : 2, std::move(f), std::move(group), std::move(points)};
}

bool sylow2_is_dihedral_check(std::uint64_t q, std::size_t order_cap) {
  if (q % 2 == 0) throw SemanticError("sylow2_is_dihedral_check: q must be odd");
  const std::uint64_t r = q % 8;
  if (r != 1 && r != 7)
    throw SemanticError("sylow2_is_dihedral_check: q must be ±1 mod 8");
  const Psl2Group gq = psl2(q, order_cap);  // validates that q is a prime power
  return is_dihedral(sylow(whole(gq.group), 2));
}

const char* psl_case_name(PslCase c) {
  switch (c) {
    case PslCase::kTrivialQ: return "trivial-q";
    case PslCase::kNoncyclicQ: return "noncyclic-q";
    case PslCase::kMaximalCyclicQ: return "maximal-cyclic-q";
    case PslCase::kNone: return "none";
  }
  return "unknown";
}

PslClassification theorem_psl_classify(const Psl2Group& gq, const Subgroup& h) {
  const std::uint64_t r = gq.q % 8;
  if (gq.q % 2 == 0 || (r != 1 && r != 7))
    throw SemanticError("theorem_psl_classify: q must be an odd prime power ±1 mod 8");
  if (h.parent() != gq.group)
    throw SemanticError("theorem_psl_classify: subgroup of a different group");

  PslClassification out;
  const Subgroup q_sub = sylow(h, 2);
  out.sylow2_order = q_sub.order();
  if (q_sub.order() == 1) {
    out.sylow2_case = PslCase::kTrivialQ;
    out.is_perfect_code = true;
  } else if (!is_cyclic(q_sub)) {
    out.sylow2_case = PslCase::kNoncyclicQ;
    out.is_perfect_code = true;
  } else if (q_sub.order() == two_part(gq.group->order()) / 2) {
    out.sylow2_case = PslCase::kMaximalCyclicQ;
    out.is_perfect_code = true;
  } else {
    out.sylow2_case = PslCase::kNone;
    out.is_perfect_code = false;
  }
  return out;
}

bool classify_vs_checker(const Psl2Group& gq, const Subgroup& h) {
  const PslClassification cls = theorem_psl_classify(gq, h);
  return cls.is_perfect_code == is_perfect_code(whole(gq.group), h).is_perfect_code;
}

}  // namespace perfcode
