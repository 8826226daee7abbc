#include "doctest.h"

#include "perfcode/errors.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/perm_group.hpp"
#include "perfcode/psl2.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

using namespace perfcode;

namespace {

// The canonically-first subgroup of the given order generated by one element.
Subgroup cyclic_subgroup_of_order(const Subgroup& g, int order) {
  for (const auto& x : g.elements())
    if (element_order(x) == order) {
      std::vector<Permutation> seed{x};
      return generated_subgroup(g, seed);
    }
  FAIL("no element of the requested order");
  return Subgroup::trivial(g.parent());
}

}  // namespace

TEST_CASE("group orders across the supported parameter range") {
  const std::uint64_t qs[] = {4, 5, 7, 8, 9, 11, 13, 16, 17};
  const std::uint64_t orders[] = {60, 60, 168, 504, 360, 660, 1092, 4080, 2448};
  for (std::size_t i = 0; i < std::size(qs); ++i) {
    CHECK(psl2_order(qs[i]) == orders[i]);
    Psl2Group gq = psl2(qs[i]);
    CHECK(gq.group->order() == orders[i]);
    CHECK(gq.q == qs[i]);
    CHECK(gq.d == (qs[i] % 2 == 0 ? 1 : 2));
    CHECK(gq.points.size() == qs[i] + 1);
    CHECK(gq.group->degree() == static_cast<int>(qs[i]) + 1);
  }
}

TEST_CASE("the projective action is faithful and transitive") {
  for (std::uint64_t q : {5, 7, 8, 9}) {
    Psl2Group gq = psl2(q);
    const Subgroup g = whole(gq.group);
    // Transitive: the orbit of point 1 is everything.
    std::set<int> orbit;
    for (const auto& e : g.elements()) orbit.insert(e.apply(1));
    CHECK(orbit.size() == q + 1);
    // Faithful: only the identity fixes every point (automatic for
    // permutation groups, so check instead that the identity is unique).
    std::size_t fixes_all = 0;
    for (const auto& e : g.elements()) {
      bool all = true;
      for (int i = 1; i <= static_cast<int>(q) + 1; ++i) all &= (e.apply(i) == i);
      fixes_all += all;
    }
    CHECK(fixes_all == 1);
    // Point enumeration: affine points first, then the point at infinity.
    CHECK(gq.points.back() == ProjectivePoint{gq.field.one(), gq.field.zero()});
    for (std::size_t i = 0; i + 1 < gq.points.size(); ++i)
      CHECK(gq.points[i] == ProjectivePoint{static_cast<int>(i), gq.field.one()});
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(psl2(6), SemanticError);   // not a prime power
  CHECK_THROWS_AS(psl2(1), SemanticError);
  CHECK_THROWS_AS(psl2(0), SemanticError);
  CHECK_THROWS_AS(psl2(125), BoundError);    // beyond the field bound 64
  CHECK_THROWS_AS(psl2(61, 1000), BoundError);  // order 113460 over the cap
}

TEST_CASE("Sylow 2-subgroups are dihedral when q is adjacent to a multiple of 8") {
  CHECK(sylow2_is_dihedral_check(7));
  CHECK(sylow2_is_dihedral_check(9));
  CHECK(sylow2_is_dihedral_check(17));
  // Orders: two_part of 168, 360, 2448 are 8, 8, 16.
  CHECK(two_part(psl2_order(7)) == 8);
  CHECK(two_part(psl2_order(9)) == 8);
  CHECK(two_part(psl2_order(17)) == 16);
  CHECK(sylow(whole(psl2(7).group), 2).order() == 8);
  CHECK(sylow(whole(psl2(9).group), 2).order() == 8);
  CHECK(sylow(whole(psl2(17).group), 2).order() == 16);
  // Outside the family: q even or q ≡ ±3 (mod 8).
  CHECK_THROWS_AS(sylow2_is_dihedral_check(8), SemanticError);
  CHECK_THROWS_AS(sylow2_is_dihedral_check(5), SemanticError);
  CHECK_THROWS_AS(sylow2_is_dihedral_check(11), SemanticError);
}

TEST_CASE("classification of subgroups by their Sylow 2-subgroup") {
  Psl2Group g7 = psl2(7);
  const Subgroup g = whole(g7.group);

  // Odd-order subgroup: trivial Sylow 2-subgroup, always a perfect code.
  Subgroup c7 = cyclic_subgroup_of_order(g, 7);
  PslClassification a = theorem_psl_classify(g7, c7);
  CHECK(a.sylow2_case == PslCase::kTrivialQ);
  CHECK(a.is_perfect_code);
  CHECK(a.sylow2_order == 1);
  CHECK(std::string(psl_case_name(a.sylow2_case)) == "trivial-q");

  // A full Sylow 2-subgroup (dihedral of order 8): noncyclic, perfect code.
  PslClassification b = theorem_psl_classify(g7, sylow(g, 2));
  CHECK(b.sylow2_case == PslCase::kNoncyclicQ);
  CHECK(b.is_perfect_code);
  CHECK(b.sylow2_order == 8);
  CHECK(std::string(psl_case_name(b.sylow2_case)) == "noncyclic-q");

  // Cyclic of order 4 = two_part(168)/2: the maximal cyclic case.
  Subgroup c4 = cyclic_subgroup_of_order(g, 4);
  PslClassification c = theorem_psl_classify(g7, c4);
  CHECK(c.sylow2_case == PslCase::kMaximalCyclicQ);
  CHECK(c.is_perfect_code);
  CHECK(c.sylow2_order == 4);
  CHECK(std::string(psl_case_name(c.sylow2_case)) == "maximal-cyclic-q");

  // A single involution: cyclic of order 2 < 4, not a perfect code.
  Subgroup c2 = cyclic_subgroup_of_order(g, 2);
  PslClassification d = theorem_psl_classify(g7, c2);
  CHECK(d.sylow2_case == PslCase::kNone);
  CHECK_FALSE(d.is_perfect_code);
  CHECK(d.sylow2_order == 2);
  CHECK(std::string(psl_case_name(d.sylow2_case)) == "none");

  // Classification requires q adjacent to a multiple of 8.
  Psl2Group g5 = psl2(5);
  CHECK_THROWS_AS(theorem_psl_classify(g5, whole(g5.group)), SemanticError);
  // And a subgroup of the right group.
  CHECK_THROWS_AS(theorem_psl_classify(g7, whole(g5.group)), SemanticError);
}

TEST_CASE("classification matches the general checker on sampled subgroups") {
  Psl2Group g7 = psl2(7);
  const Subgroup g = whole(g7.group);
  for (int order : {1, 2, 3, 4, 7})
    CHECK(classify_vs_checker(g7, cyclic_subgroup_of_order(g, order)));
  CHECK(classify_vs_checker(g7, sylow(g, 2)));
  CHECK(classify_vs_checker(g7, g));
}

TEST_CASE("notable subgroups of the simple group of order 168") {
  Psl2Group g7 = psl2(7);
  const Subgroup g = whole(g7.group);

  // The stabilizer of the point at infinity: order q(q-1)/2 = 21, odd, so a
  // perfect code with trivial Sylow 2-subgroup.
  std::vector<Permutation> stab_gens;
  const int infinity = g.degree();
  for (const auto& e : g.elements())
    if (e.apply(infinity) == infinity) stab_gens.push_back(e);
  Subgroup borel(g.parent(), stab_gens);
  CHECK(borel.order() == 21);
  CHECK(is_perfect_code(g, borel).is_perfect_code);
  CHECK(theorem_psl_classify(g7, borel).sylow2_case == PslCase::kTrivialQ);

  // A maximal subgroup of order 24 (Sylow-2 normalizer shape): its Sylow
  // 2-subgroup is dihedral of order 8, noncyclic, so a perfect code.
  Subgroup s24 = normalizer(g, sylow(g, 2));
  // The Sylow 2-subgroup may be self-normalizing; in that case adjoin an
  // order-3 element that lands inside an order-24 overgroup.
  if (s24.order() != 24) {
    for (const auto& x : g.elements()) {
      if (element_order(x) != 3) continue;
      std::vector<Permutation> seed = sylow(g, 2).elements();
      seed.push_back(x);
      Subgroup candidate = generated_subgroup(g, seed);
      if (candidate.order() == 24) {
        s24 = candidate;
        break;
      }
    }
  }
  REQUIRE(s24.order() == 24);
  CHECK(is_perfect_code(g, s24).is_perfect_code);
  CHECK(theorem_psl_classify(g7, s24).sylow2_case == PslCase::kNoncyclicQ);
  CHECK(classify_vs_checker(g7, s24));
}
