#include "doctest.h"

#include "perfcode/corpus.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/group_spec.hpp"
#include "perfcode/oracle.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/perm_group.hpp"

#include <algorithm>

using namespace perfcode;

namespace {

Permutation perm(int degree, const char* cycles) {
  return Permutation::parse_cycles(degree, cycles);
}

Subgroup span_of(const Subgroup& ambient, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> seed;
  for (const char* c : cycles) seed.push_back(perm(ambient.degree(), c));
  return generated_subgroup(ambient, seed);
}

}  // namespace

TEST_CASE("connection sets validate their contents") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  // Valid: inverse-closed, identity-free.
  ConnectionSet ok(s3, {perm(3, "(1 2 3)"), perm(3, "(1 3 2)"), perm(3, "(1 2)")});
  CHECK(ok.size() == 3);
  CHECK(std::is_sorted(ok.elements().begin(), ok.elements().end()));
  CHECK(ok.contains(perm(3, "(1 2)")));
  // Duplicates collapse.
  CHECK(ConnectionSet(s3, {perm(3, "(1 2)"), perm(3, "(1 2)")}).size() == 1);
  // Empty is the edgeless graph.
  CHECK(ConnectionSet(s3, {}).size() == 0);
  // Identity, missing inverse, or foreign elements are rejected.
  CHECK_THROWS_AS(ConnectionSet(s3, {perm(3, "")}), SemanticError);
  CHECK_THROWS_AS(ConnectionSet(s3, {perm(3, "(1 2 3)")}), SemanticError);
  GroupPtr z3 = GroupSpec::parse("cyclic:3").build();
  CHECK_THROWS_AS(ConnectionSet(z3, {perm(3, "(1 2)")}), SemanticError);
}

TEST_CASE("definition-level perfect code check") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g = whole(s3);
  Subgroup h = span_of(g, {"(1 2)"});
  // S = {(2 3), (1 3)}: S ∪ {1} is a left transversal of H, so H is a
  // perfect code of Cay(G, S).
  ConnectionSet s(s3, {perm(3, "(2 3)"), perm(3, "(1 3)")});
  CHECK(cayley_perfect_code_check(g, s, h.elements()));
  // Independence fails: (1 2) connects the two elements of H directly.
  ConnectionSet touching(s3, {perm(3, "(1 2)")});
  CHECK_FALSE(cayley_perfect_code_check(g, touching, h.elements()));
  // Domination fails: with S = {(2 3)} the vertex (1 3) has no neighbor in H.
  ConnectionSet sparse(s3, {perm(3, "(2 3)")});
  CHECK_FALSE(cayley_perfect_code_check(g, sparse, h.elements()));
  // Not every vertex covered: the empty set only works for C = G.
  ConnectionSet empty(s3, {});
  CHECK_FALSE(cayley_perfect_code_check(g, empty, h.elements()));
  CHECK(cayley_perfect_code_check(g, empty, g.elements()));
  // C outside G is rejected.
  CHECK_THROWS_AS(
      cayley_perfect_code_check(span_of(g, {"(1 2 3)"}), empty, h.elements()),
      SemanticError);
}

TEST_CASE("search finds the canonical connection set for the transposition subgroup") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g = whole(s3);
  Subgroup h = span_of(g, {"(1 2)"});
  auto found = find_admissible_connection_set(g, h);
  REQUIRE(found.has_value());
  // Deterministic: involutions first inside each coset, cosets in canonical
  // order. The nontrivial cosets are {(2 3), (1 3 2)} and {(1 2 3), (1 3)};
  // the involution choices are (2 3) and (1 3).
  REQUIRE(found->size() == 2);
  CHECK(found->elements()[0] == perm(3, "(2 3)"));
  CHECK(found->elements()[1] == perm(3, "(1 3)"));
  CHECK(cayley_perfect_code_check(g, *found, h.elements()));
  // Repeated runs agree.
  CHECK(find_admissible_connection_set(g, h)->elements() == found->elements());
}

TEST_CASE("search result size is always the index minus one") {
  GroupPtr s4 = GroupSpec::parse("sym:4").build();
  Subgroup g = whole(s4);
  for (const Subgroup& h : all_subgroups(g)) {
    auto found = find_admissible_connection_set(g, h);
    if (found.has_value()) {
      CHECK(found->size() == index(g, h) - 1);
      CHECK(cayley_perfect_code_check(g, *found, h.elements()));
    }
  }
}

TEST_CASE("search agrees with the double-coset criterion") {
  for (const char* spec : {"sym:4", "cyclic:8", "dihedral:4",
                           "gens:8:(1 3 2 4)(5 7 6 8);(1 5 2 6)(3 8 4 7)"}) {
    GroupPtr gp = GroupSpec::parse(spec).build();
    Subgroup g = whole(gp);
    for (const Subgroup& h : all_subgroups(g))
      CHECK(find_admissible_connection_set(g, h).has_value() ==
            basic_criterion(g, h).is_perfect_code);
  }
}

TEST_CASE("search enforces its bounds") {
  const S6ReductionExample& ex = s6_example();
  Subgroup g = whole(ex.g);
  // |G| = 720 > 48 and |G : Q| = 360 > 24: out of the oracle's envelope.
  CHECK_THROWS_AS(find_admissible_connection_set(g, ex.q), BoundError);
  // Index within bound is fine even in a big group: use an index-6 subgroup.
  std::vector<Permutation> big{perm(6, "(1 2)"), perm(6, "(1 2 3 4 5)")};
  Subgroup s5 = generated_subgroup(g, big);
  CHECK(s5.order() == 120);
  CHECK(find_admissible_connection_set(g, s5).has_value());
  // Small group with a large index is fine too: the bound is an OR.
  GroupPtr z32 = GroupSpec::parse("cyclic:32").build();
  CHECK_NOTHROW(find_admissible_connection_set(whole(z32), Subgroup::trivial(z32)));
  // Custom bounds are respected.
  CHECK_THROWS_AS(find_admissible_connection_set(whole(z32), Subgroup::trivial(z32),
                                                 /*index_bound=*/8, /*group_bound=*/8),
                  BoundError);
}

TEST_CASE("witness verification never throws") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g = whole(s3);
  Subgroup h = span_of(g, {"(1 2)"});
  CHECK(verify_witness(g, h, {perm(3, "(2 3)"), perm(3, "(1 3)")}));
  CHECK(verify_witness(g, g, {}));
  // Wrong size, not inverse-closed, or containing the identity: false, no throw.
  CHECK_FALSE(verify_witness(g, h, {perm(3, "(1 2 3)")}));
  CHECK_FALSE(verify_witness(g, h, {perm(3, "")}));
  CHECK_FALSE(verify_witness(g, h, {perm(3, "(2 3)")}));
  // Degree mismatch is also just false.
  CHECK_FALSE(verify_witness(g, h, {Permutation(4)}));
}

TEST_CASE("the six-point example overgroup admits a connection set for its center") {
  const S6ReductionExample& ex = s6_example();
  auto found = find_admissible_connection_set(ex.p, ex.q);
  REQUIRE(found.has_value());
  CHECK(found->size() == 7);  // index 8 minus the identity
  CHECK(cayley_perfect_code_check(ex.p, *found, ex.q.elements()));
  CHECK(verify_witness(ex.p, ex.q, found->elements()));
}
