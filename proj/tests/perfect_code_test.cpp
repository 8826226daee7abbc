#include "doctest.h"

#include "perfcode/corpus.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/group_spec.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/perm_group.hpp"

#include <string>

using namespace perfcode;

namespace {

Subgroup span_of(const Subgroup& ambient, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> seed;
  for (const char* c : cycles)
    seed.push_back(Permutation::parse_cycles(ambient.degree(), c));
  return generated_subgroup(ambient, seed);
}

}  // namespace

TEST_CASE("odd shortcut") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g = whole(s3);
  // |H| = 2 but index 3 is odd.
  CHECK(odd_shortcut(g, span_of(g, {"(1 2)"})) == std::optional<bool>{true});
  // |H| = 3 odd.
  CHECK(odd_shortcut(g, span_of(g, {"(1 2 3)"})) == std::optional<bool>{true});
  // Both even: no verdict.
  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  CHECK(odd_shortcut(whole(z4), span_of(whole(z4), {"(1 3)(2 4)"})) == std::nullopt);
}

TEST_CASE("basic criterion on small examples") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g3 = whole(s3);
  PerfectCodeReport r = basic_criterion(g3, span_of(g3, {"(1 2)"}));
  CHECK(r.is_perfect_code);
  CHECK_FALSE(r.witness.has_value());

  // The order-2 subgroup of the cyclic group of order 4 is not a perfect code:
  // the double coset of the generator is inverse-closed, covers one left
  // coset, and has no involution.
  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  Subgroup g4 = whole(z4);
  Subgroup h4 = span_of(g4, {"(1 3)(2 4)"});
  PerfectCodeReport r4 = basic_criterion(g4, h4);
  CHECK_FALSE(r4.is_perfect_code);
  REQUIRE(r4.witness.has_value());
  CHECK_FALSE(h4.contains(*r4.witness));
  CHECK(element_order(*r4.witness) == 4);

  // The whole group and the trivial subgroup are always perfect codes.
  CHECK(basic_criterion(g4, g4).is_perfect_code);
  CHECK(basic_criterion(g4, Subgroup::trivial(z4)).is_perfect_code);
}

TEST_CASE("two-element witness accompanies every failure") {
  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  Subgroup g = whole(z4);
  Subgroup h = span_of(g, {"(1 3)(2 4)"});
  auto w = two_element_witness(g, h);
  REQUIRE(w.has_value());
  CHECK_FALSE(h.contains(*w));
  CHECK(is_power_of(static_cast<std::uint64_t>(element_order(*w)), 2));
  CHECK(element_order(*w) >= 2);
  CHECK(h.contains(*w * *w));
  // No witness for a perfect code.
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  CHECK_FALSE(two_element_witness(whole(s3), span_of(whole(s3), {"(1 2)"})).has_value());
}

TEST_CASE("square-root criterion for normal subgroups") {
  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  Subgroup g = whole(z4);
  Subgroup h = span_of(g, {"(1 3)(2 4)"});
  CHECK_FALSE(hxz_criterion(g, h));  // x = 4-cycle has x² ∈ H, no fix-up
  GroupPtr v4 = GroupSpec::parse("gens:4:(1 2)(3 4);(1 3)(2 4)").build();
  Subgroup gv = whole(v4);
  CHECK(hxz_criterion(gv, span_of(gv, {"(1 2)(3 4)"})));
  // Normality is required.
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  CHECK_THROWS_AS(hxz_criterion(whole(s3), span_of(whole(s3), {"(1 2)"})), SemanticError);
  // Agreement with the double-coset criterion where both apply.
  GroupPtr d8 = GroupSpec::parse("dihedral:8").build();
  Subgroup gd = whole(d8);
  for (const Subgroup& sub : all_subgroups(gd))
    if (is_normal(gd, sub))
      CHECK(hxz_criterion(gd, sub) == basic_criterion(gd, sub).is_perfect_code);
}

TEST_CASE("square-root criterion over the normalizer") {
  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  Subgroup g = whole(z4);
  CHECK_FALSE(equivalent_criterion(g, span_of(g, {"(1 3)(2 4)"})));
  GroupPtr s4 = GroupSpec::parse("sym:4").build();
  Subgroup gs = whole(s4);
  CHECK(equivalent_criterion(gs, span_of(gs, {"(1 2)"})));  // 2-group hypothesis
  CHECK(equivalent_criterion(gs, span_of(gs, {"(1 2 3)"})));  // odd order
  // Hypothesis (2-group, odd order, or odd index) is enforced: A4 in S4 has
  // order 12 (even, not a 2-group) and index 2 (even).
  CHECK_THROWS_AS(equivalent_criterion(gs, span_of(gs, {"(1 2 3)", "(2 3 4)"})),
                  SemanticError);
  // Agreement with the double-coset criterion where the hypothesis holds.
  GroupPtr d6 = GroupSpec::parse("dihedral:6").build();
  Subgroup gd = whole(d6);
  for (const Subgroup& sub : all_subgroups(gd)) {
    const bool hyp = is_power_of(sub.order(), 2) || sub.order() % 2 == 1 ||
                     index(gd, sub) % 2 == 1;
    if (hyp)
      CHECK(equivalent_criterion(gd, sub) == basic_criterion(gd, sub).is_perfect_code);
  }
}

TEST_CASE("reduction to a Sylow 2-subgroup preserves the verdict") {
  GroupPtr s4 = GroupSpec::parse("sym:4").build();
  Subgroup g = whole(s4);
  for (const Subgroup& h : all_subgroups(g)) {
    Subgroup q = reduce_to_sylow2(g, h);
    CHECK(q.order() == two_part(h.order()));
    CHECK(q.is_subset_of(h));
    CHECK(basic_criterion(g, h).is_perfect_code == basic_criterion(g, q).is_perfect_code);
  }
}

TEST_CASE("the normalizer reduction on the six-point example") {
  const S6ReductionExample& ex = s6_example();
  Subgroup g = whole(ex.g);
  CHECK(ex.h.order() == 6);
  CHECK(ex.q.order() == 2);
  CHECK(ex.p.order() == 16);

  NgqPair pair = reduce_ngq(g, ex.h);
  CHECK(pair.q.order() == 2);
  CHECK(pair.normalizer_order == 16);
  CHECK(pair.p.order() == 16);
  CHECK(is_normal(pair.p, pair.q));

  // H and Q fail in the full group, but Q is a perfect code of the order-16
  // overgroup P from the example.
  CHECK_FALSE(is_perfect_code(g, ex.h).is_perfect_code);
  CHECK_FALSE(is_perfect_code(g, ex.q).is_perfect_code);
  CHECK(is_perfect_code(ex.p, ex.q).is_perfect_code);
  CHECK(basic_criterion(ex.p, ex.q).is_perfect_code);

  // The failure is visible in the normalizer: (1 3 2 5) squares into Q and
  // its coset {(1 3 2 5), (1 5 2 3)} carries no involution.
  Permutation x = Permutation::parse_cycles(6, "(1 3 2 5)");
  CHECK(normalizer(g, ex.q).contains(x));
  CHECK(ex.q.contains(x * x));
  CHECK_FALSE(is_involution(x));
  CHECK_FALSE(is_involution(x * ex.q.elements()[1]));
}

TEST_CASE("full decision reports paths and traces") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g3 = whole(s3);
  PerfectCodeReport odd = is_perfect_code(g3, span_of(g3, {"(1 2)"}));
  CHECK(odd.is_perfect_code);
  CHECK(odd.path == DecisionPath::kOddShortcut);
  CHECK(std::string(decision_path_name(odd.path)) == "odd-shortcut");

  const S6ReductionExample& ex = s6_example();
  PerfectCodeReport red = is_perfect_code(whole(ex.g), ex.h);
  CHECK_FALSE(red.is_perfect_code);
  CHECK(red.path == DecisionPath::kNgqReduction);
  CHECK(std::string(decision_path_name(red.path)) == "ngq-reduction");
  REQUIRE(red.reduction_trace.size() == 3);
  CHECK(red.reduction_trace[0] == ReductionStep{"Q", 2});
  CHECK(red.reduction_trace[1] == ReductionStep{"N_G(Q)", 16});
  CHECK(red.reduction_trace[2] == ReductionStep{"P", 16});
  REQUIRE(red.witness.has_value());
  CHECK_FALSE(ex.h.contains(*red.witness));

  CHECK(std::string(decision_path_name(DecisionPath::kBasicCriterion)) ==
        "basic-criterion");
  CHECK(std::string(decision_path_name(DecisionPath::kHxzCriterion)) == "hxz-criterion");
  CHECK(std::string(decision_path_name(DecisionPath::kEquivalentCriterion)) ==
        "equivalent-criterion");
}

TEST_CASE("full decision agrees with the double-coset criterion across a lattice") {
  for (const char* spec : {"sym:4", "dihedral:6", "cyclic:8"}) {
    GroupPtr gp = GroupSpec::parse(spec).build();
    Subgroup g = whole(gp);
    for (const Subgroup& h : all_subgroups(g)) {
      PerfectCodeReport fast = is_perfect_code(g, h);
      PerfectCodeReport slow = basic_criterion(g, h);
      CHECK(fast.is_perfect_code == slow.is_perfect_code);
    }
  }
}

TEST_CASE("special-case shortcut labels") {
  GroupPtr s3 = GroupSpec::parse("sym:3").build();
  Subgroup g3 = whole(s3);
  auto s = applicable_shortcuts(g3, span_of(g3, {"(1 2)"}));
  CHECK(s.count(kShortcutQnormal) == 1);
  CHECK(s.count(kShortcutAbelianSylow2) == 1);
  CHECK(s.count(kShortcutElementaryAbelianSylow2) == 1);
  // S3's Sylow 2-subgroups (order 2) are not normal.
  CHECK(s.count(kShortcutNormalSylow2) == 0);

  GroupPtr z4 = GroupSpec::parse("cyclic:4").build();
  auto s4 = applicable_shortcuts(whole(z4), span_of(whole(z4), {"(1 3)(2 4)"}));
  CHECK(s4.count(kShortcutNormalSylow2) == 1);
  CHECK(s4.count(kShortcutAbelianSylow2) == 1);
  // Cyclic of order 4 is not elementary abelian.
  CHECK(s4.count(kShortcutElementaryAbelianSylow2) == 0);

  const S6ReductionExample& ex = s6_example();
  auto s6s = applicable_shortcuts(whole(ex.g), ex.q);
  CHECK(s6s.count(kShortcutNormalSylow2) == 0);
  CHECK(s6s.count(kShortcutAbelianSylow2) == 0);
}

TEST_CASE("groups where every subgroup is a perfect code") {
  auto every = [](const char* spec) {
    GroupPtr g = GroupSpec::parse(spec).build();
    return every_subgroup_is_perfect_code(whole(g));
  };
  CHECK(every("sym:3"));        // Sylow-2 of order 2
  CHECK(every("alt:5"));        // Klein four Sylow-2
  CHECK(every("cyclic:6"));
  CHECK_FALSE(every("cyclic:4"));
  CHECK_FALSE(every("sym:4"));  // dihedral Sylow-2 of order 8
  CHECK_FALSE(every("gens:8:(1 3 2 4)(5 7 6 8);(1 5 2 6)(3 8 4 7)"));  // quaternion

  // The predicate matches the brute sweep on a small group.
  GroupPtr d5 = GroupSpec::parse("dihedral:5").build();
  Subgroup g = whole(d5);
  bool sweep = true;
  for (const Subgroup& h : all_subgroups(g))
    sweep &= basic_criterion(g, h).is_perfect_code;
  CHECK(every_subgroup_is_perfect_code(g) == sweep);
}
