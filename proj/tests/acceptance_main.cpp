// End-to-end acceptance gate: one deterministic check per shipped guarantee,
// each printed as a PASS/FAIL line with its runtime. Exits nonzero when any
// check fails. Run through ctest as the `acceptance` test, or standalone.

#include "perfcode/corpus.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/oracle.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/perm_group.hpp"
#include "perfcode/psl2.hpp"
#include "perfcode/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using perfcode::SuiteOptions;
using perfcode::SuiteResult;

struct Criterion {
  int number;
  std::string name;
  std::function<std::vector<std::string>()> run;  // returns failure descriptions
};

std::vector<std::string> expect_suite_ok(const std::string& name) {
  SuiteResult r = perfcode::run_suite(name, SuiteOptions{});
  return r.failures;
}

void note(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

// The fixed six-point example: G = sym:6 with H = <(1 2)(3 5), (3 4 5)>,
// Q = <(1 2)(3 5)> its Sylow 2-subgroup, and P = <(1 2), (3 5), (3 4 5 6)>
// an order-16 overgroup of Q. H and Q are not perfect codes of G, yet Q is
// a perfect code of P — the decisive ambient group is the normalizer of Q,
// not an arbitrary Sylow 2-overgroup.
std::vector<std::string> criterion_example_pairs() {
  std::vector<std::string> failures;
  const perfcode::S6ReductionExample& ex = perfcode::s6_example();
  const perfcode::Subgroup g = perfcode::whole(ex.g);
  note(failures, !perfcode::is_perfect_code(g, ex.q).is_perfect_code,
       "expected false: is_perfect_code(G, Q)");
  note(failures, !perfcode::is_perfect_code(g, ex.h).is_perfect_code,
       "expected false: is_perfect_code(G, H)");
  note(failures, perfcode::basic_criterion(ex.p, ex.q).is_perfect_code,
       "expected true: basic_criterion(P, Q)");
  auto found = perfcode::find_admissible_connection_set(ex.p, ex.q);
  note(failures, found.has_value(), "expected a connection set for (P, Q)");
  if (found)
    note(failures, perfcode::verify_witness(ex.p, ex.q, found->elements()),
         "connection set for (P, Q) failed verification");
  bool bounded = false;
  try {
    perfcode::find_admissible_connection_set(g, ex.q);
  } catch (const perfcode::BoundError&) {
    bounded = true;
  }
  note(failures, bounded, "expected the (G, Q) search to refuse: index 360");
  return failures;
}

std::vector<std::string> criterion_psl_orders() {
  std::vector<std::string> failures;
  for (std::uint64_t q : perfcode::psl_order_check_parameters()) {
    const std::uint64_t d = q % 2 == 0 ? 1 : 2;
    const std::uint64_t expected = q * (q - 1) * (q + 1) / d;
    const perfcode::Psl2Group gq = perfcode::psl2(q);
    note(failures, perfcode::psl2_order(q) == expected,
         "order formula mismatch at q=" + std::to_string(q));
    note(failures, gq.group->order() == expected,
         "constructed order mismatch at q=" + std::to_string(q));
  }
  return failures;
}

std::vector<std::string> criterion_dihedral_sylow() {
  std::vector<std::string> failures;
  const std::uint64_t qs[] = {7, 9, 17};
  const std::size_t orders[] = {8, 8, 16};
  for (std::size_t i = 0; i < 3; ++i) {
    note(failures, perfcode::sylow2_is_dihedral_check(qs[i]),
         "Sylow 2-subgroup not dihedral at q=" + std::to_string(qs[i]));
    const perfcode::Psl2Group gq = perfcode::psl2(qs[i]);
    const std::size_t got = perfcode::sylow(perfcode::whole(gq.group), 2).order();
    note(failures, got == orders[i],
         "Sylow 2-order " + std::to_string(got) + " != " + std::to_string(orders[i]) +
             " at q=" + std::to_string(qs[i]));
  }
  return failures;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "six-point example pairs decide as recorded", criterion_example_pairs},
      {2, "connection-set search agrees with the double-coset criterion",
       [] { return expect_suite_ok("oracle-equivalence"); }},
      {3, "H, every Sylow 2-subgroup, and some Sylow 2-subgroup agree",
       [] { return expect_suite_ok("sl2"); }},
      {4, "full decision equals the double-coset verdict on the reduced pair",
       [] { return expect_suite_ok("ngq"); }},
      {5, "square-root criteria agree with the double-coset criterion",
       [] { return perfcode::run_square_root_agreement_sweep(SuiteOptions{}).failures; }},
      {6, "verdicts are conjugation-invariant and restrict downward", [] {
         std::vector<std::string> failures = expect_suite_ok("conjugate");
         std::vector<std::string> more = expect_suite_ok("sub");
         failures.insert(failures.end(), more.begin(), more.end());
         return failures;
       }},
      {7, "every-subgroup predicate matches the exhaustive sweep",
       [] { return expect_suite_ok("ele"); }},
      {8, "projective group orders match the closed formula", criterion_psl_orders},
      {9, "projective Sylow 2-subgroups are dihedral with the right orders",
       criterion_dihedral_sylow},
      {10, "classification agrees with the checker across the projective corpus",
       [] { return expect_suite_ok("psl"); }},
      {11, "witnesses on false verdicts are sound and two-element witnesses exist",
       [] { return perfcode::run_witness_soundness_sweep(SuiteOptions{}).failures; }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    try {
      failures = c.run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s  criterion %2d: %s (%lld ms)\n", failures.empty() ? "PASS" : "FAIL",
                c.number, c.name.c_str(), static_cast<long long>(ms));
    for (const std::string& f : failures) std::printf("      %s\n", f.c_str());
    failed += !failures.empty();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
