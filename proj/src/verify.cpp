#include "perfcode/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "perfcode/corpus.hpp"
#include "perfcode/double_coset.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/lcg.hpp"
#include "perfcode/psl2.hpp"

namespace perfcode {
namespace {

constexpr const char* kS6Token = "sym:6 (example pairs)";

struct AmbientItem {
  std::string token;
  Subgroup ambient;
  const std::vector<Subgroup>* lattice;
};

std::vector<AmbientItem> lattice_corpus(const SuiteOptions& opts) {
  std::vector<AmbientItem> out;
  for (const CorpusEntry& e : builtin_corpus()) {
    if (e.group->order() > opts.max_order) continue;
    out.push_back({e.token, whole(e.group), &cached_subgroups(e.group)});
  }
  return out;
}

// Memoizes is_perfect_code verdicts against one ambient group, keyed by the
// subgroup's element list; many suite checks revisit the same subgroups.
class VerdictCache {
 public:
  explicit VerdictCache(Subgroup ambient) : ambient_(std::move(ambient)) {}

  bool verdict(const Subgroup& h) {
    auto it = memo_.find(h.elements());
    if (it == memo_.end())
      it = memo_.emplace(h.elements(), is_perfect_code(ambient_, h).is_perfect_code).first;
    return it->second;
  }

  const Subgroup& ambient() const { return ambient_; }

 private:
  Subgroup ambient_;
  std::map<std::vector<Permutation>, bool> memo_;
};

std::string pair_label(const std::string& token, const Subgroup& h) {
  return token + ", H " + describe_subgroup(h);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// All distinct Sylow 2-subgroups of H (conjugates of one under H itself).
std::vector<Subgroup> sylow2_subgroups_of(const Subgroup& h) {
  const Subgroup q0 = sylow(h, 2);
  std::set<std::vector<Permutation>> seen;
  std::vector<Subgroup> out;
  for (const auto& x : h.elements()) {
    Subgroup c = conjugate_subgroup(h, q0, x);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  return out;
}

struct ExamplePairs {
  Subgroup ambient;
  std::vector<Subgroup> subgroups;
};

ExamplePairs s6_pairs() {
  const S6ReductionExample& ex = s6_example();
  return {whole(ex.g), {ex.h, ex.q, ex.p}};
}

void coverage_line(SuiteResult& r, const std::string& token, std::size_t count,
                   const std::string& what = "subgroups") {
  r.lines.push_back(token + ": " + std::to_string(count) + " " + what);
}

// ---- sl2: H / every Sylow-2 / some Sylow-2 agree --------------------------

void check_sl2_pair(SuiteResult& r, VerdictCache& cache, const std::string& token,
                    const Subgroup& h) {
  const bool direct = cache.verdict(h);
  bool every = true;
  bool some = false;
  for (const Subgroup& q : sylow2_subgroups_of(h)) {
    const bool v = cache.verdict(q);
    every = every && v;
    some = some || v;
  }
  ++r.checked;
  if (direct != every || direct != some)
    r.failures.push_back(pair_label(token, h) + ": H verdict " + bool_word(direct) +
                         ", every-Sylow-2 " + bool_word(every) + ", some-Sylow-2 " +
                         bool_word(some));
}

SuiteResult suite_sl2(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "sl2";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    VerdictCache cache(item.ambient);
    for (const Subgroup& h : *item.lattice) check_sl2_pair(r, cache, item.token, h);
    coverage_line(r, item.token, item.lattice->size());
  }
  const ExamplePairs ex = s6_pairs();
  VerdictCache cache(ex.ambient);
  for (const Subgroup& h : ex.subgroups) check_sl2_pair(r, cache, kS6Token, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

// ---- ngq: full decision == double-coset decision on the reduced pair ------

void check_ngq_pair(SuiteResult& r, const std::string& token, const Subgroup& ambient,
                    const Subgroup& h) {
  const PerfectCodeReport rep = is_perfect_code(ambient, h);
  const NgqPair pair = reduce_ngq(ambient, h);
  const PerfectCodeReport reduced = basic_criterion(pair.p, pair.q);

  ++r.checked;
  if (rep.is_perfect_code != reduced.is_perfect_code)
    r.failures.push_back(pair_label(token, h) + ": full decision " +
                         bool_word(rep.is_perfect_code) + " but reduced pair (P " +
                         describe_subgroup(pair.p) + ", Q " + describe_subgroup(pair.q) +
                         ") decides " + bool_word(reduced.is_perfect_code));

  ++r.checked;
  if (!is_normal(pair.p, pair.q))
    r.failures.push_back(pair_label(token, h) + ": Q is not normal in P");

  ++r.checked;
  if (auto err = validate_report(ambient, h, rep))
    r.failures.push_back(pair_label(token, h) + ": " + *err);
}

SuiteResult suite_ngq(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "ngq";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    for (const Subgroup& h : *item.lattice) check_ngq_pair(r, item.token, item.ambient, h);
    coverage_line(r, item.token, item.lattice->size());
  }
  const ExamplePairs ex = s6_pairs();
  for (const Subgroup& h : ex.subgroups) check_ngq_pair(r, kS6Token, ex.ambient, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

// ---- sub: a code of the whole group is a code of every overgroup ----------

SuiteResult suite_sub(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "sub";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    VerdictCache cache(item.ambient);
    std::size_t nested = 0;
    for (const Subgroup& h : *item.lattice) {
      if (!cache.verdict(h)) continue;
      for (const Subgroup& k : *item.lattice) {
        if (k.order() < h.order() || !h.is_subset_of(k)) continue;
        ++nested;
        ++r.checked;
        if (!is_perfect_code(k, h).is_perfect_code)
          r.failures.push_back(pair_label(item.token, h) +
                               ": code of the whole group but not of intermediate K " +
                               describe_subgroup(k));
      }
    }
    coverage_line(r, item.token, nested, "nested pairs");
  }

  // The S6 example chain: Q is a code of P, hence of everything between.
  const S6ReductionExample& ex = s6_example();
  ++r.checked;
  if (!is_perfect_code(ex.p, ex.q).is_perfect_code)
    r.failures.push_back(std::string(kS6Token) + ": Q is not a perfect code of P");
  std::size_t nested = 0;
  for (const Subgroup& k : all_subgroups(ex.p)) {
    if (!ex.q.is_subset_of(k)) continue;
    ++nested;
    ++r.checked;
    if (!is_perfect_code(k, ex.q).is_perfect_code)
      r.failures.push_back(std::string(kS6Token) + ": Q fails in intermediate K " +
                           describe_subgroup(k));
  }
  coverage_line(r, kS6Token, nested, "nested pairs between Q and P");
  return r;
}

// ---- conjugate: verdicts and connection sets transport --------------------

void conjugation_invariance(SuiteResult& r, VerdictCache& cache, const std::string& token,
                            const Subgroup& h) {
  const bool base = cache.verdict(h);
  const Subgroup& ambient = cache.ambient();
  std::set<std::vector<Permutation>> seen{h.elements()};
  for (const auto& g : ambient.elements()) {
    Subgroup c = conjugate_subgroup(ambient, h, g);
    if (!seen.insert(c.elements()).second) continue;
    ++r.checked;
    if (cache.verdict(c) != base)
      r.failures.push_back(pair_label(token, h) + ": verdict " + bool_word(base) +
                           " but conjugate by " + g.cycle_string() + " gets " +
                           bool_word(!base));
  }
}

SuiteResult suite_conjugate(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "conjugate";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    VerdictCache cache(item.ambient);
    for (const Subgroup& h : *item.lattice) conjugation_invariance(r, cache, item.token, h);

    std::size_t transported = 0;
    if (item.ambient.order() <= opts.oracle_group_bound) {
      for (const Subgroup& h : *item.lattice) {
        const auto s = find_admissible_connection_set(item.ambient, h, opts.oracle_index_bound,
                                                      opts.oracle_group_bound);
        if (!s) continue;
        for (const auto& g : item.ambient.elements()) {
          const Subgroup hc = conjugate_subgroup(item.ambient, h, g);
          std::vector<Permutation> sc;
          sc.reserve(s->size());
          for (const auto& e : s->elements()) sc.push_back(conjugate(e, g));
          ++r.checked;
          ++transported;
          if (!verify_witness(item.ambient, hc, sc))
            r.failures.push_back(pair_label(item.token, h) +
                                 ": connection set fails after conjugating by " +
                                 g.cycle_string());
        }
      }
    }
    coverage_line(r, item.token, item.lattice->size());
    if (transported != 0)
      coverage_line(r, item.token, transported, "transported connection sets");
  }

  const ExamplePairs ex = s6_pairs();
  VerdictCache cache(ex.ambient);
  for (const Subgroup& h : ex.subgroups) conjugation_invariance(r, cache, kS6Token, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

// ---- ns: some perfect-code Sylow 2-subgroup forces H ----------------------

void check_ns_pair(SuiteResult& r, VerdictCache& cache, const std::string& token,
                   const Subgroup& h) {
  bool some = false;
  for (const Subgroup& q : sylow2_subgroups_of(h)) {
    if (cache.verdict(q)) {
      some = true;
      break;
    }
  }
  ++r.checked;
  if (some && !cache.verdict(h))
    r.failures.push_back(pair_label(token, h) +
                         ": a Sylow 2-subgroup is a code but H itself is not");
}

SuiteResult suite_ns(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "ns";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    VerdictCache cache(item.ambient);
    for (const Subgroup& h : *item.lattice) check_ns_pair(r, cache, item.token, h);
    coverage_line(r, item.token, item.lattice->size());
  }
  const ExamplePairs ex = s6_pairs();
  VerdictCache cache(ex.ambient);
  for (const Subgroup& h : ex.subgroups) check_ns_pair(r, cache, kS6Token, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

// ---- ele: predicate vs exhaustive sweep ------------------------------------

SuiteResult suite_ele(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "ele";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    const bool predicate = every_subgroup_is_perfect_code(item.ambient);
    bool sweep = true;
    const Subgroup* first_bad = nullptr;
    for (const Subgroup& h : *item.lattice) {
      if (!is_perfect_code(item.ambient, h).is_perfect_code) {
        sweep = false;
        if (first_bad == nullptr) first_bad = &h;
      }
    }
    ++r.checked;
    if (predicate != sweep) {
      std::string msg = item.token + ": every-subgroup predicate " + bool_word(predicate) +
                        " but the sweep over " + std::to_string(item.lattice->size()) +
                        " subgroups says " + bool_word(sweep);
      if (first_bad != nullptr) msg += " (first non-code: " + describe_subgroup(*first_bad) + ")";
      r.failures.push_back(msg);
    }
    coverage_line(r, item.token, item.lattice->size());
  }
  return r;
}

// ---- oracle-equivalence: search agrees with the double-coset criterion ----

void check_oracle_pair(SuiteResult& r, const SuiteOptions& opts, const std::string& token,
                       const Subgroup& ambient, const Subgroup& h) {
  const bool expected = basic_criterion(ambient, h).is_perfect_code;
  const auto s =
      find_admissible_connection_set(ambient, h, opts.oracle_index_bound, opts.oracle_group_bound);
  ++r.checked;
  if (s.has_value() != expected)
    r.failures.push_back(pair_label(token, h) + ": criterion says " + bool_word(expected) +
                         " but the connection-set search " +
                         (s ? "found a set" : "found nothing"));
  if (s) {
    ++r.checked;
    if (!verify_witness(ambient, h, s->elements()))
      r.failures.push_back(pair_label(token, h) + ": found connection set fails verification");
  }
}

SuiteResult suite_oracle_equivalence(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "oracle-equivalence";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    if (item.ambient.order() > opts.oracle_group_bound) continue;
    for (const Subgroup& h : *item.lattice)
      check_oracle_pair(r, opts, item.token, item.ambient, h);
    coverage_line(r, item.token, item.lattice->size());
  }

  // The order-16 group P from the S6 example, swept in full.
  const S6ReductionExample& ex = s6_example();
  const std::vector<Subgroup> lattice = all_subgroups(ex.p);
  for (const Subgroup& h : lattice)
    check_oracle_pair(r, opts, "sym:6 example P", ex.p, h);
  coverage_line(r, "sym:6 example P", lattice.size());
  return r;
}

// ---- psl: classification against the checker ------------------------------

SuiteResult suite_psl(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "psl";
  for (const std::uint64_t q : psl_suite_parameters()) {
    const std::string token = "psl2:" + std::to_string(q);
    const Psl2Group gq = psl2(q);
    const Subgroup ambient = whole(gq.group);
    const std::uint64_t rem = q % 8;

    if (q % 2 == 0 || rem == 3 || rem == 5) {
      ++r.checked;
      if (!every_subgroup_is_perfect_code(ambient))
        r.failures.push_back(token + ": expected every subgroup to be a perfect code");
      r.lines.push_back(token + ": every-subgroup predicate");
    } else if (ambient.order() <= 400) {
      std::size_t count = 0;
      for (const Subgroup& c : distinct_cyclic_subgroups(ambient)) {
        ++r.checked;
        ++count;
        if (!classify_vs_checker(gq, c))
          r.failures.push_back(token + ", H " + describe_subgroup(c) +
                               ": classification disagrees with the checker");
      }
      coverage_line(r, token, count, "cyclic subgroups (exhaustive)");
    } else {
      Lcg rng(opts.seed);
      const auto& els = gq.group->elements();
      for (std::size_t i = 0; i < opts.sample_count; ++i) {
        const Permutation& a = els[rng.below(static_cast<std::uint32_t>(els.size()))];
        const Permutation& b = els[rng.below(static_cast<std::uint32_t>(els.size()))];
        const std::vector<Permutation> seed{a, b};
        const Subgroup h = generated_subgroup(ambient, seed);
        ++r.checked;
        if (!classify_vs_checker(gq, h))
          r.failures.push_back(token + ", H " + describe_subgroup(h) +
                               ": classification disagrees with the checker");
      }
      coverage_line(r, token, opts.sample_count, "sampled 2-generated subgroups");
    }
  }
  return r;
}

// ---- acceptance sweeps -----------------------------------------------------

std::optional<std::string> validate_two_element_witness(const Subgroup& G, const Subgroup& H,
                                                        const Permutation& x) {
  if (H.contains(x)) return "2-element witness lies inside H";
  const int ord = element_order(x);
  if (ord < 2 || !is_power_of(static_cast<std::uint64_t>(ord), 2))
    return "2-element witness has order " + std::to_string(ord);
  if (!H.contains(x * x)) return "2-element witness square lies outside H";
  const DoubleCoset d = double_coset_of(G, H, x);
  if (d.left_coset_count % 2 == 0)
    return "2-element witness double coset covers an even number of left cosets";
  if (d.contains_involution()) return "2-element witness double coset contains an involution";
  return std::nullopt;
}

void check_witness_pair(SuiteResult& r, const std::string& token, const Subgroup& ambient,
                        const Subgroup& h) {
  const PerfectCodeReport rep = is_perfect_code(ambient, h);
  ++r.checked;
  if (auto err = validate_report(ambient, h, rep))
    r.failures.push_back(pair_label(token, h) + ": " + *err);
  if (rep.is_perfect_code) return;

  ++r.checked;
  const auto w = two_element_witness(ambient, h);
  if (!w) {
    r.failures.push_back(pair_label(token, h) + ": no 2-element witness for a false verdict");
    return;
  }
  if (auto err = validate_two_element_witness(ambient, h, *w))
    r.failures.push_back(pair_label(token, h) + ": " + *err);
}

}  // namespace

SuiteResult run_square_root_agreement_sweep(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "square-root-agreement";
  const auto run_pair = [&r](const std::string& token, const Subgroup& ambient,
                             const Subgroup& h) {
    const bool expected = basic_criterion(ambient, h).is_perfect_code;
    if (is_normal(ambient, h)) {
      ++r.checked;
      if (hxz_criterion(ambient, h) != expected)
        r.failures.push_back(pair_label(token, h) +
                             ": normal-subgroup square-root criterion disagrees with the "
                             "double-coset decision (" +
                             bool_word(expected) + ")");
    }
    if (is_power_of(h.order(), 2) || h.order() % 2 == 1 || index(ambient, h) % 2 == 1) {
      ++r.checked;
      if (equivalent_criterion(ambient, h) != expected)
        r.failures.push_back(pair_label(token, h) +
                             ": normalizer square-root criterion disagrees with the "
                             "double-coset decision (" +
                             bool_word(expected) + ")");
    }
  };

  for (const AmbientItem& item : lattice_corpus(opts)) {
    for (const Subgroup& h : *item.lattice) run_pair(item.token, item.ambient, h);
    coverage_line(r, item.token, item.lattice->size());
  }
  const ExamplePairs ex = s6_pairs();
  for (const Subgroup& h : ex.subgroups) run_pair(kS6Token, ex.ambient, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

SuiteResult run_witness_soundness_sweep(const SuiteOptions& opts) {
  SuiteResult r;
  r.suite = "witness-soundness";
  for (const AmbientItem& item : lattice_corpus(opts)) {
    for (const Subgroup& h : *item.lattice) check_witness_pair(r, item.token, item.ambient, h);
    coverage_line(r, item.token, item.lattice->size());
  }
  const ExamplePairs ex = s6_pairs();
  for (const Subgroup& h : ex.subgroups) check_witness_pair(r, kS6Token, ex.ambient, h);
  coverage_line(r, kS6Token, ex.subgroups.size());
  return r;
}

std::optional<std::string> validate_report(const Subgroup& G, const Subgroup& H,
                                           const PerfectCodeReport& report) {
  if (report.is_perfect_code) {
    if (report.witness) return "true verdict carries a witness";
    return std::nullopt;
  }
  if (!report.witness) return "false verdict is missing its witness";
  const Permutation& x = *report.witness;
  if (H.contains(x)) return "witness lies inside H";
  const DoubleCoset d = double_coset_of(G, H, x);
  if (!d.inverse_closed()) return "witness double coset is not inverse-closed";
  if (d.left_coset_count % 2 == 0)
    return "witness double coset covers an even number of left cosets";
  if (d.contains_involution()) return "witness double coset contains an involution";
  return std::nullopt;
}

std::vector<Subgroup> distinct_cyclic_subgroups(const Subgroup& G) {
  std::set<std::vector<Permutation>> seen;
  std::vector<Subgroup> out;
  for (const auto& g : G.elements()) {
    const std::vector<Permutation> seed{g};
    Subgroup c = generated_subgroup(G, seed);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sl2", "ngq",          "sub",
                                                 "conjugate", "ns",     "ele",
                                                 "oracle-equivalence",  "psl"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "sl2") return suite_sl2(options);
  if (name == "ngq") return suite_ngq(options);
  if (name == "sub") return suite_sub(options);
  if (name == "conjugate") return suite_conjugate(options);
  if (name == "ns") return suite_ns(options);
  if (name == "ele") return suite_ele(options);
  if (name == "oracle-equivalence") return suite_oracle_equivalence(options);
  if (name == "psl") return suite_psl(options);
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace perfcode
