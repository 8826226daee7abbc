#include "perfcode/corpus.hpp"

#include <map>

#include "perfcode/group_spec.hpp"

namespace perfcode {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<std::string> tokens;
    for (int n = 3; n <= 5; ++n) tokens.push_back("sym:" + std::to_string(n));
    for (int n = 4; n <= 5; ++n) tokens.push_back("alt:" + std::to_string(n));
    for (int n = 2; n <= 16; ++n) tokens.push_back("cyclic:" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) tokens.push_back("dihedral:" + std::to_string(n));
    // Quaternion group of order 8, acting on itself by right multiplication.
    tokens.push_back("gens:8:(1 3 2 4)(5 7 6 8);(1 5 2 6)(3 8 4 7)");

    std::vector<CorpusEntry> out;
    out.reserve(tokens.size());
    for (const std::string& token : tokens)
      out.push_back({token, GroupSpec::parse(token).build()});
    return out;
  }();
  return corpus;
}

const std::vector<Subgroup>& cached_subgroups(const GroupPtr& g) {
  struct CacheEntry {
    GroupPtr keepalive;
    std::vector<Subgroup> subgroups;
  };
  static std::map<const PermutationGroup*, CacheEntry> cache;
  auto it = cache.find(g.get());
  if (it == cache.end())
    it = cache.emplace(g.get(), CacheEntry{g, all_subgroups(whole(g))}).first;
  return it->second.subgroups;
}

const S6ReductionExample& s6_example() {
  static const S6ReductionExample example = [] {
    const GroupPtr g = GroupSpec::parse("sym:6").build();
    const Subgroup all = whole(g);
    const auto gen = [&](const std::string& text) {
      return Permutation::parse_cycles(6, text);
    };
    const Subgroup h =
        generated_subgroup(all, std::vector<Permutation>{gen("(1 2)(3 5)"), gen("(3 4 5)")});
    const Subgroup q = generated_subgroup(all, std::vector<Permutation>{gen("(1 2)(3 5)")});
    const Subgroup p = generated_subgroup(
        all, std::vector<Permutation>{gen("(1 2)"), gen("(3 5)"), gen("(3 4 5 6)")});
    return S6ReductionExample{g, h, q, p};
  }();
  return example;
}

const std::vector<std::uint64_t>& psl_suite_parameters() {
  static const std::vector<std::uint64_t> qs = {4, 5, 7, 8, 9, 11, 13, 17};
  return qs;
}

const std::vector<std::uint64_t>& psl_order_check_parameters() {
  static const std::vector<std::uint64_t> qs = {4, 5, 7, 8, 9, 11, 13, 16, 17};
  return qs;
}

}  // namespace perfcode
