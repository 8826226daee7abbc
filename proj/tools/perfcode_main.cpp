#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "perfcode/corpus.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/group_spec.hpp"
#include "perfcode/oracle.hpp"
#include "perfcode/perfect_code.hpp"
#include "perfcode/psl2.hpp"
#include "perfcode/report.hpp"
#include "perfcode/verify.hpp"

namespace {

using namespace perfcode;

// Exit codes: 0 ok / help, 2 parse error, 3 semantic error, 4 bound exceeded,
// 5 counterexample or cross-check disagreement.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBound = 4;
constexpr int kExitCounterexample = 5;

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::size_t parse_env_number(const char* text) {
  std::size_t value = 0;
  for (const char* p = text; *p != '\0'; ++p) {
    if (*p < '0' || *p > '9')
      throw ParseError(std::string("PERFCODE_MAX_ORDER is not a number: '") + text + "'");
    value = value * 10 + static_cast<std::size_t>(*p - '0');
  }
  if (*text == '\0') throw ParseError("PERFCODE_MAX_ORDER is empty");
  return value;
}

// Closure cap for building groups: flag beats the environment beats the
// compiled default.
std::size_t resolve_order_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PERFCODE_MAX_ORDER")) return parse_env_number(env);
  return kDefaultOrderCap;
}

struct BuiltGroup {
  GroupSpec spec;
  GroupPtr group;
  std::optional<Psl2Group> psl;  // populated for psl2 specs
};

BuiltGroup build_group(const std::string& token, std::size_t order_cap) {
  BuiltGroup out{GroupSpec::parse(token), nullptr, std::nullopt};
  if (out.spec.kind == GroupSpec::Kind::kPsl2) {
    out.psl = psl2(out.spec.parameter, order_cap);
    out.group = out.psl->group;
  } else {
    out.group = out.spec.build(order_cap);
  }
  return out;
}

bool psl_classification_applies(const BuiltGroup& bg) {
  if (!bg.psl) return false;
  const std::uint64_t r = bg.psl->q % 8;
  return r == 1 || r == 7;
}

std::vector<Permutation> parse_generator_list(int degree, const std::string& text) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(';', start);
    const std::string part =
        pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start);
    const Permutation g = Permutation::parse_cycles(degree, part);
    if (!g.is_identity()) gens.push_back(g);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return gens;
}

void emit(const std::string& format, const nlohmann::json& doc, const std::string& text) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check_single(const BuiltGroup& bg, const std::string& subgroup_arg, bool want_witness,
                     bool cross_check, std::size_t oracle_index_bound,
                     const std::string& format) {
  const Stopwatch timer;
  const Subgroup ambient = whole(bg.group);
  std::vector<Permutation> gens = parse_generator_list(bg.group->degree(), subgroup_arg);
  for (const Permutation& g : gens)
    if (!bg.group->contains(g))
      throw SemanticError("subgroup generator " + g.cycle_string() + " lies outside the group");
  const Subgroup h = generated_subgroup(ambient, gens);

  CheckOutcome o;
  o.spec = bg.spec;
  o.subgroup_input = subgroup_arg;
  o.group_order = bg.group->order();
  o.subgroup_order = h.order();
  o.report = is_perfect_code(ambient, h);
  o.shortcuts = applicable_shortcuts(ambient, h);
  o.want_witness = want_witness;
  if (psl_classification_applies(bg))
    o.psl_case = psl_case_name(theorem_psl_classify(*bg.psl, h).sylow2_case);

  if (cross_check) {
    o.cross_checked = true;
    o.basic_agrees = basic_criterion(ambient, h).is_perfect_code == o.report.is_perfect_code;
    try {
      const auto s = find_admissible_connection_set(ambient, h, oracle_index_bound);
      o.oracle_found = s.has_value();
      if (s) o.oracle_set = s->elements();
    } catch (const BoundError&) {
      o.oracle_skipped = true;
    }
  }

  o.timing_ms = timer.ms();
  emit(format, check_json(o), check_text(o));
  return o.consistent() ? kExitOk : kExitCounterexample;
}

int cmd_check_sample(const BuiltGroup& bg, const std::string& format) {
  const Stopwatch timer;
  const Subgroup ambient = whole(bg.group);
  const bool classify = psl_classification_applies(bg);

  SampleOutcome o;
  o.spec = bg.spec;
  o.group_order = bg.group->order();
  for (const Subgroup& c : distinct_cyclic_subgroups(ambient)) {
    SampleRow row;
    const std::vector<Permutation> gens = small_generating_set(c);
    row.generator = gens.empty() ? "()" : gens.front().cycle_string();
    row.order = c.order();
    const PerfectCodeReport rep = is_perfect_code(ambient, c);
    row.is_perfect_code = rep.is_perfect_code;
    row.path = decision_path_name(rep.path);
    if (classify) {
      const PslClassification cls = theorem_psl_classify(*bg.psl, c);
      row.psl_case = psl_case_name(cls.sylow2_case);
      row.classification_agrees = cls.is_perfect_code == rep.is_perfect_code;
    }
    o.rows.push_back(std::move(row));
  }

  o.timing_ms = timer.ms();
  emit(format, sample_json(o), sample_text(o));
  return o.consistent() ? kExitOk : kExitCounterexample;
}

int cmd_group_info(const BuiltGroup& bg, const std::string& format) {
  const Stopwatch timer;
  const Subgroup ambient = whole(bg.group);
  const Subgroup p = sylow(ambient, 2);

  GroupInfoOutcome o;
  o.spec = bg.spec;
  o.order = bg.group->order();
  o.degree = bg.group->degree();
  o.two_part_of_order = two_part(bg.group->order());
  o.sylow2_order = p.order();
  o.sylow2_cyclic = is_cyclic(p);
  o.sylow2_dihedral = is_dihedral(p);
  o.sylow2_elementary_abelian = is_elementary_abelian(p);
  o.sylow2_abelian = is_abelian(p);
  o.abelian = is_abelian(ambient);
  o.every_subgroup_perfect_code = every_subgroup_is_perfect_code(ambient);
  for (const Permutation& g : bg.group->generators()) {
    const std::string cyc = g.cycle_string();
    o.generators.push_back(cyc.empty() ? "()" : cyc);
  }
  if (bg.psl) {
    o.field_order = bg.psl->q;
    o.field_modulus = bg.psl->field.modulus();
  }

  o.timing_ms = timer.ms();
  emit(format, group_info_json(o), group_info_text(o));
  return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, const std::string& format) {
  const Stopwatch timer;
  VerifyOutcome o;
  o.result = run_suite(suite, options);
  o.timing_ms = timer.ms();
  emit(format, verify_json(o), verify_text(o));
  return o.result.ok() ? kExitOk : kExitCounterexample;
}

int run(int argc, char** argv) {
  CLI::App app{"decide whether subgroups of finite permutation groups are perfect codes"};
  app.require_subcommand(1);
  app.fallthrough();  // let app-wide options like --format appear after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "decide perfect-code status of one subgroup");
  std::string check_group;
  std::string check_subgroup;
  std::string check_sample;
  bool want_witness = false;
  bool cross = false;
  std::optional<std::size_t> check_cap;
  std::size_t oracle_bound = kDefaultOracleIndexBound;
  check->add_option("--group", check_group, "group spec, e.g. sym:6 or psl2:7")->required();
  auto* sub_opt = check->add_option("--subgroup", check_subgroup,
                                    "semicolon-separated generator cycles, e.g. \"(1 2)(3 5);(3 4 5)\"");
  auto* sample_opt =
      check->add_option("--subgroup-order-sample", check_sample,
                        "sweep a family of subgroups instead of one ('cyclic')")
          ->check(CLI::IsMember({"cyclic"}));
  sub_opt->excludes(sample_opt);
  sample_opt->excludes(sub_opt);
  check->add_flag("--witness", want_witness, "include the witness or found connection set");
  check->add_flag("--cross-check", cross,
                  "also run the double-coset criterion and, within bounds, the search oracle");
  check->add_option("--max-order", check_cap, "group enumeration cap (default PERFCODE_MAX_ORDER or " +
                                                  std::to_string(kDefaultOrderCap) + ")");
  check->add_option("--oracle-bound", oracle_bound, "index bound for the search oracle")
      ->capture_default_str();

  // group-info
  auto* info = app.add_subcommand("group-info", "print order and Sylow-2 structure of a group");
  std::string info_group;
  std::optional<std::size_t> info_cap;
  info->add_option("--group", info_group, "group spec")->required();
  info->add_option("--max-order", info_cap, "group enumeration cap");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  SuiteOptions options;
  verify->add_option("suite", suite, "one of: sl2 ngq sub conjugate ns ele oracle-equivalence psl")
      ->required();
  verify->add_option("--max-order", options.max_order, "corpus group-order filter")
      ->capture_default_str();
  verify->add_option("--oracle-bound", options.oracle_index_bound,
                     "index bound for the search oracle")
      ->capture_default_str();
  verify->add_option("--seed", options.seed, "sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (check->parsed()) {
    if (sub_opt->count() == 0 && sample_opt->count() == 0)
      throw ParseError("check needs --subgroup or --subgroup-order-sample");
    const BuiltGroup bg = build_group(check_group, resolve_order_cap(check_cap));
    if (sample_opt->count() != 0) return cmd_check_sample(bg, format);
    return cmd_check_single(bg, check_subgroup, want_witness, cross, oracle_bound, format);
  }
  if (info->parsed())
    return cmd_group_info(build_group(info_group, resolve_order_cap(info_cap)), format);
  return cmd_verify(suite, options, format);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}
