#include "perfcode/report.hpp"

#include <sstream>

namespace perfcode {
namespace {

using nlohmann::json;

std::string cycle_or_identity(const Permutation& p) {
  const std::string s = p.cycle_string();
  return s.empty() ? "()" : s;
}

json base_document(const char* command, const GroupSpec& spec, std::int64_t timing_ms) {
  json doc;
  doc["schema"] = kReportSchemaVersion;
  doc["command"] = command;
  doc["group"] = spec.format();
  doc["timing_ms"] = timing_ms;
  return doc;
}

json trace_json(const std::vector<ReductionStep>& trace) {
  json arr = json::array();
  for (const ReductionStep& step : trace) arr.push_back({{"label", step.label}, {"order", step.order}});
  return arr;
}

std::string trace_text(const std::vector<ReductionStep>& trace) {
  std::ostringstream os;
  bool first = true;
  for (const ReductionStep& step : trace) {
    if (!first) os << "; ";
    first = false;
    os << step.label << " order " << step.order;
  }
  return os.str();
}

}  // namespace

json check_json(const CheckOutcome& o) {
  json doc = base_document("check", o.spec, o.timing_ms);
  doc["subgroup"] = o.subgroup_input;
  doc["group_order"] = o.group_order;
  doc["subgroup_order"] = o.subgroup_order;
  doc["is_perfect_code"] = o.report.is_perfect_code;
  doc["path"] = decision_path_name(o.report.path);
  doc["reduction_trace"] = trace_json(o.report.reduction_trace);
  doc["shortcuts"] = json(o.shortcuts);
  if (o.psl_case) doc["psl_case"] = *o.psl_case;
  if (o.want_witness)
    doc["witness"] = o.report.witness ? json(cycle_or_identity(*o.report.witness)) : json();
  if (o.cross_checked) {
    json cross;
    cross["criterion_agrees"] = o.basic_agrees;
    if (o.oracle_skipped) {
      cross["oracle"] = "skipped";
    } else {
      cross["oracle"] = *o.oracle_found ? "found" : "none";
      if (o.want_witness && *o.oracle_found) {
        json set = json::array();
        for (const Permutation& s : o.oracle_set) set.push_back(cycle_or_identity(s));
        cross["connection_set"] = set;
      }
    }
    doc["cross_check"] = cross;
  }
  return doc;
}

std::string check_text(const CheckOutcome& o) {
  std::ostringstream os;
  os << "group:           " << o.spec.format() << "  (order " << o.group_order << ")\n";
  os << "subgroup:        " << o.subgroup_input << "  (order " << o.subgroup_order << ")\n";
  os << "is_perfect_code: " << (o.report.is_perfect_code ? "true" : "false") << "\n";
  os << "decision path:   " << decision_path_name(o.report.path) << "\n";
  if (!o.report.reduction_trace.empty())
    os << "reduction:       " << trace_text(o.report.reduction_trace) << "\n";
  if (!o.shortcuts.empty()) {
    os << "shortcuts:       ";
    bool first = true;
    for (const std::string& s : o.shortcuts) {
      if (!first) os << ", ";
      first = false;
      os << s;
    }
    os << "\n";
  }
  if (o.psl_case) os << "psl case:        " << *o.psl_case << "\n";
  if (o.want_witness && o.report.witness)
    os << "witness:         " << cycle_or_identity(*o.report.witness) << "\n";
  if (o.cross_checked) {
    os << "cross-check:     double-coset criterion "
       << (o.basic_agrees ? "agrees" : "DISAGREES") << "; oracle ";
    if (o.oracle_skipped)
      os << "skipped (out of bounds)";
    else if (*o.oracle_found)
      os << "found a connection set"
         << (*o.oracle_found == o.report.is_perfect_code ? "" : " (DISAGREES)");
    else
      os << "found none" << (!o.report.is_perfect_code ? "" : " (DISAGREES)");
    os << "\n";
    if (o.want_witness && o.oracle_found && *o.oracle_found) {
      os << "connection set:  ";
      bool first = true;
      for (const Permutation& s : o.oracle_set) {
        if (!first) os << "; ";
        first = false;
        os << cycle_or_identity(s);
      }
      os << "\n";
    }
  }
  os << "time:            " << o.timing_ms << " ms\n";
  return os.str();
}

json sample_json(const SampleOutcome& o) {
  json doc = base_document("check", o.spec, o.timing_ms);
  doc["sample"] = "cyclic";
  doc["group_order"] = o.group_order;
  json rows = json::array();
  for (const SampleRow& row : o.rows) {
    json r;
    r["generator"] = row.generator;
    r["order"] = row.order;
    r["is_perfect_code"] = row.is_perfect_code;
    r["path"] = row.path;
    if (row.psl_case) r["psl_case"] = *row.psl_case;
    if (row.classification_agrees) r["classification_agrees"] = *row.classification_agrees;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["consistent"] = o.consistent();
  return doc;
}

std::string sample_text(const SampleOutcome& o) {
  std::ostringstream os;
  os << "group: " << o.spec.format() << "  (order " << o.group_order << ")\n";
  os << "cyclic subgroups: " << o.rows.size() << "\n";
  for (const SampleRow& row : o.rows) {
    os << "  order " << row.order << "  code=" << (row.is_perfect_code ? "true" : "false")
       << "  path=" << row.path;
    if (row.psl_case) os << "  case=" << *row.psl_case;
    if (row.classification_agrees)
      os << "  agrees=" << (*row.classification_agrees ? "true" : "false");
    os << "  gen=" << row.generator << "\n";
  }
  os << "consistent: " << (o.consistent() ? "true" : "false") << "\n";
  os << "time: " << o.timing_ms << " ms\n";
  return os.str();
}

json group_info_json(const GroupInfoOutcome& o) {
  json doc = base_document("group-info", o.spec, o.timing_ms);
  doc["order"] = o.order;
  doc["degree"] = o.degree;
  doc["two_part"] = o.two_part_of_order;
  doc["abelian"] = o.abelian;
  doc["sylow2"] = {{"order", o.sylow2_order},
                   {"cyclic", o.sylow2_cyclic},
                   {"dihedral", o.sylow2_dihedral},
                   {"elementary_abelian", o.sylow2_elementary_abelian},
                   {"abelian", o.sylow2_abelian}};
  doc["every_subgroup_is_perfect_code"] = o.every_subgroup_perfect_code;
  doc["generators"] = json(o.generators);
  if (o.field_order)
    doc["field"] = {{"order", *o.field_order}, {"modulus", json(o.field_modulus)}};
  return doc;
}

std::string group_info_text(const GroupInfoOutcome& o) {
  std::ostringstream os;
  os << "group:     " << o.spec.format() << "\n";
  os << "order:     " << o.order << "  (2-part " << o.two_part_of_order << ")\n";
  os << "degree:    " << o.degree << "\n";
  os << "abelian:   " << (o.abelian ? "true" : "false") << "\n";
  os << "sylow2:    order " << o.sylow2_order << ", cyclic=" << (o.sylow2_cyclic ? "true" : "false")
     << ", dihedral=" << (o.sylow2_dihedral ? "true" : "false")
     << ", elementary_abelian=" << (o.sylow2_elementary_abelian ? "true" : "false")
     << ", abelian=" << (o.sylow2_abelian ? "true" : "false") << "\n";
  os << "every_subgroup_is_perfect_code: "
     << (o.every_subgroup_perfect_code ? "true" : "false") << "\n";
  if (o.field_order) {
    os << "field:     GF(" << *o.field_order << "), modulus [";
    for (std::size_t i = 0; i < o.field_modulus.size(); ++i) {
      if (i) os << ' ';
      os << o.field_modulus[i];
    }
    os << "] (constant term first)\n";
  }
  os << "generators: ";
  bool first = true;
  for (const std::string& g : o.generators) {
    if (!first) os << "; ";
    first = false;
    os << g;
  }
  os << "\n";
  os << "time:      " << o.timing_ms << " ms\n";
  return os.str();
}

json verify_json(const VerifyOutcome& o) {
  json doc;
  doc["schema"] = kReportSchemaVersion;
  doc["command"] = "verify";
  doc["suite"] = o.result.suite;
  doc["checked"] = o.result.checked;
  doc["groups"] = json(o.result.lines);
  doc["failures"] = json(o.result.failures);
  doc["ok"] = o.result.ok();
  doc["timing_ms"] = o.timing_ms;
  return doc;
}

std::string verify_text(const VerifyOutcome& o) {
  std::ostringstream os;
  os << "suite: " << o.result.suite << "\n";
  for (const std::string& line : o.result.lines) os << "  " << line << "\n";
  os << "checks: " << o.result.checked << "\n";
  if (o.result.failures.empty()) {
    os << "result: ok\n";
  } else {
    os << "result: " << o.result.failures.size() << " counterexample(s)\n";
    for (const std::string& f : o.result.failures) os << "  FAIL " << f << "\n";
  }
  os << "time: " << o.timing_ms << " ms\n";
  return os.str();
}

}  // namespace perfcode
