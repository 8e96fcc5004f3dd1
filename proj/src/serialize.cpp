#include "sigsum/serialize.hpp"

namespace sigsum {
namespace {

json value_to_json(const WitnessValue& value) {
  if (std::holds_alternative<std::int64_t>(value))
    return std::get<std::int64_t>(value);
  return std::get<std::string>(value);
}

std::string tsv_value(const WitnessValue& value) {
  if (std::holds_alternative<std::int64_t>(value))
    return std::to_string(std::get<std::int64_t>(value));
  return std::get<std::string>(value);
}

}  // namespace

json to_json(const IntegerSet& set) {
  return json(set.elements());
}

json to_json(const Structure& structure) {
  json j;
  j["kind"] = structure_kind_name(structure.kind);
  j["d"] = structure.d ? json(*structure.d) : json(nullptr);
  j["first"] = structure.first ? json(*structure.first) : json(nullptr);
  return j;
}

json to_json(const Witness& witness) {
  json j;
  j["set"] = to_json(witness.set);
  j["h"] = witness.h;
  j["predicate"] = witness.predicate;
  j["expected"] = value_to_json(witness.expected);
  j["actual"] = value_to_json(witness.actual);
  return j;
}

json to_json(const VerificationSummary& summary) {
  json j;
  j["predicate"] = summary.predicate_id;
  j["sets_checked"] = summary.sets_checked;
  j["pairs_checked"] = summary.pairs_checked;
  j["tight_count"] = summary.tight_count;
  j["violation_count"] = summary.violation_count;
  json witnesses = json::array();
  for (const auto& w : summary.violations) witnesses.push_back(to_json(w));
  j["violations"] = std::move(witnesses);
  return j;
}

json to_json(const DirectReport& report) {
  json j;
  j["set"] = to_json(report.set);
  j["h"] = report.h;
  j["case"] = case_tag_name(report.case_tag);
  j["bound"] = report.bound ? json(*report.bound) : json(nullptr);
  j["bound_theorem"] =
      report.bound_source ? json(theorem_name(*report.bound_source)) : json(nullptr);
  j["cardinality"] = report.cardinality;
  j["tight"] = report.tight;
  return j;
}

json to_json(const InverseVerdict& verdict) {
  json j;
  j["theorem"] = theorem_name(verdict.theorem);
  j["expected"] = structure_kind_name(verdict.expected.kind);
  j["observed"] = verdict.observed.to_string();
  j["matches"] = verdict.matches;
  return j;
}

json to_json(const TightSet& tight) {
  json j;
  j["set"] = to_json(tight.set);
  j["cardinality"] = tight.report.cardinality;
  j["bound"] = tight.report.bound ? json(*tight.report.bound) : json(nullptr);
  j["verdict"] = tight.verdict ? to_json(*tight.verdict) : json(nullptr);
  return j;
}

json output_record(const std::string& command, json inputs, json result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  return j;
}

std::string to_tsv(const VerificationSummary& summary) {
  std::string out =
      "predicate\tsets_checked\tpairs_checked\ttight_count\tviolation_count\n";
  out += summary.predicate_id + "\t" + std::to_string(summary.sets_checked) +
         "\t" + std::to_string(summary.pairs_checked) + "\t" +
         std::to_string(summary.tight_count) + "\t" +
         std::to_string(summary.violation_count) + "\n";
  for (const auto& w : summary.violations) {
    out += "witness\t" + w.set.to_string() + "\t" + std::to_string(w.h) +
           "\t" + tsv_value(w.expected) + "\t" + tsv_value(w.actual) + "\n";
  }
  return out;
}

std::string to_tsv(const DirectReport& report) {
  std::string out;
  out += "set\t" + report.set.to_string() + "\n";
  out += "h\t" + std::to_string(report.h) + "\n";
  out += std::string("case\t") + case_tag_name(report.case_tag) + "\n";
  out += "bound\t" +
         (report.bound ? std::to_string(*report.bound) : std::string("n/a")) +
         "\n";
  out += "cardinality\t" + std::to_string(report.cardinality) + "\n";
  out += std::string("tight\t") + (report.tight ? "true" : "false") + "\n";
  return out;
}

std::string to_tsv(const std::vector<TightSet>& tights) {
  std::string out = "set\tcardinality\tbound\ttheorem\texpected\tobserved\tmatches\n";
  for (const auto& t : tights) {
    out += t.set.to_string() + "\t" + std::to_string(t.report.cardinality) +
           "\t" +
           (t.report.bound ? std::to_string(*t.report.bound) : std::string("n/a"));
    if (t.verdict) {
      out += std::string("\t") + theorem_name(t.verdict->theorem) + "\t" +
             structure_kind_name(t.verdict->expected.kind) + "\t" +
             t.verdict->observed.to_string() + "\t" +
             (t.verdict->matches ? "true" : "false");
    } else {
      out += "\tn/a\tn/a\tn/a\tn/a";
    }
    out += "\n";
  }
  return out;
}

}  // namespace sigsum
