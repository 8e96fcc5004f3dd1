// Command-line surface: compute / verify / scan / construct with
// deterministic JSON (default) or TSV output.
//
// Exit codes: 0 success or verified, 1 violations found, 2 usage error,
// 3 resource budget exceeded, 4 arithmetic overflow.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigsum/harness.hpp"
#include "sigsum/serialize.hpp"

namespace {

using namespace sigsum;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitOverflow = 4;

std::vector<std::int64_t> parse_int_list(const std::string& literal) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    if (comma == std::string::npos) comma = literal.size();
    std::string token = literal.substr(pos, comma - pos);
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw UnsupportedParametersError("empty entry in set literal");
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UnsupportedParametersError("cannot parse integer '" + token + "'");
    }
    pos = comma + 1;
    if (comma == literal.size()) break;
  }
  return values;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, sep)), std::stoll(text.substr(sep + 2))};
  } catch (const std::exception&) {
    throw UnsupportedParametersError("cannot parse range '" + text +
                                     "' (expected N or LO..HI)");
  }
}

void apply_budget_env(VerifyOptions& options) {
  if (const char* env = std::getenv("SIGSUM_BUDGET")) {
    try {
      const std::uint64_t budget = std::stoull(env);
      options.family_budget = budget;
      options.limits.naive_budget = budget;
    } catch (const std::exception&) {
      throw UnsupportedParametersError("SIGSUM_BUDGET is not an integer: " +
                                       std::string(env));
    }
  }
}

void emit(const json& doc, const std::string& format, const std::string& tsv) {
  if (format == "tsv")
    std::cout << tsv;
  else
    std::cout << doc.dump(2) << "\n";
}

int cmd_compute(const std::string& set_literal, std::int64_t h,
                const std::string& kind, const std::string& format) {
  VerifyOptions options;
  apply_budget_env(options);

  std::size_t duplicates = 0;
  const IntegerSet a =
      IntegerSet::normalize(parse_int_list(set_literal), duplicates);
  if (duplicates > 0)
    std::cerr << "warning: removed " << duplicates << " duplicate value"
              << (duplicates == 1 ? "" : "s") << "\n";

  IntegerSet result = kind == "plain"
                          ? sumset(a, h, options.limits)
                          : (kind == "naive"
                                 ? signed_sumset_naive(a, h, options.limits)
                                 : signed_sumset(a, h, options.limits));
  const auto cardinality = static_cast<std::int64_t>(result.size());

  std::optional<std::int64_t> bound;
  std::string bound_theorem;
  bool tight = false;
  if (kind == "plain") {
    bound = h * a.k() - h + 1;
    bound_theorem = "ThmA";
  } else if (auto info = lower_bound_info(classify(a), a.k(), h)) {
    bound = info->value;
    bound_theorem = theorem_name(info->source);
  }
  tight = bound && cardinality == *bound;

  json inputs;
  inputs["set"] = to_json(a);
  inputs["h"] = h;
  inputs["kind"] = kind;
  inputs["duplicates_removed"] = duplicates;
  json payload;
  payload["set"] = to_json(result);
  payload["cardinality"] = cardinality;
  payload["case"] = case_tag_name(classify(a));
  payload["bound"] = bound ? json(*bound) : json(nullptr);
  payload["bound_theorem"] = bound ? json(bound_theorem) : json(nullptr);
  payload["tight"] = tight;

  std::string tsv;
  tsv += "set\t" + result.to_string() + "\n";
  tsv += "cardinality\t" + std::to_string(cardinality) + "\n";
  tsv += std::string("case\t") + case_tag_name(classify(a)) + "\n";
  tsv += "bound\t" + (bound ? std::to_string(*bound) : std::string("n/a")) + "\n";
  tsv += std::string("tight\t") + (tight ? "true" : "false") + "\n";

  emit(output_record("compute", std::move(inputs), std::move(payload)), format,
       tsv);
  return kExitOk;
}

int cmd_verify(const std::string& predicate, const std::string& k_range,
               std::int64_t element_bound, const std::string& h_range,
               const std::string& case_name, int jobs,
               std::size_t witness_cap, const std::string& format) {
  if (!is_known_predicate(predicate))
    throw UnsupportedParametersError("unknown predicate '" + predicate +
                                     "'; known ids: " + [] {
                                       std::string s;
                                       for (const auto& id : predicate_ids()) {
                                         if (!s.empty()) s += ", ";
                                         s += id;
                                       }
                                       return s;
                                     }());

  FamilySpec spec;
  std::tie(spec.k_min, spec.k_max) = parse_range(k_range);
  spec.element_bound = element_bound;
  std::tie(spec.h_min, spec.h_max) = parse_range(h_range);
  if (!case_name.empty()) {
    spec.case_filter = case_tag_from_name(case_name);
    if (!spec.case_filter)
      throw UnsupportedParametersError("unknown case '" + case_name + "'");
  }

  VerifyOptions options;
  options.jobs = jobs;
  options.witness_cap = witness_cap;
  apply_budget_env(options);

  const VerificationSummary summary = verify(predicate, spec, options);
  std::cerr << "verify " << predicate << ": " << summary.sets_checked
            << " sets, " << summary.pairs_checked << " pairs, runtime "
            << summary.runtime_seconds << "s\n";

  json inputs;
  inputs["predicate"] = predicate;
  inputs["k_min"] = spec.k_min;
  inputs["k_max"] = spec.k_max;
  inputs["element_bound"] = spec.element_bound;
  inputs["h_min"] = spec.h_min;
  inputs["h_max"] = spec.h_max;
  inputs["case"] =
      spec.case_filter ? json(case_tag_name(*spec.case_filter)) : json(nullptr);
  inputs["witness_cap"] = witness_cap;
  inputs["family_budget"] = options.family_budget;
  inputs["naive_budget"] = options.limits.naive_budget;

  emit(output_record("verify", std::move(inputs), to_json(summary)), format,
       to_tsv(summary));
  return summary.passed() ? kExitOk : kExitViolations;
}

int cmd_scan(const std::string& k_range, std::int64_t element_bound,
             std::int64_t h, const std::string& case_name,
             const std::string& format) {
  FamilySpec spec;
  std::tie(spec.k_min, spec.k_max) = parse_range(k_range);
  spec.element_bound = element_bound;
  spec.h_min = spec.h_max = h;
  if (!case_name.empty()) {
    spec.case_filter = case_tag_from_name(case_name);
    if (!spec.case_filter)
      throw UnsupportedParametersError("unknown case '" + case_name + "'");
  }

  VerifyOptions options;
  apply_budget_env(options);
  const std::vector<TightSet> tights = scan_tight_sets(spec, h, options);

  std::uint64_t mismatches = 0;
  json list = json::array();
  for (const auto& t : tights) {
    if (t.verdict && !t.verdict->matches) ++mismatches;
    list.push_back(to_json(t));
  }

  json inputs;
  inputs["k_min"] = spec.k_min;
  inputs["k_max"] = spec.k_max;
  inputs["element_bound"] = spec.element_bound;
  inputs["h"] = h;
  inputs["case"] =
      spec.case_filter ? json(case_tag_name(*spec.case_filter)) : json(nullptr);
  json payload;
  payload["tight_count"] = tights.size();
  payload["mismatch_count"] = mismatches;
  payload["tight_sets"] = std::move(list);

  emit(output_record("scan", std::move(inputs), std::move(payload)), format,
       to_tsv(tights));
  return mismatches == 0 ? kExitOk : kExitViolations;
}

int cmd_construct(const std::string& case_name, std::int64_t k, std::int64_t h,
                  std::int64_t d, const std::string& format) {
  const auto tag = case_tag_from_name(case_name);
  if (!tag)
    throw UnsupportedParametersError("unknown case '" + case_name + "'");

  VerifyOptions options;
  apply_budget_env(options);
  const IntegerSet a = construct_extremal(*tag, k, h, d);
  const DirectReport report = check_direct(a, h, options.limits);

  json inputs;
  inputs["case"] = case_name;
  inputs["k"] = k;
  inputs["h"] = h;
  inputs["d"] = d;
  json payload;
  payload["set"] = to_json(a);
  payload["direct"] = to_json(report);

  emit(output_record("construct", std::move(inputs), std::move(payload)),
       format, to_tsv(report));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"signed sumset calculator and theorem verifier"};
  app.require_subcommand(1);
  // --h is an option everywhere, so help stays long-form only
  app.set_help_flag("--help", "print usage");

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  auto* compute = app.add_subcommand(
      "compute", "compute hA or h+-A for one set and report the bound");
  compute->set_help_flag("--help", "print usage");
  compute->fallthrough();
  std::string set_literal, kind = "signed";
  std::int64_t h = 1;
  compute->add_option("--set", set_literal, "comma-separated integers")
      ->required();
  compute->add_option("--h", h, "number of summands")->required();
  compute->add_option("--kind", kind, "signed | plain | naive")
      ->check(CLI::IsMember({"signed", "plain", "naive"}))
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep a predicate over an exhaustive family");
  verify_cmd->set_help_flag("--help", "print usage");
  verify_cmd->fallthrough();
  std::string predicate, k_range = "1..5", h_range = "1..5", case_name;
  std::int64_t element_bound = 12;
  int jobs = 0;
  std::size_t witness_cap = 100;
  verify_cmd->add_option("predicate", predicate, "predicate id (e.g. T5)")
      ->required();
  verify_cmd->add_option("--k", k_range, "cardinality range LO..HI");
  verify_cmd->add_option("--max", element_bound, "element bound M");
  verify_cmd->add_option("--h", h_range, "h range LO..HI");
  verify_cmd->add_option("--case", case_name,
                         "positive | zero | mixed | negative | nonpos-zero");
  verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify_cmd->add_option("--witness-cap", witness_cap,
                         "max witnesses kept in the report");

  auto* scan = app.add_subcommand(
      "scan", "list tight sets at one h with their structure verdicts");
  scan->set_help_flag("--help", "print usage");
  scan->fallthrough();
  std::string scan_k = "1..5", scan_case;
  std::int64_t scan_bound = 12, scan_h = 2;
  scan->add_option("--k", scan_k, "cardinality range LO..HI");
  scan->add_option("--max", scan_bound, "element bound M");
  scan->add_option("--h", scan_h, "number of summands")->required();
  scan->add_option("--case", scan_case,
                   "positive | zero | mixed | negative | nonpos-zero");

  auto* construct = app.add_subcommand(
      "construct", "build the extremal family member for a regime");
  construct->set_help_flag("--help", "print usage");
  construct->fallthrough();
  std::string cons_case;
  std::int64_t cons_k = 3, cons_h = 2, cons_d = 1;
  construct->add_option("--case", cons_case, "positive | zero | mixed")
      ->required();
  construct->add_option("--k", cons_k, "cardinality")->required();
  construct->add_option("--h", cons_h, "number of summands")->required();
  construct->add_option("--d", cons_d, "dilation factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compute->parsed()) return cmd_compute(set_literal, h, kind, format);
  if (verify_cmd->parsed())
    return cmd_verify(predicate, k_range, element_bound, h_range, case_name,
                      jobs, witness_cap, format);
  if (scan->parsed())
    return cmd_scan(scan_k, scan_bound, scan_h, scan_case, format);
  if (construct->parsed())
    return cmd_construct(cons_case, cons_k, cons_h, cons_d, format);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const UnsupportedParametersError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EmptyInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
