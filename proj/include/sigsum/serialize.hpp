#pragma once

#include <string>

#include "json.hpp"
#include "sigsum/harness.hpp"
#include "sigsum/theorems.hpp"

namespace sigsum {

// All emitters use ordered_json so key order is fixed; sets are emitted
// ascending and integers stay unquoted. runtime_seconds is deliberately
// left out of summaries to keep repeated runs byte-identical.

using json = nlohmann::ordered_json;

json to_json(const IntegerSet& set);
json to_json(const Structure& structure);
json to_json(const Witness& witness);
json to_json(const VerificationSummary& summary);
json to_json(const DirectReport& report);
json to_json(const InverseVerdict& verdict);
json to_json(const TightSet& tight);

/// Top-level document: {schema_version, command, inputs, result}.
json output_record(const std::string& command, json inputs, json result);

std::string to_tsv(const VerificationSummary& summary);
std::string to_tsv(const DirectReport& report);
std::string to_tsv(const std::vector<TightSet>& tights);

inline constexpr const char* kSchemaVersion = "1.0";

}  // namespace sigsum
