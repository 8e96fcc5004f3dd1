#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigsum/integer_set.hpp"
#include "sigsum/sumset.hpp"
#include "sigsum/theorems.hpp"

namespace sigsum {

/// Family of sets to sweep: every k-subset of [-M, M] for k in
/// [k_min, k_max], optionally restricted to one sign regime, crossed with
/// h in [h_min, h_max].
struct FamilySpec {
  std::int64_t k_min = 1;
  std::int64_t k_max = 5;
  std::int64_t element_bound = 12;  // M
  std::int64_t h_min = 1;
  std::int64_t h_max = 5;
  std::optional<CaseTag> case_filter;
};

/// Number of k-subsets of [-M, M] over the k range, before case filtering.
/// Saturates at UINT64_MAX.
std::uint64_t family_size(const FamilySpec& spec);

inline constexpr std::uint64_t kDefaultFamilyBudget = 10'000'000;

/// All family members, k ascending then lexicographic by elements.
/// Throws BudgetExceededError when the unfiltered count exceeds the budget.
std::vector<IntegerSet> enumerate_family(
    const FamilySpec& spec, std::uint64_t budget = kDefaultFamilyBudget);

using WitnessValue = std::variant<std::int64_t, std::string>;

/// One counterexample: a pair (A, h) where a predicate's expectation failed.
struct Witness {
  IntegerSet set;
  std::int64_t h;
  std::string predicate;
  WitnessValue expected;
  WitnessValue actual;
};

struct VerificationSummary {
  std::string predicate_id;
  std::uint64_t sets_checked = 0;     // family members enumerated
  std::uint64_t pairs_checked = 0;    // (A, h) pairs the predicate asserted on
  std::uint64_t tight_count = 0;
  std::uint64_t violation_count = 0;  // exact, even when the list is capped
  std::vector<Witness> violations;    // first witnesses in enumeration order
  double runtime_seconds = 0;         // informational; not serialized

  bool passed() const { return violation_count == 0; }
};

struct VerifyOptions {
  int jobs = 0;  // 0 -> hardware concurrency
  std::size_t witness_cap = 100;
  std::uint64_t family_budget = kDefaultFamilyBudget;
  EngineLimits limits{};
};

/// Known predicate ids:
///   OracleEq              DP signed sumset == naive enumeration
///   T1  T3  T5  T7        direct lower bounds per sign regime
///   T2  T4  T6  T8        inverse structure characterizations
///   RemarkK2              k = 2 cap |h+-A| <= 4h and the 4h equality rule
///   ThmA ThmB             classical h-fold sumset bound and AP equality
///   Containment           hA u h(-A)  c  h+-A  c  h(A u -A)
///   Dilation              h+-(alpha*A) == alpha*(h+-A)
///   NegSym                h+-A == -(h+-A)
/// Each predicate skips (A, h) pairs outside its hypotheses except along
/// deliberately probeable axes (T3 checks its bound for every k >= 1, which
/// is how the k = 2 boundary examples surface as witnesses).
const std::vector<std::string>& predicate_ids();

bool is_known_predicate(const std::string& id);

/// Evaluates one predicate over the family. Deterministic for a given
/// spec: chunked parallel evaluation merges in enumeration order, so the
/// job count never changes the result.
VerificationSummary verify(const std::string& predicate_id,
                           const FamilySpec& spec,
                           const VerifyOptions& options = {});

struct TightSet {
  IntegerSet set;
  DirectReport report;
  std::optional<InverseVerdict> verdict;
};

/// Every family member whose direct report is tight at the given h,
/// in enumeration order, with its structural verdict where one applies.
std::vector<TightSet> scan_tight_sets(const FamilySpec& spec, std::int64_t h,
                                      const VerifyOptions& options = {});

}  // namespace sigsum
