#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sigsum/integer_set.hpp"
#include "sigsum/sumset.hpp"

namespace sigsum {

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8 };

const char* theorem_name(TheoremId id);

/// Lower bound on |h+-A| for a set with the given tag and cardinality k:
///   positive (and negative, by negation):  2hk-h+1 when h >= 3 and k >= 3,
///                                          else 2(hk-h+1)
///   zero-containing nonnegative (and nonpositive):  2hk-2h+1
///   mixed sign:  hk-h+1
std::optional<std::int64_t> lower_bound(CaseTag tag, std::int64_t k,
                                        std::int64_t h);

/// Same dispatch, also reporting which bound fired.
struct BoundInfo {
  std::int64_t value;
  TheoremId source;
};
std::optional<BoundInfo> lower_bound_info(CaseTag tag, std::int64_t k,
                                          std::int64_t h);

/// For A = {a0, a1} with 0 < a0 < a1 and h >= 3: |h+-A| = 4h exactly when
/// 2*h*a0 < a0 + a1 (compared in exact integer arithmetic). Returns 4h in
/// that case, nullopt otherwise. 4h is an upper bound for every k = 2 set
/// regardless; the harness asserts that separately.
std::optional<std::int64_t> remark_k2_prediction(std::int64_t a0,
                                                 std::int64_t a1,
                                                 std::int64_t h);

struct DirectReport {
  IntegerSet set;
  std::int64_t h;
  CaseTag case_tag;
  std::optional<std::int64_t> bound;
  std::optional<TheoremId> bound_source;
  std::int64_t cardinality;
  bool tight;

  /// True when the computed cardinality falls below the applicable bound;
  /// such a report is itself a theorem violation.
  bool violated() const { return bound && cardinality < *bound; }
};

/// Computes |h+-A|, the applicable bound (negative-side tags reduce through
/// A -> -A, which preserves the cardinality), and tightness.
DirectReport check_direct(const IntegerSet& a, std::int64_t h,
                          const EngineLimits& limits = {});

struct InverseVerdict {
  TheoremId theorem;
  Structure expected;  // kind-level expectation
  Structure observed;
  bool matches;
};

/// Structural verdict for a tight set. Dispatch:
///   positive, h = 2, tight at 2(hk-h+1)          -> OddApDilate   (T2)
///   positive, h >= 3, k >= 3, tight at 2hk-h+1   -> OddApDilate   (T4)
///   zero, h >= 2, tight at 2hk-2h+1              -> IntervalDilate (T6)
///   mixed, h >= 2, tight at hk-h+1               -> SymmetricAp   (T8)
/// All cases need k >= 2 (singletons carry no structure verdict). Returns
/// nullopt when the report is not tight or no characterization applies.
/// Negative-side tags are dispatched on the negated set.
std::optional<InverseVerdict> check_inverse(const IntegerSet& a, std::int64_t h,
                                            const EngineLimits& limits = {});
std::optional<InverseVerdict> check_inverse(const DirectReport& report);

/// Extremal family achieving the bound for its regime:
///   positive:  d*{1,3,...,2k-1}
///   zero:      d*[0,k-1]
///   mixed:     d*[-(k-1)/2,(k-1)/2], k odd, k >= 3
IntegerSet construct_extremal(CaseTag tag, std::int64_t k, std::int64_t h,
                              std::int64_t d);

/// Membership tests for the extremal families, valid for every k >= 1
/// (a singleton {a}, a > 0, is a*{1}; {0} is d*[0,0]).
bool is_odd_ap_dilate_member(const IntegerSet& a);
bool is_interval_dilate_member(const IntegerSet& a);
bool is_symmetric(const IntegerSet& a);

}  // namespace sigsum
