#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigsum/errors.hpp"

namespace sigsum {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// A canonical finite set of integers: strictly increasing, never empty.
/// Elements are bounded to |a| <= INT64_MAX so every magnitude has a
/// representable negation; the h-dependent range checks live in the
/// sumset routines.
class IntegerSet {
 public:
  /// Sorts and deduplicates. Throws EmptyInputError on an empty list.
  static IntegerSet normalize(std::vector<std::int64_t> values);

  /// Like normalize, but also reports how many duplicates were dropped.
  static IntegerSet normalize(std::vector<std::int64_t> values,
                              std::size_t& duplicates_removed);

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  std::int64_t k() const { return static_cast<std::int64_t>(elems_.size()); }

  std::int64_t min() const { return elems_.front(); }
  std::int64_t max() const { return elems_.back(); }
  /// max |a| over the set.
  std::int64_t max_abs() const;

  bool contains(std::int64_t v) const;

  /// {-a : a in A}.
  IntegerSet negated() const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const IntegerSet&) const = default;
  bool operator<(const IntegerSet& other) const { return elems_ < other.elems_; }

  std::string to_string() const;

 private:
  explicit IntegerSet(std::vector<std::int64_t> sorted_unique);

  std::vector<std::int64_t> elems_;
};

/// Sign regime of a set; exactly one tag applies.
enum class CaseTag {
  PositiveOnly,     // min > 0
  NonnegWithZero,   // min = 0
  MixedSign,        // min < 0 < max
  NegativeOnly,     // max < 0
  NonposWithZero,   // max = 0, k >= 2
};

CaseTag classify(const IntegerSet& a);

const char* case_tag_name(CaseTag tag);
std::optional<CaseTag> case_tag_from_name(const std::string& name);

/// {alpha * a : a in A}. alpha must be nonzero; products are checked.
IntegerSet dilate(const IntegerSet& a, std::int64_t alpha);

/// True for every set with k <= 2.
bool is_arithmetic_progression(const IntegerSet& a);

enum class StructureKind {
  OddApDilate,    // d*{1,3,...,2k-1}: AP with first = d > 0, difference 2d
  IntervalDilate, // d*[0,k-1]: AP with first = 0, difference d
  SymmetricAp,    // AP with a_i = -a_{k-1-i}
  GeneralAp,      // AP matching none of the above (every k <= 2 set is an AP)
  None,           // not an AP
};

struct Structure {
  StructureKind kind = StructureKind::None;
  std::optional<std::int64_t> d;      // difference / dilation factor
  std::optional<std::int64_t> first;  // omitted where d determines it

  bool operator==(const Structure&) const = default;

  std::string to_string() const;
};

/// Most specific structure under the priority
/// OddApDilate > IntervalDilate > SymmetricAp > GeneralAp > None.
/// Singletons report GeneralAp with no d; the special kinds need k >= 2.
Structure detect_structure(const IntegerSet& a);

const char* structure_kind_name(StructureKind kind);

}  // namespace sigsum
