#include "sigsum/integer_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace sigsum {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer addition overflows 64 bits");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer multiplication overflows 64 bits");
  return out;
}

IntegerSet::IntegerSet(std::vector<std::int64_t> sorted_unique)
    : elems_(std::move(sorted_unique)) {}

IntegerSet IntegerSet::normalize(std::vector<std::int64_t> values) {
  std::size_t ignored = 0;
  return normalize(std::move(values), ignored);
}

IntegerSet IntegerSet::normalize(std::vector<std::int64_t> values,
                                 std::size_t& duplicates_removed) {
  if (values.empty()) throw EmptyInputError();
  for (std::int64_t v : values) {
    if (v == std::numeric_limits<std::int64_t>::min())
      throw OverflowError("element magnitude exceeds the 64-bit bound");
  }
  std::sort(values.begin(), values.end());
  const std::size_t before = values.size();
  values.erase(std::unique(values.begin(), values.end()), values.end());
  duplicates_removed = before - values.size();
  return IntegerSet(std::move(values));
}

std::int64_t IntegerSet::max_abs() const {
  return std::max(std::abs(min()), std::abs(max()));
}

bool IntegerSet::contains(std::int64_t v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

IntegerSet IntegerSet::negated() const {
  std::vector<std::int64_t> out(elems_.rbegin(), elems_.rend());
  for (auto& v : out) v = -v;
  return IntegerSet(std::move(out));
}

std::string IntegerSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elems_[i]);
  }
  s += "}";
  return s;
}

CaseTag classify(const IntegerSet& a) {
  if (a.min() > 0) return CaseTag::PositiveOnly;
  if (a.min() == 0) return CaseTag::NonnegWithZero;
  if (a.max() < 0) return CaseTag::NegativeOnly;
  if (a.max() == 0) return CaseTag::NonposWithZero;
  return CaseTag::MixedSign;
}

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::PositiveOnly: return "positive";
    case CaseTag::NonnegWithZero: return "zero";
    case CaseTag::MixedSign: return "mixed";
    case CaseTag::NegativeOnly: return "negative";
    case CaseTag::NonposWithZero: return "nonpos-zero";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_name(const std::string& name) {
  if (name == "positive") return CaseTag::PositiveOnly;
  if (name == "zero") return CaseTag::NonnegWithZero;
  if (name == "mixed") return CaseTag::MixedSign;
  if (name == "negative") return CaseTag::NegativeOnly;
  if (name == "nonpos-zero") return CaseTag::NonposWithZero;
  return std::nullopt;
}

IntegerSet dilate(const IntegerSet& a, std::int64_t alpha) {
  if (alpha == 0)
    throw UnsupportedParametersError("dilation factor must be nonzero");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (std::int64_t v : a) out.push_back(checked_mul(v, alpha));
  if (alpha < 0) std::reverse(out.begin(), out.end());
  return IntegerSet::normalize(std::move(out));
}

bool is_arithmetic_progression(const IntegerSet& a) {
  const auto& e = a.elements();
  if (e.size() <= 2) return true;
  const std::int64_t d = e[1] - e[0];
  for (std::size_t i = 2; i < e.size(); ++i)
    if (e[i] - e[i - 1] != d) return false;
  return true;
}

Structure detect_structure(const IntegerSet& a) {
  const auto& e = a.elements();
  if (e.size() == 1)
    return Structure{StructureKind::GeneralAp, std::nullopt, e[0]};
  if (!is_arithmetic_progression(a))
    return Structure{StructureKind::None, std::nullopt, std::nullopt};

  const std::int64_t d = e[1] - e[0];
  if (e[0] > 0 && d == 2 * e[0])
    return Structure{StructureKind::OddApDilate, e[0], std::nullopt};
  if (e[0] == 0)
    return Structure{StructureKind::IntervalDilate, d, std::nullopt};

  bool symmetric = true;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != -e[e.size() - 1 - i]) { symmetric = false; break; }
  if (symmetric)
    return Structure{StructureKind::SymmetricAp, d, e[0]};

  return Structure{StructureKind::GeneralAp, d, e[0]};
}

const char* structure_kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::OddApDilate: return "OddApDilate";
    case StructureKind::IntervalDilate: return "IntervalDilate";
    case StructureKind::SymmetricAp: return "SymmetricAp";
    case StructureKind::GeneralAp: return "GeneralAp";
    case StructureKind::None: return "None";
  }
  return "?";
}

std::string Structure::to_string() const {
  std::string s = structure_kind_name(kind);
  if (d || first) {
    s += "(";
    if (d) s += "d=" + std::to_string(*d);
    if (first) {
      if (d) s += ",";
      s += "first=" + std::to_string(*first);
    }
    s += ")";
  }
  return s;
}

}  // namespace sigsum
