#include "sigsum/theorems.hpp"

#include <vector>

namespace sigsum {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::T8: return "T8";
  }
  return "?";
}

std::optional<BoundInfo> lower_bound_info(CaseTag tag, std::int64_t k,
                                          std::int64_t h) {
  if (k < 1 || h < 1)
    throw UnsupportedParametersError("lower_bound needs k >= 1 and h >= 1");
  const std::int64_t hk = checked_mul(h, k);
  switch (tag) {
    case CaseTag::PositiveOnly:
    case CaseTag::NegativeOnly:
      if (h >= 3 && k >= 3)
        return BoundInfo{2 * hk - h + 1, TheoremId::T3};
      return BoundInfo{2 * (hk - h + 1), TheoremId::T1};
    case CaseTag::NonnegWithZero:
    case CaseTag::NonposWithZero:
      return BoundInfo{2 * hk - 2 * h + 1, TheoremId::T5};
    case CaseTag::MixedSign:
      return BoundInfo{hk - h + 1, TheoremId::T7};
  }
  return std::nullopt;
}

std::optional<std::int64_t> lower_bound(CaseTag tag, std::int64_t k,
                                        std::int64_t h) {
  auto info = lower_bound_info(tag, k, h);
  if (!info) return std::nullopt;
  return info->value;
}

std::optional<std::int64_t> remark_k2_prediction(std::int64_t a0,
                                                 std::int64_t a1,
                                                 std::int64_t h) {
  if (!(0 < a0 && a0 < a1))
    throw UnsupportedParametersError("remark_k2_prediction needs 0 < a0 < a1");
  if (h < 3)
    throw UnsupportedParametersError("remark_k2_prediction needs h >= 3");
  if (checked_mul(2, checked_mul(h, a0)) < checked_add(a0, a1))
    return 4 * h;
  return std::nullopt;
}

DirectReport check_direct(const IntegerSet& a, std::int64_t h,
                          const EngineLimits& limits) {
  const CaseTag tag = classify(a);
  const IntegerSet result = signed_sumset(a, h, limits);
  const auto info = lower_bound_info(tag, a.k(), h);
  const auto card = static_cast<std::int64_t>(result.size());
  DirectReport report{a,
                      h,
                      tag,
                      info ? std::optional<std::int64_t>(info->value) : std::nullopt,
                      info ? std::optional<TheoremId>(info->source) : std::nullopt,
                      card,
                      info && card == info->value};
  return report;
}

std::optional<InverseVerdict> check_inverse(const DirectReport& report) {
  if (!report.tight || report.set.k() < 2) return std::nullopt;

  CaseTag tag = report.case_tag;
  IntegerSet subject = report.set;
  if (tag == CaseTag::NegativeOnly || tag == CaseTag::NonposWithZero) {
    subject = subject.negated();
    tag = classify(subject);
  }

  std::optional<TheoremId> theorem;
  StructureKind expected_kind = StructureKind::None;
  switch (tag) {
    case CaseTag::PositiveOnly:
      if (report.h == 2) {
        theorem = TheoremId::T2;
        expected_kind = StructureKind::OddApDilate;
      } else if (report.h >= 3 && subject.k() >= 3) {
        theorem = TheoremId::T4;
        expected_kind = StructureKind::OddApDilate;
      }
      break;
    case CaseTag::NonnegWithZero:
      if (report.h >= 2) {
        theorem = TheoremId::T6;
        expected_kind = StructureKind::IntervalDilate;
      }
      break;
    case CaseTag::MixedSign:
      if (report.h >= 2) {
        theorem = TheoremId::T8;
        expected_kind = StructureKind::SymmetricAp;
      }
      break;
    default:
      break;
  }
  if (!theorem) return std::nullopt;

  const Structure observed = detect_structure(subject);
  return InverseVerdict{*theorem,
                        Structure{expected_kind, std::nullopt, std::nullopt},
                        observed, observed.kind == expected_kind};
}

std::optional<InverseVerdict> check_inverse(const IntegerSet& a, std::int64_t h,
                                            const EngineLimits& limits) {
  return check_inverse(check_direct(a, h, limits));
}

IntegerSet construct_extremal(CaseTag tag, std::int64_t k, std::int64_t h,
                              std::int64_t d) {
  if (k < 1 || h < 1 || d < 1)
    throw UnsupportedParametersError("construct_extremal needs k, h, d >= 1");
  std::vector<std::int64_t> values;
  switch (tag) {
    case CaseTag::PositiveOnly:
      for (std::int64_t i = 0; i < k; ++i)
        values.push_back(checked_mul(d, 2 * i + 1));
      break;
    case CaseTag::NonnegWithZero:
      for (std::int64_t i = 0; i < k; ++i) values.push_back(checked_mul(d, i));
      break;
    case CaseTag::MixedSign: {
      if (k < 3 || k % 2 == 0)
        throw UnsupportedParametersError(
            "the mixed-sign construction needs odd k >= 3");
      const std::int64_t half = k / 2;
      for (std::int64_t i = -half; i <= half; ++i)
        values.push_back(checked_mul(d, i));
      break;
    }
    default:
      throw UnsupportedParametersError(
          "no construction for negative-side tags; negate the positive one");
  }
  return IntegerSet::normalize(std::move(values));
}

bool is_odd_ap_dilate_member(const IntegerSet& a) {
  const std::int64_t d = a.min();
  if (d <= 0) return false;
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != d * (2 * static_cast<std::int64_t>(i) + 1)) return false;
  return true;
}

bool is_interval_dilate_member(const IntegerSet& a) {
  if (a.min() != 0) return false;
  if (a.size() == 1) return true;
  const std::int64_t d = a.elements()[1];
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != d * static_cast<std::int64_t>(i)) return false;
  return true;
}

bool is_symmetric(const IntegerSet& a) {
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != -e[e.size() - 1 - i]) return false;
  return true;
}

}  // namespace sigsum
