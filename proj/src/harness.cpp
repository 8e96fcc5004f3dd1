#include "sigsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace sigsum {
namespace {

void validate(const FamilySpec& spec) {
  if (spec.k_min < 1 || spec.k_min > spec.k_max)
    throw UnsupportedParametersError("family needs 1 <= k_min <= k_max");
  if (spec.h_min < 1 || spec.h_min > spec.h_max)
    throw UnsupportedParametersError("family needs 1 <= h_min <= h_max");
  if (spec.element_bound < 1)
    throw UnsupportedParametersError("family needs element bound M >= 1");
}

}  // namespace

std::uint64_t family_size(const FamilySpec& spec) {
  validate(spec);
  const auto sat = std::numeric_limits<std::uint64_t>::max();
  const std::int64_t n = 2 * spec.element_bound + 1;
  unsigned __int128 total = 0;
  for (std::int64_t k = spec.k_min; k <= std::min(spec.k_max, n); ++k) {
    unsigned __int128 c = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
      if (c > sat) return sat;
    }
    total += c;
    if (total > sat) return sat;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<IntegerSet> enumerate_family(const FamilySpec& spec,
                                         std::uint64_t budget) {
  validate(spec);
  const std::uint64_t count = family_size(spec);
  if (count > budget)
    throw BudgetExceededError("family of " + std::to_string(count) +
                                  " sets exceeds the budget of " +
                                  std::to_string(budget),
                              count);

  std::vector<IntegerSet> out;
  const std::int64_t m = spec.element_bound;
  std::vector<std::int64_t> pick;
  // k-combinations of [-M, M] in lexicographic order.
  std::function<void(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t next, std::int64_t remaining) {
        if (remaining == 0) {
          IntegerSet set = IntegerSet::normalize(pick);
          if (!spec.case_filter || classify(set) == *spec.case_filter)
            out.push_back(std::move(set));
          return;
        }
        for (std::int64_t v = next; v <= m - remaining + 1; ++v) {
          pick.push_back(v);
          rec(v + 1, remaining - 1);
          pick.pop_back();
        }
      };
  for (std::int64_t k = spec.k_min; k <= spec.k_max; ++k) rec(-m, k);
  return out;
}

namespace {

struct PairEvaluation {
  bool applicable = false;
  bool tight = false;
  std::vector<Witness> witnesses;

  void flag(const IntegerSet& a, std::int64_t h, const std::string& predicate,
            WitnessValue expected, WitnessValue actual) {
    witnesses.push_back(
        Witness{a, h, predicate, std::move(expected), std::move(actual)});
  }
};

using PredicateFn = void (*)(const IntegerSet&, std::int64_t,
                             const EngineLimits&, PairEvaluation&);

bool positive_side(CaseTag tag) {
  return tag == CaseTag::PositiveOnly || tag == CaseTag::NegativeOnly;
}

bool zero_side(CaseTag tag) {
  return tag == CaseTag::NonnegWithZero || tag == CaseTag::NonposWithZero;
}

std::int64_t card(const IntegerSet& s) {
  return static_cast<std::int64_t>(s.size());
}

void eval_oracle_eq(const IntegerSet& a, std::int64_t h,
                    const EngineLimits& limits, PairEvaluation& out) {
  out.applicable = true;
  const IntegerSet dp = signed_sumset(a, h, limits);
  const IntegerSet naive = signed_sumset_naive(a, h, limits);
  if (dp != naive)
    out.flag(a, h, "OracleEq", naive.to_string(), dp.to_string());
}

void eval_t1(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (!positive_side(classify(a))) return;
  out.applicable = true;
  const std::int64_t bound = 2 * (h * a.k() - h + 1);
  const std::int64_t n = card(signed_sumset(a, h, limits));
  if (n < bound) out.flag(a, h, "T1", bound, n);
  out.tight = n == bound;
}

void eval_t2(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (!positive_side(classify(a))) return;
  const std::int64_t bound = 2 * (h * a.k() - h + 1);
  if (h == 2 && a.k() >= 2) {
    out.applicable = true;
    const DirectReport report = check_direct(a, h, limits);
    if (report.cardinality == bound) {
      out.tight = true;
      const auto verdict = check_inverse(report);
      if (!verdict || !verdict->matches)
        out.flag(a, h, "T2", std::string("OddApDilate"),
                 verdict ? verdict->observed.to_string() : std::string("none"));
    }
  } else if (h >= 3 && a.k() >= 3) {
    out.applicable = true;
    const std::int64_t n = card(signed_sumset(a, h, limits));
    if (n == bound)
      out.flag(a, h, "T2", "cardinality != " + std::to_string(bound), n);
  }
}

void eval_t3(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  // No k filter: probing k < 3 is how the k = 2 boundary sets surface.
  if (!positive_side(classify(a)) || h < 3) return;
  out.applicable = true;
  const std::int64_t bound = 2 * h * a.k() - h + 1;
  const std::int64_t n = card(signed_sumset(a, h, limits));
  if (n < bound) out.flag(a, h, "T3", bound, n);
  out.tight = n == bound;
}

void eval_t4(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (!positive_side(classify(a)) || h < 3 || a.k() < 3) return;
  out.applicable = true;
  const DirectReport report = check_direct(a, h, limits);
  if (!report.tight) return;
  out.tight = true;
  const auto verdict = check_inverse(report);
  if (!verdict || !verdict->matches)
    out.flag(a, h, "T4", std::string("OddApDilate"),
             verdict ? verdict->observed.to_string() : std::string("none"));
}

void eval_t5(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (!zero_side(classify(a))) return;
  out.applicable = true;
  const std::int64_t bound = 2 * h * a.k() - 2 * h + 1;
  const std::int64_t n = card(signed_sumset(a, h, limits));
  if (n < bound) out.flag(a, h, "T5", bound, n);
  out.tight = n == bound;
}

void eval_t6(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  const CaseTag tag = classify(a);
  if (!zero_side(tag) || h < 2 || a.k() < 2) return;
  out.applicable = true;
  const DirectReport report = check_direct(a, h, limits);
  const IntegerSet subject =
      tag == CaseTag::NonposWithZero ? a.negated() : a;
  const bool interval =
      detect_structure(subject).kind == StructureKind::IntervalDilate;
  if (report.tight) {
    out.tight = true;
    if (!interval)
      out.flag(a, h, "T6", std::string("IntervalDilate"),
               detect_structure(subject).to_string());
  } else if (interval) {
    out.flag(a, h, "T6", *report.bound, report.cardinality);
  }
}

void eval_t7(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (classify(a) != CaseTag::MixedSign) return;
  out.applicable = true;
  const std::int64_t bound = h * a.k() - h + 1;
  const std::int64_t n = card(signed_sumset(a, h, limits));
  if (n < bound) out.flag(a, h, "T7", bound, n);
  out.tight = n == bound;
}

void eval_t8(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
             PairEvaluation& out) {
  if (classify(a) != CaseTag::MixedSign || a.k() < 2) return;
  out.applicable = true;
  const DirectReport report = check_direct(a, h, limits);
  if (!report.tight) return;
  out.tight = true;
  if (h >= 2) {
    const auto verdict = check_inverse(report);
    if (!verdict || !verdict->matches)
      out.flag(a, h, "T8", std::string("SymmetricAp"),
               detect_structure(a).to_string());
  } else if (!is_symmetric(a)) {
    // h = 1 keeps only the symmetry conclusion; tight symmetric non-APs
    // exist (e.g. {-5,-1,1,5}), so the AP clause starts at h = 2.
    out.flag(a, h, "T8", std::string("symmetric"),
             detect_structure(a).to_string());
  }
}

void eval_remark_k2(const IntegerSet& a, std::int64_t h,
                    const EngineLimits& limits, PairEvaluation& out) {
  const CaseTag tag = classify(a);
  if (!positive_side(tag) || a.k() != 2 || h < 3) return;
  out.applicable = true;
  const IntegerSet subject = tag == CaseTag::NegativeOnly ? a.negated() : a;
  const std::int64_t n = card(signed_sumset(a, h, limits));
  if (n > 4 * h) out.flag(a, h, "RemarkK2", 4 * h, n);
  const auto predicted =
      remark_k2_prediction(subject.elements()[0], subject.elements()[1], h);
  if (predicted && n != *predicted) out.flag(a, h, "RemarkK2", *predicted, n);
  out.tight = n == 4 * h;
}

void eval_thm_a(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
                PairEvaluation& out) {
  if (h < 2) return;
  out.applicable = true;
  const std::int64_t bound = h * a.k() - h + 1;
  const std::int64_t n = card(sumset(a, h, limits));
  if (n < bound) out.flag(a, h, "ThmA", bound, n);
  out.tight = n == bound;
}

void eval_thm_b(const IntegerSet& a, std::int64_t h, const EngineLimits& limits,
                PairEvaluation& out) {
  if (h < 2) return;
  out.applicable = true;
  const std::int64_t bound = h * a.k() - h + 1;
  const std::int64_t n = card(sumset(a, h, limits));
  const bool ap = is_arithmetic_progression(a);
  if (n == bound && !ap)
    out.flag(a, h, "ThmB", std::string("arithmetic progression"),
             detect_structure(a).to_string());
  if (n != bound && ap) out.flag(a, h, "ThmB", bound, n);
  out.tight = n == bound;
}

bool subset_of(const IntegerSet& inner, const IntegerSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void eval_containment(const IntegerSet& a, std::int64_t h,
                      const EngineLimits& limits, PairEvaluation& out) {
  out.applicable = true;
  const IntegerSet signed_sum = signed_sumset(a, h, limits);
  const IntegerSet lower = sumset(a, h, limits);
  const IntegerSet lower_neg = sumset(a.negated(), h, limits);
  const IntegerSet upper = sumset(union_with_negation(a), h, limits);
  if (!subset_of(lower, signed_sum) || !subset_of(lower_neg, signed_sum))
    out.flag(a, h, "Containment", std::string("hA u h(-A) c h+-A"),
             std::string("lower inclusion fails"));
  if (!subset_of(signed_sum, upper))
    out.flag(a, h, "Containment", std::string("h+-A c h(A u -A)"),
             std::string("upper inclusion fails"));
}

void eval_dilation(const IntegerSet& a, std::int64_t h,
                   const EngineLimits& limits, PairEvaluation& out) {
  out.applicable = true;
  const IntegerSet base = signed_sumset(a, h, limits);
  for (std::int64_t alpha : {-3, -2, -1, 1, 2, 3}) {
    if (signed_sumset(dilate(a, alpha), h, limits) != dilate(base, alpha))
      out.flag(a, h, "Dilation",
               "h+-(alpha*A) == alpha*(h+-A), alpha=" + std::to_string(alpha),
               std::string("sets differ"));
  }
}

void eval_neg_sym(const IntegerSet& a, std::int64_t h,
                  const EngineLimits& limits, PairEvaluation& out) {
  out.applicable = true;
  const IntegerSet s = signed_sumset(a, h, limits);
  if (s != s.negated())
    out.flag(a, h, "NegSym", std::string("h+-A == -(h+-A)"),
             std::string("sets differ"));
}

struct PredicateEntry {
  const char* id;
  PredicateFn fn;
};

constexpr PredicateEntry kPredicates[] = {
    {"OracleEq", eval_oracle_eq}, {"T1", eval_t1},
    {"T2", eval_t2},              {"T3", eval_t3},
    {"T4", eval_t4},              {"T5", eval_t5},
    {"T6", eval_t6},              {"T7", eval_t7},
    {"T8", eval_t8},              {"RemarkK2", eval_remark_k2},
    {"ThmA", eval_thm_a},         {"ThmB", eval_thm_b},
    {"Containment", eval_containment},
    {"Dilation", eval_dilation},  {"NegSym", eval_neg_sym},
};

PredicateFn find_predicate(const std::string& id) {
  for (const auto& entry : kPredicates)
    if (id == entry.id) return entry.fn;
  throw UnsupportedParametersError("unknown predicate id: " + id);
}

struct ChunkResult {
  std::uint64_t pairs = 0;
  std::uint64_t tight = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
};

}  // namespace

const std::vector<std::string>& predicate_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& entry : kPredicates) v.emplace_back(entry.id);
    return v;
  }();
  return ids;
}

bool is_known_predicate(const std::string& id) {
  for (const auto& entry : kPredicates)
    if (id == entry.id) return true;
  return false;
}

VerificationSummary verify(const std::string& predicate_id,
                           const FamilySpec& spec,
                           const VerifyOptions& options) {
  const PredicateFn fn = find_predicate(predicate_id);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<IntegerSet> family =
      enumerate_family(spec, options.family_budget);

  const unsigned jobs =
      options.jobs > 0
          ? static_cast<unsigned>(options.jobs)
          : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk_size =
      std::max<std::size_t>(1, (family.size() + jobs * 8 - 1) /
                                   std::max<std::size_t>(1, jobs * 8));
  const std::size_t chunk_count =
      family.empty() ? 0 : (family.size() + chunk_size - 1) / chunk_size;

  std::vector<ChunkResult> results(chunk_count);
  std::atomic<std::size_t> next_chunk{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto run_chunk = [&](std::size_t index) {
    ChunkResult& res = results[index];
    const std::size_t begin = index * chunk_size;
    const std::size_t end = std::min(family.size(), begin + chunk_size);
    for (std::size_t i = begin; i < end; ++i) {
      const IntegerSet& a = family[i];
      for (std::int64_t h = spec.h_min; h <= spec.h_max; ++h) {
        PairEvaluation eval;
        try {
          fn(a, h, options.limits, eval);
        } catch (const BudgetExceededError& e) {
          throw BudgetExceededError("at A=" + a.to_string() + ", h=" +
                                        std::to_string(h) + ": " + e.what(),
                                    e.computed());
        } catch (const OverflowError& e) {
          throw OverflowError("at A=" + a.to_string() + ", h=" +
                              std::to_string(h) + ": " + e.what());
        }
        if (!eval.applicable) continue;
        ++res.pairs;
        if (eval.tight) ++res.tight;
        res.violations += eval.witnesses.size();
        for (auto& w : eval.witnesses)
          if (res.witnesses.size() < options.witness_cap)
            res.witnesses.push_back(std::move(w));
      }
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t index = next_chunk.fetch_add(1);
      if (index >= chunk_count) return;
      try {
        run_chunk(index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (jobs <= 1 || chunk_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const unsigned spawn = std::min<std::size_t>(jobs, chunk_count);
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  VerificationSummary summary;
  summary.predicate_id = predicate_id;
  summary.sets_checked = family.size();
  for (auto& res : results) {
    summary.pairs_checked += res.pairs;
    summary.tight_count += res.tight;
    summary.violation_count += res.violations;
    for (auto& w : res.witnesses)
      if (summary.violations.size() < options.witness_cap)
        summary.violations.push_back(std::move(w));
  }
  summary.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

std::vector<TightSet> scan_tight_sets(const FamilySpec& spec, std::int64_t h,
                                      const VerifyOptions& options) {
  if (h < 1) throw UnsupportedParametersError("h must be >= 1");
  std::vector<TightSet> out;
  for (const IntegerSet& a : enumerate_family(spec, options.family_budget)) {
    DirectReport report = check_direct(a, h, options.limits);
    if (!report.tight) continue;
    auto verdict = check_inverse(report);
    out.push_back(TightSet{a, std::move(report), std::move(verdict)});
  }
  return out;
}

}  // namespace sigsum
