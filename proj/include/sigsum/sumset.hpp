#pragma once

#include <cstdint>

#include "sigsum/integer_set.hpp"

namespace sigsum {

struct EngineLimits {
  /// Cap on the DP allocation, (h+1)*(2*h*max|a|+1) bits.
  std::uint64_t dp_bit_cap = std::uint64_t{1} << 31;
  /// Cap on the number of coefficient vectors the naive path enumerates.
  std::uint64_t naive_budget = 10'000'000;
};

/// h-fold sumset hA = { sum of h elements of A, repetition allowed }, h >= 1.
IntegerSet sumset(const IntegerSet& a, std::int64_t h,
                  const EngineLimits& limits = {});

/// h-fold signed sumset: sums over coefficient vectors (l_0..l_{k-1}) with
/// sum |l_i| = h. Each element carries a single signed coefficient, so +a_i
/// and -a_i can never contribute to the same sum. Computing h(A u -A)
/// instead would admit exactly that (a_i - a_i = 0 at weight 2), which is
/// why this runs a per-element DP keyed on weight used.
IntegerSet signed_sumset(const IntegerSet& a, std::int64_t h,
                         const EngineLimits& limits = {});

/// Oracle: enumerates every coefficient vector explicitly (nonnegative
/// weight compositions first, then sign patterns over the nonzero parts).
IntegerSet signed_sumset_naive(const IntegerSet& a, std::int64_t h,
                               const EngineLimits& limits = {});

/// Number of coefficient vectors signed_sumset_naive would visit,
/// saturated at UINT64_MAX.
std::uint64_t naive_vector_count(std::int64_t k, std::int64_t h);

/// A u (-A).
IntegerSet union_with_negation(const IntegerSet& a);

enum class Method { DP, Naive };

struct SumsetOutcome {
  IntegerSet input;
  std::int64_t h;
  IntegerSet result;
  Method method;
};

SumsetOutcome compute_signed_sumset(const IntegerSet& a, std::int64_t h,
                                    Method method,
                                    const EngineLimits& limits = {});

}  // namespace sigsum
