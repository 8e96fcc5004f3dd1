#include "sigsum/sumset.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <vector>

namespace sigsum {
namespace {

// Bitmap over an inclusive integer range [lo, hi].
class RangeBits {
 public:
  RangeBits(std::int64_t lo, std::int64_t hi)
      : lo_(lo), width_(static_cast<std::uint64_t>(hi - lo) + 1),
        words_((width_ + 63) / 64, 0) {}

  void set(std::int64_t v) {
    const std::uint64_t b = index(v);
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }

  bool test(std::int64_t v) const {
    if (v < lo_ || index(v) >= width_) return false;
    const std::uint64_t b = index(v);
    return (words_[b >> 6] >> (b & 63)) & 1;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  // this |= (src shifted by delta in value space). Bits landing outside
  // [lo, hi] are dropped.
  void or_shifted(const RangeBits& src, std::int64_t delta) {
    const std::int64_t s = delta + (src.lo_ - lo_);  // shift in bit indices
    const std::int64_t n = static_cast<std::int64_t>(words_.size());
    const std::int64_t m = static_cast<std::int64_t>(src.words_.size());
    const std::int64_t ws = s >= 0 ? s / 64 : -((-s + 63) / 64);
    const unsigned bs = static_cast<unsigned>(s - ws * 64);  // 0..63
    for (std::int64_t j = std::max<std::int64_t>(0, ws); j < n; ++j) {
      const std::int64_t i = j - ws;  // src word feeding the low part of dst[j]
      std::uint64_t v = 0;
      if (i >= 0 && i < m) v |= bs ? (src.words_[i] << bs) : src.words_[i];
      if (bs && i - 1 >= 0 && i - 1 < m) v |= src.words_[i - 1] >> (64 - bs);
      words_[j] |= v;
    }
    mask_top();
  }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        out.push_back(lo_ + static_cast<std::int64_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  std::uint64_t index(std::int64_t v) const {
    return static_cast<std::uint64_t>(v - lo_);
  }

  void mask_top() {
    const unsigned used = static_cast<unsigned>(width_ & 63);
    if (used) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::int64_t lo_;
  std::uint64_t width_;
  std::vector<std::uint64_t> words_;
};

void check_preconditions(const IntegerSet& a, std::int64_t h) {
  if (h < 1) throw UnsupportedParametersError("h must be >= 1");
  checked_mul(h, a.max_abs());  // h*M must be representable
}

void check_dp_allocation(std::int64_t h, std::int64_t reach,
                         const EngineLimits& limits) {
  // reach = half-width of the sum range. Levels 0..h, each 2*reach+1 bits.
  const unsigned __int128 bits =
      (static_cast<unsigned __int128>(h) + 1) *
      (2 * static_cast<unsigned __int128>(reach) + 1);
  const std::uint64_t clamped = static_cast<std::uint64_t>(
      std::min<unsigned __int128>(bits, std::numeric_limits<std::uint64_t>::max()));
  if (bits > limits.dp_bit_cap)
    throw BudgetExceededError("sumset table of " + std::to_string(clamped) +
                                  " bits exceeds the cap of " +
                                  std::to_string(limits.dp_bit_cap),
                              clamped);
}

}  // namespace

IntegerSet sumset(const IntegerSet& a, std::int64_t h,
                  const EngineLimits& limits) {
  check_preconditions(a, h);
  const std::int64_t reach = checked_mul(h, a.max_abs());
  check_dp_allocation(1, reach, limits);

  // Partial sums of j <= h elements stay within [-j*M, j*M] c [-reach, reach].
  RangeBits cur(-reach, reach);
  for (std::int64_t v : a) cur.set(v);
  for (std::int64_t step = 1; step < h; ++step) {
    RangeBits next(-reach, reach);
    for (std::int64_t v : a) next.or_shifted(cur, v);
    cur = std::move(next);
  }
  return IntegerSet::normalize(cur.values());
}

IntegerSet signed_sumset(const IntegerSet& a, std::int64_t h,
                         const EngineLimits& limits) {
  check_preconditions(a, h);
  const std::int64_t reach = checked_mul(h, a.max_abs());
  check_dp_allocation(h, reach, limits);

  // dp[w] = partial sums over the elements seen so far whose coefficient
  // magnitudes total exactly w. A partial sum at weight w is bounded by
  // w*M, so every level fits the final range.
  std::vector<RangeBits> dp(static_cast<std::size_t>(h) + 1,
                            RangeBits(-reach, reach));
  dp[0].set(0);
  for (std::int64_t v : a) {
    std::vector<RangeBits> next(static_cast<std::size_t>(h) + 1,
                                RangeBits(-reach, reach));
    for (std::int64_t w = 0; w <= h; ++w) {
      if (!dp[w].any()) continue;
      for (std::int64_t coeff = -(h - w); coeff <= h - w; ++coeff)
        next[w + std::abs(coeff)].or_shifted(dp[w], coeff * v);
    }
    dp = std::move(next);
  }
  return IntegerSet::normalize(dp[static_cast<std::size_t>(h)].values());
}

std::uint64_t naive_vector_count(std::int64_t k, std::int64_t h) {
  // sum over j = #nonzero coefficients: C(k,j) * C(h-1,j-1) * 2^j
  const auto sat = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 0;
  for (std::int64_t j = 1; j <= std::min(k, h); ++j) {
    unsigned __int128 term = 1;
    for (std::int64_t i = 0; i < j; ++i) {
      term = term * static_cast<std::uint64_t>(k - i) / static_cast<std::uint64_t>(i + 1);
      if (term > sat) return sat;
    }
    for (std::int64_t i = 0; i < j - 1; ++i) {
      term = term * static_cast<std::uint64_t>(h - 1 - i) / static_cast<std::uint64_t>(i + 1);
      if (term > sat) return sat;
    }
    for (std::int64_t i = 0; i < j; ++i) {
      term *= 2;
      if (term > sat) return sat;
    }
    total += term;
    if (total > sat) return sat;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

// Enumerates nonnegative weight compositions of `remaining` over slots
// [slot, k), then expands sign patterns over the nonzero parts.
void enumerate_compositions(const std::vector<std::int64_t>& elems,
                            std::size_t slot, std::int64_t remaining,
                            std::vector<std::int64_t>& magnitudes,
                            RangeBits& sums) {
  if (slot + 1 == elems.size()) {
    magnitudes[slot] = remaining;
    std::vector<std::int64_t> parts;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (magnitudes[i] != 0) parts.push_back(magnitudes[i] * elems[i]);
    const std::size_t j = parts.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << j); ++mask) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < j; ++i)
        sum += (mask >> i) & 1 ? -parts[i] : parts[i];
      sums.set(sum);
    }
    return;
  }
  for (std::int64_t w = 0; w <= remaining; ++w) {
    magnitudes[slot] = w;
    enumerate_compositions(elems, slot + 1, remaining - w, magnitudes, sums);
  }
}

}  // namespace

IntegerSet signed_sumset_naive(const IntegerSet& a, std::int64_t h,
                               const EngineLimits& limits) {
  check_preconditions(a, h);
  const std::uint64_t vectors = naive_vector_count(a.k(), h);
  if (vectors > limits.naive_budget)
    throw BudgetExceededError(std::to_string(vectors) +
                                  " coefficient vectors exceed the budget of " +
                                  std::to_string(limits.naive_budget),
                              vectors);
  const std::int64_t reach = checked_mul(h, a.max_abs());
  RangeBits sums(-reach, reach);
  std::vector<std::int64_t> magnitudes(a.size(), 0);
  enumerate_compositions(a.elements(), 0, h, magnitudes, sums);
  return IntegerSet::normalize(sums.values());
}

IntegerSet union_with_negation(const IntegerSet& a) {
  std::vector<std::int64_t> out(a.begin(), a.end());
  for (std::int64_t v : a.elements()) out.push_back(-v);
  return IntegerSet::normalize(std::move(out));
}

SumsetOutcome compute_signed_sumset(const IntegerSet& a, std::int64_t h,
                                    Method method, const EngineLimits& limits) {
  IntegerSet result = method == Method::DP ? signed_sumset(a, h, limits)
                                           : signed_sumset_naive(a, h, limits);
  return SumsetOutcome{a, h, std::move(result), method};
}

}  // namespace sigsum
