#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>
#include <vector>

#include "sigsum/sumset.hpp"

using namespace sigsum;

namespace {

IntegerSet set_of(std::vector<std::int64_t> values) {
  return IntegerSet::normalize(std::move(values));
}

// Every nonempty subset of [-bound, bound] with at most max_k elements.
std::vector<IntegerSet> corpus(std::int64_t bound, int max_k) {
  std::vector<std::int64_t> universe;
  for (std::int64_t v = -bound; v <= bound; ++v) universe.push_back(v);
  std::vector<IntegerSet> out;
  for (std::uint32_t mask = 1; mask < (1u << universe.size()); ++mask) {
    if (__builtin_popcount(mask) > max_k) continue;
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((mask >> i) & 1) values.push_back(universe[i]);
    out.push_back(set_of(std::move(values)));
  }
  return out;
}

}  // namespace

TEST_CASE("plain sumset matches the enumerated examples") {
  CHECK(sumset(set_of({0, 1, 2}), 2) == set_of({0, 1, 2, 3, 4}));
  CHECK(sumset(set_of({1}), 7) == set_of({7}));
  // all six pairs with repetition from {1,2,4}
  CHECK(sumset(set_of({1, 2, 4}), 2) == set_of({2, 3, 4, 5, 6, 8}));
  CHECK(sumset(set_of({-3, 2}), 1) == set_of({-3, 2}));
}

TEST_CASE("signed sumset matches the frozen examples") {
  CHECK(signed_sumset(set_of({1, 3, 5}), 2) ==
        set_of({-10, -8, -6, -4, -2, 2, 4, 6, 8, 10}));
  CHECK(signed_sumset(set_of({5}), 3) == set_of({-15, 15}));
  CHECK(signed_sumset(set_of({1, 2}), 3) ==
        set_of({-6, -5, -4, -3, 0, 3, 4, 5, 6}));
  CHECK(signed_sumset(set_of({1, 10}), 3).size() == 12);
  CHECK(signed_sumset(set_of({0}), 9) == set_of({0}));
}

TEST_CASE("naive oracle matches its own examples") {
  CHECK(signed_sumset_naive(set_of({1}), 1) == set_of({-1, 1}));
  CHECK(signed_sumset_naive(set_of({1, 3, 5}), 1) ==
        set_of({-5, -3, -1, 1, 3, 5}));
  CHECK(signed_sumset_naive(set_of({2, 3}), 5) ==
        signed_sumset(set_of({2, 3}), 5));
}

TEST_CASE("one signed coefficient per element: no self-cancellation") {
  // h(A u -A) would contain 0 for every A at even h; h+-A must not unless
  // a genuine signed combination produces it.
  CHECK_FALSE(signed_sumset(set_of({1}), 2).contains(0));
  CHECK_FALSE(signed_sumset(set_of({1, 3, 5}), 2).contains(0));
  CHECK(sumset(union_with_negation(set_of({1})), 2).contains(0));
  // but {1,2} at h=3 reaches 0 via 2*1 - 1*2 honestly
  CHECK(signed_sumset(set_of({1, 2}), 3).contains(0));
}

TEST_CASE("union_with_negation") {
  CHECK(union_with_negation(set_of({1, 2})) == set_of({-2, -1, 1, 2}));
  CHECK(union_with_negation(set_of({0, 3})) == set_of({-3, 0, 3}));
  CHECK(union_with_negation(set_of({-1, 1})) == set_of({-1, 1}));
}

TEST_CASE("naive_vector_count agrees with direct enumeration") {
  CHECK(naive_vector_count(1, 1) == 2);
  CHECK(naive_vector_count(2, 3) == 12);
  CHECK(naive_vector_count(5, 5) == 1002);

  // brute count over the full coefficient grid for small k, h
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t h = 1; h <= 4; ++h) {
      std::uint64_t brute = 0;
      const std::int64_t span = 2 * h + 1;
      std::int64_t total = 1;
      for (std::int64_t i = 0; i < k; ++i) total *= span;
      for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t rest = code, weight = 0;
        for (std::int64_t i = 0; i < k; ++i) {
          weight += std::abs(rest % span - h);
          rest /= span;
        }
        if (weight == h) ++brute;
      }
      CHECK(naive_vector_count(k, h) == brute);
    }
  }
}

namespace {

// Third route, independent of both library paths: assign one signed
// coefficient per element by DFS and collect the weight-h sums.
void ref_signed_rec(const std::vector<std::int64_t>& elems, std::size_t i,
                    std::int64_t remaining, std::int64_t sum,
                    std::set<std::int64_t>& out) {
  if (i == elems.size()) {
    if (remaining == 0) out.insert(sum);
    return;
  }
  for (std::int64_t coeff = -remaining; coeff <= remaining; ++coeff)
    ref_signed_rec(elems, i + 1, remaining - std::abs(coeff),
                   sum + coeff * elems[i], out);
}

std::set<std::int64_t> ref_signed(const IntegerSet& a, std::int64_t h) {
  std::set<std::int64_t> out;
  ref_signed_rec(a.elements(), 0, h, 0, out);
  return out;
}

}  // namespace

TEST_CASE("a set-based reference agrees with both library routes") {
  for (const IntegerSet& a : corpus(4, 3)) {
    for (std::int64_t h = 1; h <= 4; ++h) {
      const auto expected = ref_signed(a, h);
      const IntegerSet dp = signed_sumset(a, h);
      REQUIRE(std::vector<std::int64_t>(expected.begin(), expected.end()) ==
              dp.elements());
      REQUIRE(dp == signed_sumset_naive(a, h));
    }
  }
}

TEST_CASE("DP equals the naive oracle exhaustively at unit scale") {
  for (const IntegerSet& a : corpus(5, 5)) {
    for (std::int64_t h = 1; h <= 5; ++h) {
      REQUIRE(signed_sumset(a, h) == signed_sumset_naive(a, h));
    }
  }
}

TEST_CASE("containment chain and negation symmetry") {
  for (const IntegerSet& a : corpus(4, 4)) {
    for (std::int64_t h = 1; h <= 4; ++h) {
      const IntegerSet s = signed_sumset(a, h);
      const IntegerSet lower = sumset(a, h);
      const IntegerSet lower_neg = sumset(a.negated(), h);
      const IntegerSet upper = sumset(union_with_negation(a), h);
      for (std::int64_t v : lower) REQUIRE(s.contains(v));
      for (std::int64_t v : lower_neg) REQUIRE(s.contains(v));
      for (std::int64_t v : s) REQUIRE(upper.contains(v));
      REQUIRE(s == s.negated());
      REQUIRE(!s.elements().empty());
      REQUIRE(s.max_abs() <= h * a.max_abs());
    }
  }
}

TEST_CASE("dilation identity") {
  for (const IntegerSet& a : corpus(3, 3)) {
    for (std::int64_t h = 1; h <= 4; ++h) {
      const IntegerSet s = signed_sumset(a, h);
      for (std::int64_t alpha : {-3, -2, -1, 1, 2, 3})
        REQUIRE(signed_sumset(dilate(a, alpha), h) == dilate(s, alpha));
    }
  }
}

TEST_CASE("parity of signed sums over odd elements") {
  const std::vector<IntegerSet> odd_sets = {
      set_of({1}), set_of({1, 3}), set_of({1, 3, 5}), set_of({-3, 1, 7}),
      set_of({-9, -1, 5, 11})};
  for (const IntegerSet& a : odd_sets) {
    for (std::int64_t h = 1; h <= 6; ++h) {
      for (std::int64_t v : signed_sumset(a, h))
        REQUIRE(((v % 2 + 2) % 2) == (h % 2));
    }
  }
}

TEST_CASE("theorem-A floor for the plain sumset") {
  for (const IntegerSet& a : corpus(4, 4)) {
    for (std::int64_t h = 2; h <= 5; ++h) {
      const auto n = static_cast<std::int64_t>(sumset(a, h).size());
      REQUIRE(n >= h * a.k() - h + 1);
      REQUIRE((n == h * a.k() - h + 1) == is_arithmetic_progression(a));
    }
  }
}

TEST_CASE("engine error paths") {
  CHECK_THROWS_AS(signed_sumset(set_of({1, 2}), 0), UnsupportedParametersError);
  CHECK_THROWS_AS(sumset(set_of({1, 2}), 0), UnsupportedParametersError);
  CHECK_THROWS_AS(signed_sumset(set_of({1, std::int64_t{4} * 1000000000000000000}), 3),
                  OverflowError);

  EngineLimits tiny;
  tiny.dp_bit_cap = 16;
  CHECK_THROWS_AS(signed_sumset(set_of({1, 12}), 5, tiny), BudgetExceededError);

  tiny = EngineLimits{};
  tiny.naive_budget = 10;
  try {
    signed_sumset_naive(set_of({1, 2}), 3, tiny);
    FAIL("budget should have tripped");
  } catch (const BudgetExceededError& e) {
    CHECK(e.computed() == 12);
  }
}

TEST_CASE("SumsetOutcome records the method used") {
  const auto dp = compute_signed_sumset(set_of({1, 2}), 3, Method::DP);
  const auto naive = compute_signed_sumset(set_of({1, 2}), 3, Method::Naive);
  CHECK(dp.method == Method::DP);
  CHECK(naive.method == Method::Naive);
  CHECK(dp.result == naive.result);
  CHECK(dp.h == 3);
  CHECK(dp.input == set_of({1, 2}));
}
