#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "sigsum/harness.hpp"
#include "sigsum/serialize.hpp"

using namespace sigsum;

namespace {

IntegerSet set_of(std::vector<std::int64_t> values) {
  return IntegerSet::normalize(std::move(values));
}

FamilySpec family(std::int64_t k_min, std::int64_t k_max, std::int64_t m,
                  std::int64_t h_min, std::int64_t h_max,
                  std::optional<CaseTag> filter = std::nullopt) {
  return FamilySpec{k_min, k_max, m, h_min, h_max, filter};
}

}  // namespace

TEST_CASE("enumerate_family yields lexicographic filtered subsets") {
  const auto only_pair =
      enumerate_family(family(2, 2, 2, 1, 1, CaseTag::PositiveOnly));
  REQUIRE(only_pair.size() == 1);
  CHECK(only_pair[0] == set_of({1, 2}));

  const auto singletons = enumerate_family(family(1, 1, 1, 1, 1));
  REQUIRE(singletons.size() == 3);
  CHECK(singletons[0] == set_of({-1}));
  CHECK(singletons[1] == set_of({0}));
  CHECK(singletons[2] == set_of({1}));

  const auto zero_triples =
      enumerate_family(family(3, 3, 3, 1, 1, CaseTag::NonnegWithZero));
  REQUIRE(zero_triples.size() == 3);
  CHECK(zero_triples[0] == set_of({0, 1, 2}));
  CHECK(zero_triples[1] == set_of({0, 1, 3}));
  CHECK(zero_triples[2] == set_of({0, 2, 3}));

  // C(12,3) positive triples within [-12, 12]
  CHECK(enumerate_family(family(3, 3, 12, 1, 1, CaseTag::PositiveOnly)).size() ==
        220);
}

TEST_CASE("family size and budget") {
  CHECK(family_size(family(1, 5, 12, 1, 5)) == 68405);
  try {
    enumerate_family(family(1, 5, 12, 1, 5), 10);
    FAIL("budget should have tripped");
  } catch (const BudgetExceededError& e) {
    CHECK(e.computed() == 68405);
  }
  CHECK_THROWS_AS(enumerate_family(family(0, 2, 3, 1, 1)),
                  UnsupportedParametersError);
}

TEST_CASE("verify T5 over the zero regime finds nothing") {
  const auto summary =
      verify("T5", family(2, 4, 8, 1, 4, CaseTag::NonnegWithZero));
  CHECK(summary.violation_count == 0);
  CHECK(summary.passed());
  CHECK(summary.pairs_checked > 0);
  CHECK(summary.tight_count > 0);  // the interval dilates are in range
}

TEST_CASE("verify T3 on the deliberate k=2 probe") {
  const auto summary =
      verify("T3", family(2, 2, 3, 3, 3, CaseTag::PositiveOnly));
  CHECK(summary.sets_checked == 3);  // {1,2},{1,3},{2,3}
  CHECK(summary.violation_count == 1);
  REQUIRE(summary.violations.size() == 1);
  const Witness& w = summary.violations[0];
  CHECK(w.set == set_of({1, 2}));
  CHECK(w.h == 3);
  CHECK(std::get<std::int64_t>(w.expected) == 10);
  CHECK(std::get<std::int64_t>(w.actual) == 9);

  // unfiltered, the negated mirror {-2,-1} shows up as well
  const auto mirrored = verify("T3", family(2, 2, 3, 3, 3));
  CHECK(mirrored.violation_count == 2);
  REQUIRE(mirrored.violations.size() == 2);
  CHECK(mirrored.violations[0].set == set_of({-2, -1}));
  CHECK(mirrored.violations[1].set == set_of({1, 2}));
}

TEST_CASE("verify Dilation and NegSym hold everywhere") {
  CHECK(verify("Dilation", family(1, 3, 4, 1, 3)).violation_count == 0);
  CHECK(verify("NegSym", family(1, 3, 4, 1, 3)).violation_count == 0);
  CHECK(verify("Containment", family(1, 3, 4, 1, 3)).violation_count == 0);
}

TEST_CASE("verify OracleEq at unit scale") {
  const auto summary = verify("OracleEq", family(1, 4, 6, 1, 4));
  CHECK(summary.violation_count == 0);
  CHECK(summary.pairs_checked == summary.sets_checked * 4);
}

TEST_CASE("witness lists are capped but counts stay exact") {
  VerifyOptions options;
  options.witness_cap = 2;
  // k=1 probing of the h>=3 bound: every positive singleton misses it
  const auto summary =
      verify("T3", family(1, 1, 3, 3, 3, CaseTag::PositiveOnly), options);
  CHECK(summary.violation_count == 3);
  CHECK(summary.violations.size() == 2);
}

TEST_CASE("verification is deterministic across runs and job counts") {
  const FamilySpec spec = family(1, 4, 5, 1, 4);
  VerifyOptions one;
  one.jobs = 1;
  VerifyOptions many;
  many.jobs = 3;
  for (const char* id : {"T1", "T6", "OracleEq", "RemarkK2"}) {
    const auto a = to_json(verify(id, spec, one)).dump();
    const auto b = to_json(verify(id, spec, many)).dump();
    const auto c = to_json(verify(id, spec, many)).dump();
    CHECK(a == b);
    CHECK(b == c);
  }
}

TEST_CASE("unknown predicate is rejected") {
  CHECK_THROWS_AS(verify("T9", family(1, 2, 2, 1, 2)),
                  UnsupportedParametersError);
  CHECK(is_known_predicate("RemarkK2"));
  CHECK_FALSE(is_known_predicate("thm1"));
  CHECK(predicate_ids().size() == 15);
}

TEST_CASE("scan finds exactly the odd-AP dilates at h=2") {
  const auto tights =
      scan_tight_sets(family(3, 3, 12, 2, 2, CaseTag::PositiveOnly), 2);
  REQUIRE(tights.size() == 2);
  CHECK(tights[0].set == set_of({1, 3, 5}));
  CHECK(tights[1].set == set_of({2, 6, 10}));
  for (const auto& t : tights) {
    REQUIRE(t.verdict.has_value());
    CHECK(t.verdict->theorem == TheoremId::T2);
    CHECK(t.verdict->matches);
  }
}

TEST_CASE("scan finds exactly the interval dilates at h=3") {
  const auto tights =
      scan_tight_sets(family(3, 3, 6, 3, 3, CaseTag::NonnegWithZero), 3);
  REQUIRE(tights.size() == 3);
  CHECK(tights[0].set == set_of({0, 1, 2}));
  CHECK(tights[1].set == set_of({0, 2, 4}));
  CHECK(tights[2].set == set_of({0, 3, 6}));
  for (const auto& t : tights) {
    REQUIRE(t.verdict.has_value());
    CHECK(t.verdict->theorem == TheoremId::T6);
    CHECK(t.verdict->matches);
  }
}

TEST_CASE("scan over mixed triples finds the symmetric intervals") {
  const auto tights =
      scan_tight_sets(family(3, 3, 4, 2, 2, CaseTag::MixedSign), 2);
  REQUIRE(tights.size() == 4);
  // enumeration order: first element ascending, so d = 4 comes first
  for (std::int64_t d = 4; d >= 1; --d) {
    const auto& t = tights[static_cast<std::size_t>(4 - d)];
    CHECK(t.set == set_of({-d, 0, d}));
    REQUIRE(t.verdict.has_value());
    CHECK(t.verdict->observed.kind == StructureKind::SymmetricAp);
    CHECK(t.verdict->matches);
  }
}

TEST_CASE("T8 at h=1 asserts symmetry only") {
  // {-5,-1,1,5} is tight and symmetric but no AP; it must not be a witness.
  const auto summary = verify("T8", family(4, 4, 5, 1, 1, CaseTag::MixedSign));
  CHECK(summary.violation_count == 0);
  CHECK(summary.tight_count > 0);

  bool found = false;
  for (const auto& t :
       scan_tight_sets(family(4, 4, 5, 1, 1, CaseTag::MixedSign), 1)) {
    if (t.set == set_of({-5, -1, 1, 5})) {
      found = true;
      CHECK_FALSE(t.verdict.has_value());
    }
  }
  CHECK(found);
}

TEST_CASE("errors from the engine carry the offending pair") {
  VerifyOptions options;
  options.limits.naive_budget = 5;
  try {
    verify("OracleEq", family(3, 3, 3, 3, 3), options);
    FAIL("budget should have tripped");
  } catch (const BudgetExceededError& e) {
    CHECK(std::string(e.what()).find("A=") != std::string::npos);
    CHECK(std::string(e.what()).find("h=3") != std::string::npos);
  }
}

TEST_CASE("empty families verify to empty summaries") {
  // k=1 sets can never be nonpositive-with-zero ({0} classifies as zero)
  const auto summary =
      verify("T5", family(1, 1, 3, 1, 2, CaseTag::NonposWithZero));
  CHECK(summary.sets_checked == 0);
  CHECK(summary.pairs_checked == 0);
  CHECK(summary.passed());
}

TEST_CASE("direct reports never fall below their bound on the corpus") {
  for (const IntegerSet& a : enumerate_family(family(1, 3, 4, 1, 1))) {
    for (std::int64_t h = 1; h <= 3; ++h) {
      const DirectReport report = check_direct(a, h);
      REQUIRE(report.bound.has_value());
      REQUIRE_FALSE(report.violated());
      REQUIRE(report.tight == (report.cardinality == *report.bound));
    }
  }
}

TEST_CASE("scan order matches enumeration order") {
  const auto tights = scan_tight_sets(family(1, 2, 3, 1, 1), 1);
  for (std::size_t i = 1; i < tights.size(); ++i)
    CHECK((tights[i - 1].set.k() < tights[i].set.k() ||
           tights[i - 1].set < tights[i].set));
}
