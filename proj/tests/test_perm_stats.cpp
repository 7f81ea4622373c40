#include "doctest.h"
#include "oracle.hpp"
#include "qeul/perm_stats.hpp"

using namespace qeul;

namespace {
oracle::Word word_of(const Permutation& s) { return {s.word().begin(), s.word().end()}; }
}  // namespace

TEST_SUITE("perm_stats") {
  TEST_CASE("worked example") {
    const StatProfile p = stat_profile(parse_permutation("4,7,3,6,2,1,5"));
    CHECK(p.a_plus == 3);
    CHECK(p.a_minus == 1);
    CHECK(p.a_pm == 2);
    CHECK(p.c_plus == 2);
    CHECK(p.c_minus == 1);
    CHECK(p.wexc == 4);
    CHECK(p.crossings + p.alignments == (p.wexc - 1) * (p.n - p.wexc));
  }

  TEST_CASE("small cases") {
    const StatProfile one = stat_profile(parse_permutation("1"));
    CHECK(one.wexc == 1);
    CHECK(one.crossings == 0);
    CHECK(one.alignments == 0);
    const StatProfile swap = stat_profile(parse_permutation("2,1"));
    CHECK(swap.wexc == 1);
    CHECK(swap.crossings == 0);
    CHECK(stat_profile(Permutation::identity(5)).wexc == 5);
  }

  TEST_CASE("profile agrees with the set-definition oracle on S_6") {
    for (int n = 0; n <= 6; ++n) {
      for (const Permutation& s : enumerate_permutations(n)) {
        const auto w = word_of(s);
        const StatProfile p = stat_profile(s);
        REQUIRE(p.a_plus == oracle::a_plus(w));
        REQUIRE(p.a_minus == oracle::a_minus(w));
        REQUIRE(p.a_pm == oracle::a_pm(w));
        REQUIRE(p.c_plus == oracle::c_plus(w));
        REQUIRE(p.c_minus == oracle::c_minus(w));
        REQUIRE(p.wexc == oracle::wexc(w));
        REQUIRE(p.descents == oracle::descents(w));
        REQUIRE(p.p31_2 == oracle::p31_2(w));
        REQUIRE(p.p2_31 == oracle::p2_31(w));
        REQUIRE(p.p13_2 == oracle::p13_2(w));
        REQUIRE(p.p2_13 == oracle::p2_13(w));
        REQUIRE(p.crossings == p.c_plus + p.c_minus);
        REQUIRE(p.nestings == p.a_plus + p.a_minus);
      }
    }
  }

  TEST_CASE("per-value pattern counts sum to the totals") {
    for (const Permutation& s : enumerate_permutations(6)) {
      int a = 0;
      int b = 0;
      for (int v = 1; v <= 6; ++v) {
        const PatternCounts c = pattern_counts_at_value(s, v);
        a += c.count_31_2;
        b += c.count_2_31;
      }
      const StatProfile p = stat_profile(s);
      REQUIRE(a == p.p31_2);
      REQUIRE(b == p.p2_31);
    }
  }

  TEST_CASE("2-31 sequence and value classes") {
    const Permutation s = parse_permutation("5,1,7,4,3,6,8,2");
    const int expected[] = {0, 0, 1, 1, 2, 1, 1, 0};
    for (int v = 1; v <= 8; ++v) CHECK(pattern_counts_at_value(s, v).count_2_31 == expected[v - 1]);
    const Permutation t = parse_permutation("6,2,1,5,3,4");
    CHECK(pattern_counts_at_value(t, 3) == PatternCounts{1, 0});
    CHECK(classify_value(t, 1) == ValueKind::Valley);
    CHECK(classify_value(t, 2) == ValueKind::DoubleDescent);
    CHECK(classify_value(t, 4) == ValueKind::DoubleAscent);
    CHECK(classify_value(t, 6) == ValueKind::Peak);
    for (int v = 1; v <= 5; ++v) CHECK(pattern_counts_at_value(Permutation::identity(5), v) == PatternCounts{});
  }

  TEST_CASE("decorated profile") {
    const DecoratedProfile plus = decorated_profile(parse_decorated("1 | 1+"));
    CHECK(plus.wexc == 1);
    CHECK(plus.crossings + plus.nestings + plus.alignments == 0);
    const DecoratedProfile swap = decorated_profile(parse_decorated("2,1"));
    CHECK(swap.wexc == 1);
    CHECK(swap.crossings == 0);
    CHECK(swap.nestings == 0);
    CHECK(swap.strict_exceedances == 1);
    CHECK(swap.alignments + swap.crossings + swap.anti_exceedances == (2 - swap.wexc) * swap.wexc);
  }

  TEST_CASE("census") {
    const Census c = joint_distribution(3, {"wexc", "crossings"});
    CHECK(c.at({1, 0}) == 1);
    CHECK(c.at({2, 0}) == 3);
    CHECK(c.at({2, 1}) == 1);
    CHECK(c.at({3, 0}) == 1);
    CHECK(joint_distribution(6, {"wexc", "nestings"}, 4) == joint_distribution(6, {"wexc", "nestings"}, 1));
    CHECK_THROWS_AS(joint_distribution(3, {"bogus"}), UnknownField);
    CHECK_THROWS_AS(joint_distribution(kMaxCensus + 1, {"wexc"}), EnumerationTooLarge);
  }
}
