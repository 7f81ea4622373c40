#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qeul/bijections.hpp"
#include "qeul/perm_stats.hpp"

using namespace qeul;

namespace {
std::vector<StepLabel> labels(std::initializer_list<StepLabel> l) { return l; }
}  // namespace

TEST_SUITE("bijections") {
  TEST_CASE("fz example") {
    const LabeledPath lp = fz_map(parse_permutation("4,1,5,6,2,3"));
    CHECK(to_string(lp.path) == "NBNESS");
    // y, 1, yq, yq^2, q, 1 in the p = nestings, q = crossings labelling
    CHECK(lp.labels == labels({{1, 0, 0}, {0, 0, 0}, {1, 0, 1}, {1, 0, 2}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(fz_inverse(lp) == parse_permutation("4,1,5,6,2,3"));
  }

  TEST_CASE("fz small cases") {
    const LabeledPath id = fz_map(Permutation::identity(4));
    CHECK(to_string(id.path) == "EEEE");
    for (const StepLabel& l : id.labels) CHECK(l == StepLabel{1, 0, 0});
    const LabeledPath swap = fz_map(parse_permutation("2,1"));
    CHECK(to_string(swap.path) == "NS");
    CHECK(swap.labels == labels({{1, 0, 0}, {0, 0, 0}}));
    CHECK(fz_inverse(fz_map(parse_permutation("1"))) == parse_permutation("1"));
  }

  TEST_CASE("fz round trip and weights on S_7") {
    for (int n = 0; n <= 7; ++n) {
      std::set<std::vector<StepLabel>> seen_labels;
      for (const Permutation& s : enumerate_permutations(n)) {
        const LabeledPath lp = fz_map(s);
        REQUIRE_NOTHROW(check_labels(lp));
        REQUIRE(fz_inverse(lp) == s);
        const StatProfile p = stat_profile(s);
        const Monomial w = lp.weight();
        REQUIRE(w.ey == p.wexc);
        REQUIRE(w.ep == p.nestings);
        REQUIRE(w.eq == p.crossings);
      }
    }
  }

  TEST_CASE("fv example") {
    const Permutation s = parse_permutation("6,2,1,5,3,4");
    const LabeledPath lp = fv_map(s);
    CHECK(to_string(lp.path) == "NBNESS");
    CHECK(lp.labels == labels({{1, 0, 0}, {0, 0, 0}, {1, 1, 0}, {1, 2, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK(fv_inverse(lp) == s);
    const LabeledPath id = fv_map(Permutation::identity(3));
    CHECK(to_string(id.path) == "EEE");
  }

  TEST_CASE("fv round trip and pattern weights on S_7") {
    for (int n = 0; n <= 7; ++n) {
      for (const Permutation& s : enumerate_permutations(n)) {
        const LabeledPath lp = fv_map(s);
        REQUIRE_NOTHROW(check_labels(lp));
        REQUIRE(fv_inverse(lp) == s);
        const StatProfile p = stat_profile(s);
        const Monomial w = lp.weight();
        REQUIRE(w.ey == n - p.descents);
        REQUIRE(w.ep == p.p31_2);
        REQUIRE(w.eq == p.p2_31);
      }
    }
  }

  TEST_CASE("malformed labels are rejected") {
    LabeledPath lp = fz_map(parse_permutation("4,1,5,6,2,3"));
    lp.labels[3].q = 5;
    CHECK_THROWS_AS(check_labels(lp), MalformedLabel);
    lp.labels.pop_back();
    CHECK_THROWS_AS(check_labels(lp), MalformedLabel);
    LabeledPath bad_y = fz_map(parse_permutation("2,1"));
    bad_y.labels[1].y = 1;
    CHECK_THROWS_AS(check_labels(bad_y), MalformedLabel);
  }

  TEST_CASE("transport") {
    const Permutation t = transport(parse_permutation("6,2,1,5,3,4"));
    CHECK(t == parse_permutation("4,1,5,6,2,3"));
    CHECK(to_string(fz_map(t).path) == "NBNESS");
    CHECK(transport(Permutation::identity(4)) == Permutation::identity(4));
    for (int n = 0; n <= 7; ++n) {
      std::set<Permutation> images;
      for (const Permutation& s : enumerate_permutations(n)) {
        const Permutation t2 = transport(s);
        const StatProfile a = stat_profile(s);
        const StatProfile b = stat_profile(t2);
        REQUIRE(b.wexc == n - a.descents);
        REQUIRE(b.crossings == a.p31_2);
        REQUIRE(b.nestings == a.p2_31);
        images.insert(t2);
      }
      CHECK(images.size() == factorial(n));
    }
  }

  TEST_CASE("two-rowed arrays") {
    const TwoRowedArrays a = two_rowed_arrays(parse_permutation("5,1,7,4,3,6,8,2"));
    CHECK(a.f_top == std::vector<int>{4, 5, 7, 8});
    CHECK(a.f_bottom == std::vector<int>{1, 3, 4, 2});
    CHECK(a.g_top == std::vector<int>{1, 2, 3, 6});
    CHECK(a.g_bottom == std::vector<int>{8, 6, 5, 7});
    CHECK(a.tau == parse_permutation("8,6,5,1,3,7,4,2"));
    const TwoRowedArrays id = two_rowed_arrays(Permutation::identity(4));
    CHECK(id.f_top.empty());
    CHECK(id.g_top.size() == 4);
  }
}
