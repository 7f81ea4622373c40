#include <set>

#include "doctest.h"
#include "qeul/permutation.hpp"

using namespace qeul;

TEST_SUITE("permutation") {
  TEST_CASE("parse and print") {
    const Permutation s = parse_permutation("4,7,3,6,2,1,5");
    CHECK(s.size() == 7);
    CHECK(s(1) == 4);
    CHECK(s.preimage(4) == 1);
    CHECK(to_string(s) == "4,7,3,6,2,1,5");
    CHECK(parse_permutation("3 1 2") == Permutation({3, 1, 2}));
    CHECK(parse_permutation("") == Permutation());
  }

  TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(parse_permutation("1,1"), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("0,1"), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("1,x"), InvalidPermutation);
    CHECK_THROWS_AS(Permutation({2, 3}), InvalidPermutation);
  }

  TEST_CASE("inverse, reverse, complement") {
    const Permutation s({2, 3, 1});
    CHECK(s.inverse() == Permutation({3, 1, 2}));
    CHECK(reverse(s) == Permutation({1, 3, 2}));
    CHECK(complement(s) == Permutation({2, 1, 3}));
    CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
  }

  TEST_CASE("enumeration is lexicographic and complete") {
    for (int n = 0; n <= 6; ++n) {
      std::vector<Permutation> all;
      for (const Permutation& p : enumerate_permutations(n)) all.push_back(p);
      CHECK(all.size() == factorial(n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::set<Permutation>(all.begin(), all.end()).size() == all.size());
      for (std::uint64_t r = 0; r < all.size(); ++r) CHECK(unrank_permutation(n, r) == all[r]);
    }
    CHECK_THROWS_AS(enumerate_permutations(kMaxEnumerate + 1), EnumerationTooLarge);
  }

  TEST_CASE("decorated permutations") {
    const DecoratedPermutation d = parse_decorated("1,3,2 | 1-");
    CHECK_FALSE(d.weakly_up(1));
    CHECK(d.weakly_down(1));
    CHECK(d.weakly_up(2));
    CHECK(d.weakly_down(3));
    CHECK(to_string(parse_decorated("1,2 | 1+,2−")) == to_string(parse_decorated("1,2 | 1+,2-")));
    CHECK_THROWS_AS(parse_decorated("1,2 | 1+"), InvalidPermutation);
    CHECK_THROWS_AS(parse_decorated("2,1 | 1+"), InvalidPermutation);
    // sum over sigma of 2^fix(sigma): 1, 2, 5, 16, 65
    const std::size_t expected[] = {1, 2, 5, 16, 65, 326};
    for (int n = 0; n <= 5; ++n) CHECK(enumerate_decorated(n).size() == expected[n]);
  }
}
