#include <set>

#include "doctest.h"
#include "qeul/paths.hpp"
#include "qeul/permutation.hpp"

using namespace qeul;

TEST_SUITE("paths") {
  TEST_CASE("validation") {
    const BicoloredMotzkinPath p = parse_path("NBNESS");
    CHECK(p.size() == 6);
    CHECK(p.start_height(4) == 2);
    CHECK(p.start_height(6) == 0);
    CHECK(p.up_or_east() == 3);
    CHECK(to_string(p) == "NBNESS");
    CHECK(parse_path("").size() == 0);
    try {
      parse_path("S");
      FAIL("expected InvalidPath");
    } catch (const InvalidPath& e) {
      CHECK(e.kind() == InvalidPath::Kind::NegativeHeight);
      CHECK(e.index() == 1);
    }
    try {
      parse_path("NE");
      FAIL("expected InvalidPath");
    } catch (const InvalidPath& e) {
      CHECK(e.kind() == InvalidPath::Kind::NonzeroFinalHeight);
      CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(parse_path("NX"), InvalidPath);
  }

  TEST_CASE("enumeration counts") {
    const std::size_t expected[] = {1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n <= 6; ++n) {
      const auto paths = enumerate_paths(n);
      CHECK(paths.size() == expected[n]);
      CHECK(std::set<BicoloredMotzkinPath>(paths.begin(), paths.end()).size() == paths.size());
    }
    CHECK_THROWS(enumerate_paths(kMaxPathLength + 1));
  }

  TEST_CASE("scheme values") {
    const auto fz = scheme_fz();
    CHECK(fz(Step::S, 0).is_zero());
    CHECK(fz(Step::N, 1) == MultiPoly::y() * pq_integer(2));
    const auto a = scheme_asep(1, 1, mpq_class(1, 2));
    CHECK(a(Step::S, 2) == mpq_class(7, 4));
    const auto b = scheme_asep(mpq_class(1, 3), mpq_class(1, 2), 0);
    CHECK(b(Step::Ebar, 0) == 3);
    CHECK(b(Step::E, 0) == 2);
    CHECK_THROWS_AS(scheme_asep(0, 1, 0), std::invalid_argument);
    const auto s = scheme_asep_symbolic();
    for (int h = 1; h <= 4; ++h) CHECK(s(Step::S, h) == q_integer(h + 1));
  }

  TEST_CASE("path weights") {
    const auto s = scheme_asep_symbolic();
    CHECK(path_weight(parse_path("EB"), s) == MultiPoly(1));
    CHECK(path_weight(parse_path("NS"), s) == 1 + MultiPoly::q());
    CHECK(path_weight(parse_path(""), scheme_fz()) == MultiPoly(1));
  }

  TEST_CASE("weighted path sums give factorials") {
    const auto fz = scheme_fz(false);
    for (int n = 0; n <= 7; ++n) {
      MultiPoly total;
      for (const auto& p : enumerate_paths(n)) total += path_weight(p, fz);
      CHECK(total.evaluate(Bindings{.q = mpq_class(1), .p = mpq_class(1), .y = mpq_class(1)}) ==
            mpq_class(factorial(n)));
    }
  }

  TEST_CASE("theta and its fibers") {
    CHECK(to_string(theta(parse_path("NS"))) == "XO");
    CHECK(to_string(theta(parse_path("EB"))) == "XO");
    CHECK(theta(parse_path("")).size() == 0);
    const auto fiber = theta_fiber(parse_configuration("XO"));
    CHECK(std::set<BicoloredMotzkinPath>(fiber.begin(), fiber.end()) ==
          std::set<BicoloredMotzkinPath>{parse_path("NS"), parse_path("EB")});
    CHECK(theta_fiber(parse_configuration("O")) == std::vector{parse_path("B")});
    CHECK(theta_fiber(parse_configuration("OO")) == std::vector{parse_path("BB")});
    CHECK(to_string(parse_configuration("•∘")) == "XO");
    for (int n = 0; n <= 6; ++n) {
      std::size_t covered = 0;
      for (std::uint32_t c = 0; c < (1u << n); ++c) {
        const auto config = BasicConfiguration::from_index(n, c);
        CHECK(config.index() == c);
        for (const auto& p : theta_fiber(config)) {
          CHECK(theta(p) == config);
          ++covered;
        }
      }
      CHECK(covered == enumerate_paths(n).size());
    }
  }

  TEST_CASE("lemma transfer") {
    CHECK(to_string(lemma_transfer(parse_path(""))) == "E");
    for (int n = 0; n <= 6; ++n) {
      std::set<BicoloredMotzkinPath> images;
      for (const auto& p : enumerate_paths(n)) {
        const auto t = lemma_transfer(p);
        CHECK(t.size() == n + 1);
        CHECK(t.up_or_east() == p.up_or_east() + 1);
        for (int i = 0; i < t.size(); ++i) CHECK_FALSE((t[i] == Step::Ebar && t.start_height(i) == 0));
        images.insert(t);
        CHECK(lemma_transfer_unswapped(p).up_or_east() == n - p.up_or_east() + 1);
      }
      CHECK(images.size() == enumerate_paths(n).size());
    }
  }
}
