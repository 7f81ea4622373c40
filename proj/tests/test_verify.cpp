#include "doctest.h"
#include "qeul/verify.hpp"

using namespace qeul;

TEST_SUITE("verify") {
  TEST_CASE("registry") {
    CHECK(propositions().size() == 19);
    CHECK(proposition("complementarity").default_max_n == 7);
    CHECK_THROWS_AS(proposition("nope"), UnknownProposition);
    CHECK_THROWS_AS(verify_proposition("nope"), UnknownProposition);
    CHECK_THROWS_AS(verify_proposition("cf-census", 9), std::out_of_range);
  }

  TEST_CASE("every suite runs at small size") {
    for (const PropositionInfo& info : propositions()) {
      if (info.id == "closed-form-numeric") continue;
      CAPTURE(info.id);
      const int n = std::min(info.limit_max_n, 4);
      const VerificationReport r = verify_proposition(info.id, n);
      CHECK(r.id == info.id);
      CHECK(r.max_n == n);
      CHECK(r.ok());
      if (r.status == Status::Fail) CHECK_FALSE(r.counterexamples.empty());
    }
  }

  TEST_CASE("statuses of the documented findings") {
    CHECK(verify_proposition("fz-lemma", 6).status == Status::DocumentedDiscrepancy);
    CHECK(verify_proposition("fv-lemma", 6).status == Status::DocumentedDiscrepancy);
    CHECK(verify_proposition("complementarity", 6).status == Status::Pass);
    CHECK(to_string(Status::DocumentedDiscrepancy) == "Documented-Discrepancy");
  }

  TEST_CASE("numeric sampling is deterministic") {
    NumericCheckOptions o;
    o.points = 3;
    const auto a = closed_form_numeric(o);
    const auto b = closed_form_numeric(o);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].q == b[i].q);
      CHECK(std::abs(a[i].q) <= 0.5);
      CHECK(std::abs(a[i].x) <= 0.1);
      CHECK(std::abs(a[i].y) <= 1.0);
    }
  }
}
