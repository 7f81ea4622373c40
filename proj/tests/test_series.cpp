#include <cmath>

#include "doctest.h"
#include "qeul/perm_stats.hpp"
#include "qeul/series.hpp"

using namespace qeul;

namespace {
const MultiPoly q = MultiPoly::q();
const MultiPoly p = MultiPoly::p();
const MultiPoly y = MultiPoly::y();
}  // namespace

TEST_SUITE("series") {
  TEST_CASE("J-fraction expansion") {
    const TruncatedSeries zero = jfraction_series([](int) { return MultiPoly(); },
                                                  [](int) { return MultiPoly(); }, 5);
    CHECK(zero[0] == MultiPoly(1));
    for (int n = 1; n <= 5; ++n) CHECK(zero[n].is_zero());
    // Catalan numbers from b = 0, lambda = 1
    const TruncatedSeries cat = jfraction_series([](int) { return MultiPoly(); },
                                                 [](int) { return MultiPoly(1); }, 10);
    CHECK(cat[10] == MultiPoly(42));
    CHECK(cat[9].is_zero());
    const TruncatedSeries e = ehat_series(4, false);
    CHECK(e[1] == y);
    CHECK(e[2] == y * y + y);
  }

  TEST_CASE("ehat series coefficients") {
    const TruncatedSeries plain = ehat_series(8, false);
    CHECK(plain.coeff(3, 2) == 3 + q);
    for (int n = 0; n <= 8; ++n) CHECK(plain.coeff(n, n) == MultiPoly(1));
    const TruncatedSeries refined = ehat_series(6, true);
    CHECK(refined.coeff(3, 2).coeff(1, 0, 0) == 1);
    CHECK(refined.coeff(3, 2).coeff(0, 1, 0) == 1);
    CHECK(refined[6].swap_pq() == refined[6]);
    CHECK(refined[6].at_p_one() == plain[6]);
    CHECK_THROWS(ehat_series(kMaxEhatOrderRefined + 1, true));
  }

  TEST_CASE("ehat series matches the census") {
    const TruncatedSeries refined = ehat_series(6, true);
    for (int n = 0; n <= 6; ++n) {
      MultiPoly census;
      for (const auto& [key, count] : joint_distribution(n, {"wexc", "crossings", "nestings"})) {
        census += MultiPoly::monomial({static_cast<std::uint16_t>(key[1]), static_cast<std::uint16_t>(key[2]),
                                       static_cast<std::uint16_t>(key[0])},
                                      count);
      }
      CHECK(refined[n] == census);
    }
  }

  TEST_CASE("a series") {
    const TruncatedSeries a = a_series(6, false);
    CHECK(a[0] == MultiPoly(1));
    CHECK(a[1] == 1 + y);
    CHECK(a[2] == 1 + 2 * y + y * y + y * q);
    CHECK(a.coeff(2, 1) == 2 + q);
    CHECK(a.coeff(2, 2) == MultiPoly(1));
    CHECK(a.coeff(1, 1) == MultiPoly(1));
  }

  TEST_CASE("twisted series") {
    const TruncatedSeries t = e_twisted_series(6);
    CHECK(t.coeff(1, 1) == MultiPoly(1));
    CHECK(t.coeff(2, 1) == q);
    CHECK(t.coeff(3, 2) == q * (3 + q));
  }

  TEST_CASE("explicit formula") {
    CHECK(ehat_polynomial(2, 3) == 3 + q);
    for (int n = 1; n <= 8; ++n) {
      CHECK(ehat_polynomial(n, n) == MultiPoly(1));
      CHECK(ehat_polynomial(1, n) == MultiPoly(1));
    }
    const MultiPoly e = ehat_polynomial(2, 3);
    CHECK(e.evaluate(Bindings{.q = mpq_class(1), .p = {}, .y = {}}) == 4);
    CHECK(e.evaluate(Bindings{.q = mpq_class(0), .p = {}, .y = {}}) == 3);
    CHECK(e.evaluate(Bindings{.q = mpq_class(-1), .p = {}, .y = {}}) == 2);
    CHECK_THROWS(ehat_polynomial(0, 3));
    CHECK_THROWS(ehat_polynomial(4, 3));
  }

  TEST_CASE("closed forms agree with the series at small q") {
    const TruncatedSeries t = e_twisted_series(16);
    const double qv = 0.3;
    const double xv = 0.05;
    const double yv = 0.7;
    const double series = t.evaluate(qv, 1.0, xv, yv);
    CHECK(e_fraction_value(qv, xv, yv) == doctest::Approx(series).epsilon(1e-10));
    CHECK(t.evaluate(qv, 1.0, 0.0, yv) == 1.0);
    const TruncatedSeries a = a_series(16, false);
    CHECK(a_fraction_value(0.25, 0.05, 0.5) == doctest::Approx(a.evaluate(0.25, 1.0, 0.05, 0.5)).epsilon(1e-10));
  }

  TEST_CASE("closed forms diverge numerically at small q") {
    CHECK_THROWS_AS(williams_eval_e(0.3, 0.05, 0.7, 60), DivergentTerm);
  }

  TEST_CASE("closed forms match at |q| > 1") {
    const double qv = 2.0;
    const double xv = 0.01;
    const double yv = 0.3;
    const double cf_e = e_fraction_value(qv, xv, yv, 60);
    CHECK(williams_eval_e(qv, xv, yv, 60) == doctest::Approx(cf_e).epsilon(1e-8));
    const double cf_a = a_fraction_value(qv, xv, yv, 60);
    CHECK(williams_eval_a_corrected(qv, xv, yv, 60) == doctest::Approx(cf_a).epsilon(1e-8));
  }

  TEST_CASE("formal closed-form grids") {
    const TruncatedSeries t = e_twisted_series(6);
    const LaurentGrid g = williams_e_coefficients(6, 6);
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= 6; ++k) {
        CHECK(g[n][k] == LaurentPolyQ::from_poly(t.coeff(n, k)));
      }
    }
    const TruncatedSeries a = a_series(6, false);
    const LaurentGrid ga = williams_a_coefficients(6, 6, 0);
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= 6; ++k) CHECK(ga[n][k] == LaurentPolyQ::from_poly(a.coeff(n, k)));
    }
    CHECK_FALSE(williams_a_coefficients(6, 6, 1)[0][0] == LaurentPolyQ(1));
  }

  TEST_CASE("a formula probe") {
    const AFormulaReport r = a_formula_probe(1, 2);
    CHECK(r.cf_coefficient == 2 + q);
    CHECK(r.readings.size() == 4);
    CHECK(a_formula_probe(2, 2).cf_coefficient == MultiPoly(1));
    CHECK(a_formula_probe(1, 1).cf_coefficient == MultiPoly(1));
    CHECK_THROWS(a_formula_probe(1, 9));
  }
}
