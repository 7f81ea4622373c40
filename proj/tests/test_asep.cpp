#include "doctest.h"
#include "qeul/asep.hpp"
#include "qeul/series.hpp"

using namespace qeul;

namespace {
const MultiPoly q = MultiPoly::q();
AsepParameters params(mpq_class a, mpq_class b, mpq_class qq) { return {a, b, qq}; }
}  // namespace

TEST_SUITE("asep") {
  TEST_CASE("chain rules") {
    const MarkovChain one = build_chain(1, params(mpq_class(1, 2), mpq_class(1, 3), 0));
    // state 0 is empty, state 1 holds a particle
    CHECK(one.matrix[0][1] == mpq_class(1, 4));
    CHECK(one.matrix[1][0] == mpq_class(1, 6));
    CHECK(one.matrix[0][0] == mpq_class(3, 4));
    CHECK(one.matrix[1][1] == mpq_class(5, 6));
    const MarkovChain two = build_chain(2, params(1, 1, mpq_class(1, 2)));
    const auto xo = parse_configuration("XO").index();
    const auto ox = parse_configuration("OX").index();
    CHECK(two.matrix[xo][ox] == mpq_class(1, 3));
    CHECK(two.matrix[ox][xo] == mpq_class(1, 6));
    for (const auto& row : two.matrix) {
      mpq_class sum = 0;
      for (const auto& v : row) sum += v;
      CHECK(sum == 1);
    }
    const MarkovChain tasep = build_chain(3, params(1, 1, 0));
    CHECK(tasep.matrix[parse_configuration("OXO").index()][parse_configuration("XOO").index()] == 0);
  }

  TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(build_chain(0, {}), ParameterOutOfRange);
    CHECK_THROWS_AS(build_chain(kMaxChainSize + 1, {}), ParameterOutOfRange);
    CHECK_THROWS_AS(build_chain(2, params(0, 1, 0)), ParameterOutOfRange);
    CHECK_THROWS_AS(build_chain(2, params(1, 2, 0)), ParameterOutOfRange);
    CHECK_THROWS_AS(build_chain(2, params(1, 1, -1)), ParameterOutOfRange);
  }

  TEST_CASE("stationary distribution") {
    const auto pi = stationary(build_chain(1, params(mpq_class(1, 2), mpq_class(1, 3), 0)));
    CHECK(pi[1] == mpq_class(3, 5));
    CHECK(pi[0] == mpq_class(2, 5));
    const MarkovChain chain = build_chain(3, params(mpq_class(1, 2), 1, mpq_class(1, 3)));
    const auto p3 = stationary(chain);
    for (std::size_t j = 0; j < chain.states(); ++j) {
      mpq_class s = 0;
      for (std::size_t i = 0; i < chain.states(); ++i) s += p3[i] * chain.matrix[i][j];
      CHECK(s == p3[j]);
      CHECK(p3[j] > 0);
    }
  }

  TEST_CASE("weights") {
    const AsepParameters ab = params(mpq_class(1, 2), mpq_class(1, 3), 0);
    CHECK(config_weight(parse_configuration("X"), ab) == 3);
    CHECK(config_weight(parse_configuration("O"), ab) == 2);
    CHECK(partition_function(1, ab) == 5);
    CHECK(config_weight_symbolic(parse_configuration("XO")) == 2 + q);
    CHECK(config_weight_symbolic(parse_configuration("OO")) == MultiPoly(1));
    CHECK(partition_function_symbolic(1) == MultiPoly(2));
    CHECK(partition_function_symbolic(2) == 5 + q);
  }

  TEST_CASE("matrix ansatz") {
    CHECK(verify_matrix_ansatz(1, params(mpq_class(2, 3), mpq_class(1, 5), 0)).passed());
    CHECK(verify_matrix_ansatz(3, params(1, 1, mpq_class(1, 2))).passed());
    const AnsatzReport r = verify_matrix_ansatz(2, params(mpq_class(1, 2), mpq_class(1, 3), mpq_class(2, 5)));
    CHECK(r.passed());
    CHECK(r.rows.size() == 4);
    mpq_class total = 0;
    for (const auto& row : r.rows) total += row.pi;
    CHECK(total == 1);
    CHECK_THROWS(verify_matrix_ansatz(9, {}));
  }

  TEST_CASE("k-particle polynomials") {
    CHECK(k_particle_polynomial(2, 1) == 3 + q);
    CHECK(k_particle_polynomial(2, 0) == MultiPoly(1));
    CHECK(k_particle_polynomial(2, 2) == MultiPoly(1));
    for (int n = 1; n <= 6; ++n) {
      MultiPoly sum;
      for (int k = 0; k <= n; ++k) {
        CHECK(k_particle_polynomial(n, k) == ehat_polynomial(k + 1, n + 1));
        sum += k_particle_polynomial(n, k);
      }
      CHECK(sum == partition_function_symbolic(n));
    }
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("2/4") == mpq_class(1, 2));
    CHECK(parse_rational("3") == 3);
    CHECK(to_string(mpq_class(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  }
}
