#include "qeul/series.hpp"

#include <algorithm>
#include <cmath>

namespace qeul {

double TruncatedSeries::evaluate(double q, double p, double x, double y) const {
  double total = 0.0;
  double xn = 1.0;
  for (const MultiPoly& c : coeffs_) {
    total += c.evaluate(q, p, y) * xn;
    xn *= x;
  }
  return total;
}

TruncatedSeries jfraction_series(const LevelWeight& b, const LevelWeight& lambda, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const int max_height = order / 2;
  std::vector<MultiPoly> level(static_cast<std::size_t>(max_height + 1));
  std::vector<MultiPoly> down(static_cast<std::size_t>(max_height + 1));
  for (int h = 0; h <= max_height; ++h) {
    level[static_cast<std::size_t>(h)] = b(h);
    if (h > 0) down[static_cast<std::size_t>(h)] = lambda(h);
  }

  std::vector<MultiPoly> coeffs{MultiPoly(1L)};
  std::vector<MultiPoly> dp(static_cast<std::size_t>(max_height + 1));
  dp[0] = MultiPoly(1L);
  for (int pos = 0; pos < order; ++pos) {
    const int remaining = order - pos - 1;
    const int reach = std::min(max_height, remaining);
    std::vector<MultiPoly> next(dp.size());
    for (int h = 0; h <= max_height; ++h) {
      const MultiPoly& cur = dp[static_cast<std::size_t>(h)];
      if (cur.is_zero()) continue;
      if (h <= reach) next[static_cast<std::size_t>(h)] += cur * level[static_cast<std::size_t>(h)];
      if (h + 1 <= reach) next[static_cast<std::size_t>(h + 1)] += cur;
      if (h >= 1 && h - 1 <= reach) {
        next[static_cast<std::size_t>(h - 1)] += cur * down[static_cast<std::size_t>(h)];
      }
    }
    dp = std::move(next);
    coeffs.push_back(dp[0]);
  }
  return TruncatedSeries(std::move(coeffs));
}

namespace {

MultiPoly bracket(int m, bool refined) { return refined ? pq_integer(m) : q_integer(m); }

}  // namespace

TruncatedSeries ehat_series(int order, bool refined) {
  const int limit = refined ? kMaxEhatOrderRefined : kMaxEhatOrderPlain;
  if (order < 0 || order > limit) {
    throw std::out_of_range("ehat series order must be in 0.." + std::to_string(limit));
  }
  const MultiPoly y = MultiPoly::y();
  return jfraction_series([&](int h) { return y * bracket(h + 1, refined) + bracket(h, refined); },
                          [&](int h) { return y * bracket(h, refined).pow(2); }, order);
}

TruncatedSeries a_series(int order, bool refined) {
  const int limit = refined ? kMaxEhatOrderRefined : kMaxEhatOrderPlain;
  if (order < 0 || order > limit) {
    throw std::out_of_range("a series order must be in 0.." + std::to_string(limit));
  }
  const MultiPoly y = MultiPoly::y();
  const MultiPoly one_plus_y = MultiPoly(1L) + y;
  return jfraction_series(
      [&](int h) { return one_plus_y * bracket(h + 1, refined); },
      [&](int h) { return y * MultiPoly::q() * bracket(h, refined).pow(2); }, order);
}

TruncatedSeries e_twisted_series(int order) {
  const TruncatedSeries plain = ehat_series(order, false);
  std::vector<MultiPoly> coeffs;
  for (int n = 0; n <= order; ++n) {
    coeffs.push_back(plain[n].shift_q_by_y([n](int k) { return n - k; }));
  }
  return TruncatedSeries(std::move(coeffs));
}

LaurentPolyQ ehat_formula_laurent(int k, int n) {
  if (k < 1 || k > n) throw std::out_of_range("ehat formula needs 1 <= k <= n");
  LaurentPolyQ sum;
  for (int i = 0; i <= k - 1; ++i) {
    const LaurentPolyQ base = LaurentPolyQ::from_poly(q_integer(k - i)).pow(static_cast<unsigned>(n));
    const LaurentPolyQ binomials = LaurentPolyQ::monomial(k - i, mpq_class(binomial(n, i))) +
                                   LaurentPolyQ(mpq_class(binomial(n, i - 1)));
    LaurentPolyQ term = base * LaurentPolyQ::monomial(k * (i - 1)) * binomials;
    if (i % 2 == 1) term = LaurentPolyQ(mpq_class(-1)) * term;
    sum += term;
  }
  return LaurentPolyQ::monomial(k - k * k) * sum;
}

MultiPoly ehat_polynomial(int k, int n) {
  const LaurentPolyQ value = ehat_formula_laurent(k, n);
  if (!value.is_polynomial_with_integer_coefficients()) {
    throw NonPolynomialResult("Ehat_{" + std::to_string(k) + "," + std::to_string(n) +
                              "} evaluated to " + to_string(value));
  }
  return value.to_poly();
}

namespace {

double q_int(double q, int i) {
  double total = 0.0;
  double power = 1.0;
  for (int j = 0; j < i; ++j) {
    total += power;
    power *= q;
  }
  return total;
}

double checked_quotient(double numerator, double denominator, int i) {
  if (!(std::abs(denominator) >= 1e-300)) {
    throw DivergentTerm("closed-form summand " + std::to_string(i) +
                        " has a denominator below 1e-300 in magnitude");
  }
  return numerator / denominator;
}

void check_finite(double partial, int i) {
  if (!std::isfinite(partial)) {
    throw DivergentTerm("closed-form partial sum is not finite after term " + std::to_string(i));
  }
}

}  // namespace

double williams_eval_e(double q, double x, double y, int terms) {
  double sum = 0.0;
  for (int i = 0; i <= terms; ++i) {
    const double num = std::pow(y, i) * (std::pow(q, 2 * i + 1) - y);
    const double den = std::pow(q, i * i + i + 1) *
                       (std::pow(q, i) - std::pow(q, i + 1) * q_int(q, i) * x + q_int(q, i) * x * y);
    sum += checked_quotient(num, den, i);
    check_finite(sum, i);
  }
  return sum;
}

namespace {

double a_summand(double q, double x, double y, int i) {
  const double num = std::pow(y, i) * (std::pow(q, 2 * i + 1) - y);
  const double den = std::pow(q, i * i + i + 1) *
                     (std::pow(q, i) - std::pow(q, i) * q_int(q, i + 1) * x + q_int(q, i) * x * y);
  return checked_quotient(num, den, i);
}

}  // namespace

double williams_eval_a(double q, double x, double y, int terms) {
  double sum = -y / (1.0 - q);
  for (int i = 1; i <= terms; ++i) {
    sum += a_summand(q, x, y, i);
    check_finite(sum, i);
  }
  return sum;
}

double williams_eval_a_corrected(double q, double x, double y, int terms) {
  double sum = 0.0;
  for (int i = 0; i <= terms; ++i) {
    sum += a_summand(q, x, y, i);
    check_finite(sum, i);
  }
  return sum;
}

double jfraction_value(const std::function<double(int)>& b,
                       const std::function<double(int)>& lambda, double x, int depth) {
  double tail = 0.0;
  for (int h = depth; h >= 0; --h) {
    tail = 1.0 / (1.0 - b(h) * x - lambda(h + 1) * x * x * tail);
  }
  return tail;
}

double e_fraction_value(double q, double x, double y, int depth) {
  // E(q, x, y) = Ehat(q, qx, y/q).
  const double yy = y / q;
  return jfraction_value([&](int h) { return yy * q_int(q, h + 1) + q_int(q, h); },
                         [&](int h) { return yy * q_int(q, h) * q_int(q, h); }, q * x, depth);
}

double a_fraction_value(double q, double x, double y, int depth) {
  return jfraction_value([&](int h) { return (1.0 + y) * q_int(q, h + 1); },
                         [&](int h) { return y * q * q_int(q, h) * q_int(q, h); }, x, depth);
}

namespace {

LaurentGrid empty_grid(int order, int max_y) {
  return LaurentGrid(static_cast<std::size_t>(order + 1),
                     std::vector<LaurentPolyQ>(static_cast<std::size_t>(max_y + 1)));
}

LaurentPolyQ lq(int n) { return LaurentPolyQ::from_poly(q_integer(n)); }

/// Adds y^i (q^(2i+1) - y) q^-(i^2+2i+1) * sum_m x^m (u - v y)^m, where u and
/// v are Laurent polynomials in q, into the grid.
void add_summand(LaurentGrid& grid, int i, const LaurentPolyQ& u, const LaurentPolyQ& v) {
  const int order = static_cast<int>(grid.size()) - 1;
  const int max_y = static_cast<int>(grid[0].size()) - 1;
  const LaurentPolyQ scale = LaurentPolyQ::monomial(-(i * i + 2 * i + 1));
  const LaurentPolyQ lead = scale * LaurentPolyQ::monomial(2 * i + 1);
  const LaurentPolyQ trail = LaurentPolyQ(mpq_class(-1)) * scale;
  for (int m = 0; m <= order; ++m) {
    for (int t = 0; t <= m && i + t <= max_y; ++t) {
      // (u - v y)^m contributes C(m,t) u^(m-t) (-v)^t y^t.
      LaurentPolyQ c = LaurentPolyQ(mpq_class(binomial(m, t))) *
                       u.pow(static_cast<unsigned>(m - t)) * v.pow(static_cast<unsigned>(t));
      if (t % 2 == 1) c = LaurentPolyQ(mpq_class(-1)) * c;
      if (c.is_zero()) continue;
      auto& row = grid[static_cast<std::size_t>(m)];
      row[static_cast<std::size_t>(i + t)] += lead * c;
      if (i + t + 1 <= max_y) row[static_cast<std::size_t>(i + t + 1)] += trail * c;
    }
  }
}

}  // namespace

LaurentGrid williams_e_coefficients(int order, int max_y) {
  LaurentGrid grid = empty_grid(order, max_y);
  for (int i = 0; i <= max_y; ++i) {
    // 1/(1 - [i] x (q - y q^-i)): u = [i] q, v = [i] q^-i.
    add_summand(grid, i, lq(i) * LaurentPolyQ::monomial(1), lq(i) * LaurentPolyQ::monomial(-i));
  }
  return grid;
}

LaurentGrid williams_a_coefficients(int order, int max_y, int first_index) {
  LaurentGrid grid = empty_grid(order, max_y);
  for (int i = first_index; i <= max_y; ++i) {
    // 1/(1 - [i+1] x + [i] x y q^-i): u = [i+1], v = [i] q^-i.
    add_summand(grid, i, lq(i + 1), lq(i) * LaurentPolyQ::monomial(-i));
  }
  return grid;
}

bool AFormulaReport::any_match() const {
  return std::any_of(readings.begin(), readings.end(),
                     [](const AFormulaReading& r) { return r.matches; });
}

AFormulaReport a_formula_probe(int k, int n) {
  if (k < 1 || k > n || n > 8) throw std::out_of_range("a_formula_probe needs 1 <= k <= n <= 8");
  AFormulaReport report;
  report.k = k;
  report.n = n;
  report.cf_coefficient = a_series(n, false).coeff(n, k);

  // Ehat_{kk,m} extended by zero outside 1 <= kk <= m, and 1 at (0,0).
  auto ehat = [](int kk, int m, bool& used_empty) -> MultiPoly {
    if (kk == 0 && m == 0) {
      used_empty = true;
      return MultiPoly(1L);
    }
    if (kk < 1 || kk > m) return MultiPoly();
    return ehat_polynomial(kk, m);
  };
  auto q_power = [](int e) {
    return e >= 0 ? MultiPoly::monomial({static_cast<std::uint16_t>(e), 0, 0}) : MultiPoly();
  };

  struct Variant {
    const char* name;
    bool shift_k;
    bool twisted;
  };
  const Variant variants[] = {
      {"sum C(n,i) Ehat_{k,n-i}", false, false},
      {"sum C(n,i) Ehat_{k-i,n-i}", true, false},
      {"sum C(n,i) q^(n-i-k) Ehat_{k,n-i}", false, true},
      {"sum C(n,i) q^(n-k) Ehat_{k-i,n-i}", true, true},
  };
  for (const Variant& v : variants) {
    AFormulaReading reading;
    reading.name = v.name;
    for (int i = 0; i <= k - 1; ++i) {
      const int kk = v.shift_k ? k - i : k;
      MultiPoly term = MultiPoly(binomial(n, i)) * ehat(kk, n - i, reading.used_empty_convention);
      if (v.twisted) term *= q_power((n - i) - kk);
      reading.value += term;
    }
    reading.matches = reading.value == report.cf_coefficient;
    report.readings.push_back(std::move(reading));
  }
  return report;
}

}  // namespace qeul
