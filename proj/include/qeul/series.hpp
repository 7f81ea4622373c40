#pragma once

/**
 * @file series.hpp
 * @brief Truncated generating functions in x with MultiPoly coefficients:
 *        J-fraction expansion, the q-Eulerian polynomials and the
 *        decorated variant, plus numeric evaluation of the closed forms.
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeul/poly.hpp"

namespace qeul {

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Highest power of x kept.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  /// [x^n y^k] as a polynomial in q and p.
  MultiPoly coeff(int n, int k) const { return (*this)[n].y_part(k); }

  double evaluate(double q, double p, double x, double y) const;

 private:
  std::vector<MultiPoly> coeffs_;
};

using LevelWeight = std::function<MultiPoly(int)>;

/// Expansion of 1/(1 - b_0 x - lambda_1 x^2/(1 - b_1 x - ...)) to order N,
/// by dynamic programming over Motzkin paths: a level step at height h
/// weighs b(h), a down step from height h weighs lambda(h).
TruncatedSeries jfraction_series(const LevelWeight& b, const LevelWeight& lambda, int order);

inline constexpr int kMaxEhatOrderRefined = 12;
inline constexpr int kMaxEhatOrderPlain = 16;

/// b_n = y[n+1] + [n], lambda_n = y[n]^2, with [n]_{p,q} when refined and
/// [n]_q otherwise.
TruncatedSeries ehat_series(int order, bool refined);

/// b_n = (1+y)[n+1], lambda_n = yq[n]^2, with the same order limits.
TruncatedSeries a_series(int order, bool refined);

/// Sum over y^k x^n of q^(n-k) Ehat_{k,n}(q): the y^k part of [x^n] in the
/// plain ehat series is multiplied by q^(n-k).
TruncatedSeries e_twisted_series(int order);

class NonPolynomialResult : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Explicit alternating-sum formula for Ehat_{k,n}(q), evaluated in
/// Laurent arithmetic; throws NonPolynomialResult if the result has a
/// negative power of q or a non-integer coefficient. Requires 1 <= k <= n.
MultiPoly ehat_polynomial(int k, int n);
/// The raw Laurent value of the formula (no polynomiality gate).
LaurentPolyQ ehat_formula_laurent(int k, int n);

class DivergentTerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial sum over i = 0..terms of
///   y^i (q^(2i+1) - y) / (q^(i^2+i+1) (q^i - q^(i+1)[i]x + [i]xy)).
/// Throws DivergentTerm if a denominator drops below 1e-300 in magnitude or
/// the partial sum stops being finite.
double williams_eval_e(double q, double x, double y, int terms);
/// -y/(1-q) + sum over i = 1..terms of
///   y^i (q^(2i+1) - y) / (q^(i^2+i+1) (q^i - q^i[i+1]x + [i]xy)).
double williams_eval_a(double q, double x, double y, int terms);
/// Sum over i = 0..terms of the same summand, without -y/(1-q).
double williams_eval_a_corrected(double q, double x, double y, int terms);

/// Numeric value of the J-fraction truncated at `depth` levels.
double jfraction_value(const std::function<double(int)>& b,
                       const std::function<double(int)>& lambda, double x, int depth);
double e_fraction_value(double q, double x, double y, int depth = 200);
double a_fraction_value(double q, double x, double y, int depth = 200);

/// Formal expansion of the closed-form summands: entry [n][k] is the exact
/// coefficient of x^n y^k (k <= max_y) as a Laurent polynomial in q. Each
/// coefficient receives finitely many contributions (summand i starts at
/// y^i), so the grid is exact.
using LaurentGrid = std::vector<std::vector<LaurentPolyQ>>;
LaurentGrid williams_e_coefficients(int order, int max_y);
/// Summands i >= first_index of the A closed form (no -y/(1-q) term).
LaurentGrid williams_a_coefficients(int order, int max_y, int first_index);

struct AFormulaReading {
  std::string name;
  MultiPoly value;
  bool matches = false;
  bool used_empty_convention = false;
};

struct AFormulaReport {
  int k = 0;
  int n = 0;
  MultiPoly cf_coefficient;
  std::vector<AFormulaReading> readings;
  bool any_match() const;
};

/// Evaluates sum_{i=0}^{k-1} C(n,i) E_{.,n-i} under several readings of E
/// and compares each with [x^n y^k] of the decorated series. Never throws
/// on a mismatch. Requires 1 <= k <= n <= 8.
AFormulaReport a_formula_probe(int k, int n);

}  // namespace qeul
