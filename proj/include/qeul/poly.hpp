#pragma once

/**
 * @file poly.hpp
 * @brief Sparse polynomials in q, p, y with big-integer coefficients, and
 *        Laurent polynomials in q with big-rational coefficients.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qeul {

/// q^eq * p^ep * y^ey.
struct Monomial {
  std::uint16_t eq = 0;
  std::uint16_t ep = 0;
  std::uint16_t ey = 0;

  int degree() const { return eq + ep + ey; }
  Monomial operator*(const Monomial& o) const {
    return {static_cast<std::uint16_t>(eq + o.eq), static_cast<std::uint16_t>(ep + o.ep),
            static_cast<std::uint16_t>(ey + o.ey)};
  }
  bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree ascending; ties put higher powers of q, then
/// p, then y first. This is the canonical print order.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.eq != b.eq) return a.eq > b.eq;
    if (a.ep != b.ep) return a.ep > b.ep;
    return a.ey > b.ey;
  }
};

/// Rational values for the variables of a MultiPoly; unset means unbound.
struct Bindings {
  std::optional<mpq_class> q;
  std::optional<mpq_class> p;
  std::optional<mpq_class> y;
};

class UnboundVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, GradedOrder>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly monomial(Monomial m, const mpz_class& c = 1);
  static MultiPoly q() { return monomial({1, 0, 0}); }
  static MultiPoly p() { return monomial({0, 1, 0}); }
  static MultiPoly y() { return monomial({0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of q^eq p^ep y^ey (zero when absent).
  mpz_class coeff(int eq, int ep, int ey) const;
  mpz_class coeff(const Monomial& m) const;

  /// Part of the polynomial of y-degree exactly k, with y removed.
  MultiPoly y_part(int k) const;
  /// Substitutes p = 1.
  MultiPoly at_p_one() const;
  /// Swaps the roles of p and q.
  MultiPoly swap_pq() const;
  /// Multiplies the y^k part by q^(shift(k)) for each k; shift may not
  /// make any exponent negative.
  template <class F>
  MultiPoly shift_q_by_y(F shift) const;

  int max_q_degree() const;
  int max_y_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  /// Exact evaluation; throws UnboundVariable if a variable that occurs
  /// with positive exponent is not bound.
  mpq_class evaluate(const Bindings& at) const;
  double evaluate(double q, double p, double y) const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

template <class F>
MultiPoly MultiPoly::shift_q_by_y(F shift) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const int s = shift(static_cast<int>(m.ey));
    const int eq = static_cast<int>(m.eq) + s;
    if (eq < 0) throw std::domain_error("negative q exponent in shift");
    out.add_term({static_cast<std::uint16_t>(eq), m.ep, m.ey}, c);
  }
  return out;
}

/// Canonical text: graded order, caret exponents, '*' between factors,
/// e.g. "3 + q", "1 + 2*y + y^2 + q*y". Zero prints as "0".
std::string to_string(const MultiPoly& poly);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
MultiPoly q_integer(int n);
/// [n]_{p,q} = sum over a + c = n - 1 of p^a q^c; [0] = 0.
MultiPoly pq_integer(int n);

/// Exact rational evaluation of `poly` at the given bindings.
mpq_class specialize(const MultiPoly& poly, const Bindings& at);

/// Sparse Laurent polynomial in q with rational coefficients.
class LaurentPolyQ {
 public:
  using Terms = std::map<int, mpq_class>;

  LaurentPolyQ() = default;
  LaurentPolyQ(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static LaurentPolyQ monomial(int exponent, const mpq_class& c = 1);
  /// Embeds a polynomial in q alone (p and y must not occur).
  static LaurentPolyQ from_poly(const MultiPoly& poly);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  mpq_class coeff(int e) const;

  bool is_polynomial_with_integer_coefficients() const;
  /// Throws std::domain_error unless is_polynomial_with_integer_coefficients().
  MultiPoly to_poly() const;

  LaurentPolyQ& operator+=(const LaurentPolyQ& o);
  LaurentPolyQ& operator-=(const LaurentPolyQ& o);
  friend LaurentPolyQ operator+(LaurentPolyQ a, const LaurentPolyQ& b) { return a += b; }
  friend LaurentPolyQ operator-(LaurentPolyQ a, const LaurentPolyQ& b) { return a -= b; }
  friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
  LaurentPolyQ pow(unsigned e) const;

  bool operator==(const LaurentPolyQ& o) const { return terms_ == o.terms_; }

  mpq_class evaluate(const mpq_class& q) const;
  double evaluate(double q) const;

 private:
  void add_term(int e, const mpq_class& c);
  Terms terms_;
};

std::string to_string(const LaurentPolyQ& poly);

/// Binomial coefficient with C(n, i) = 0 for i < 0 or i > n.
mpz_class binomial(int n, int i);

}  // namespace qeul
