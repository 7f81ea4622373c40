#include "qeul/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qeul {

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::monomial(Monomial m, const mpz_class& c) {
  MultiPoly out;
  out.add_term(m, c);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class MultiPoly::coeff(int eq, int ep, int ey) const {
  if (eq < 0 || ep < 0 || ey < 0) return 0;
  return coeff(Monomial{static_cast<std::uint16_t>(eq), static_cast<std::uint16_t>(ep),
                        static_cast<std::uint16_t>(ey)});
}

mpz_class MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

MultiPoly MultiPoly::y_part(int k) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.ey == k) out.add_term({m.eq, m.ep, 0}, c);
  }
  return out;
}

MultiPoly MultiPoly::at_p_one() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.eq, 0, m.ey}, c);
  return out;
}

MultiPoly MultiPoly::swap_pq() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.ep, m.eq, m.ey}, c);
  return out;
}

int MultiPoly::max_q_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.eq));
  return d;
}

int MultiPoly::max_y_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ey));
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

mpq_class rational_pow(const mpq_class& base, unsigned e) {
  mpq_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

const mpq_class& bound(const std::optional<mpq_class>& v, const char* name) {
  if (!v) throw UnboundVariable(std::string("variable ") + name + " is not bound");
  return *v;
}

}  // namespace

mpq_class MultiPoly::evaluate(const Bindings& at) const {
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    if (m.eq) t *= rational_pow(bound(at.q, "q"), m.eq);
    if (m.ep) t *= rational_pow(bound(at.p, "p"), m.ep);
    if (m.ey) t *= rational_pow(bound(at.y, "y"), m.ey);
    total += t;
  }
  return total;
}

double MultiPoly::evaluate(double q, double p, double y) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    total += c.get_d() * std::pow(q, m.eq) * std::pow(p, m.ep) * std::pow(y, m.ey);
  }
  return total;
}

std::string to_string(const MultiPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : poly.terms()) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    auto append = [&](const char* var, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    append("q", m.eq);
    append("p", m.ep);
    append("y", m.ey);

    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

MultiPoly q_integer(int n) {
  MultiPoly out;
  for (int i = 0; i < n; ++i) out += MultiPoly::monomial({static_cast<std::uint16_t>(i), 0, 0});
  return out;
}

MultiPoly pq_integer(int n) {
  MultiPoly out;
  for (int a = 0; a < n; ++a) {
    out += MultiPoly::monomial(
        {static_cast<std::uint16_t>(n - 1 - a), static_cast<std::uint16_t>(a), 0});
  }
  return out;
}

mpq_class specialize(const MultiPoly& poly, const Bindings& at) { return poly.evaluate(at); }

LaurentPolyQ::LaurentPolyQ(const mpq_class& c) { add_term(0, c); }

LaurentPolyQ LaurentPolyQ::monomial(int exponent, const mpq_class& c) {
  LaurentPolyQ out;
  out.add_term(exponent, c);
  return out;
}

LaurentPolyQ LaurentPolyQ::from_poly(const MultiPoly& poly) {
  LaurentPolyQ out;
  for (const auto& [m, c] : poly.terms()) {
    if (m.ep != 0 || m.ey != 0) {
      throw std::invalid_argument("LaurentPolyQ::from_poly: polynomial involves p or y");
    }
    out.add_term(m.eq, mpq_class(c));
  }
  return out;
}

void LaurentPolyQ::add_term(int e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolyQ::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPolyQ::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

mpq_class LaurentPolyQ::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool LaurentPolyQ::is_polynomial_with_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (e < 0 || c.get_den() != 1) return false;
  }
  return true;
}

MultiPoly LaurentPolyQ::to_poly() const {
  if (!is_polynomial_with_integer_coefficients()) {
    throw std::domain_error("Laurent polynomial is not an integer polynomial: " +
                            to_string(*this));
  }
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    out += MultiPoly::monomial({static_cast<std::uint16_t>(e), 0, 0}, c.get_num());
  }
  return out;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolyQ& LaurentPolyQ::operator-=(const LaurentPolyQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
  LaurentPolyQ out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPolyQ LaurentPolyQ::pow(unsigned e) const {
  LaurentPolyQ result(mpq_class(1));
  LaurentPolyQ base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

mpq_class LaurentPolyQ::evaluate(const mpq_class& q) const {
  if (q == 0 && min_exponent() < 0) throw std::domain_error("Laurent polynomial pole at q = 0");
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    const mpq_class base = e >= 0 ? q : mpq_class(1) / q;
    for (int i = 0; i < std::abs(e); ++i) t *= base;
    total += t;
  }
  return total;
}

double LaurentPolyQ::evaluate(double q) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) total += c.get_d() * std::pow(q, e);
  return total;
}

std::string to_string(const LaurentPolyQ& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

mpz_class binomial(int n, int i) {
  if (n < 0 || i < 0 || i > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  return r;
}

}  // namespace qeul
