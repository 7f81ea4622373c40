#include "qeul/asep.hpp"

#include <algorithm>
#include <numeric>

#include "qeul/paths.hpp"

namespace qeul {

namespace {

void check_parameters(int n, const AsepParameters& p) {
  if (n < 1 || n > kMaxChainSize) {
    throw ParameterOutOfRange("chain size must be in 1.." + std::to_string(kMaxChainSize));
  }
  if (p.alpha <= 0 || p.alpha > 1) throw ParameterOutOfRange("alpha must be in (0, 1]");
  if (p.beta <= 0 || p.beta > 1) throw ParameterOutOfRange("beta must be in (0, 1]");
  if (p.q < 0 || p.q > 1) throw ParameterOutOfRange("q must be in [0, 1]");
}

}  // namespace

MarkovChain build_chain(int n, const AsepParameters& params) {
  check_parameters(n, params);
  const std::size_t size = std::size_t{1} << n;
  MarkovChain chain;
  chain.n = n;
  chain.params = params;
  chain.matrix.assign(size, std::vector<mpq_class>(size, mpq_class(0)));
  const mpq_class unit(1, n + 1);

  for (std::size_t s = 0; s < size; ++s) {
    auto& row = chain.matrix[s];
    // Cell i (0 = leftmost) is bit n-1-i.
    auto bit = [&](int i) { return std::size_t{1} << (n - 1 - i); };
    auto occupied = [&](int i) { return (s & bit(i)) != 0; };
    for (int i = 0; i + 1 < n; ++i) {
      if (occupied(i) && !occupied(i + 1)) row[s ^ bit(i) ^ bit(i + 1)] += unit;
      if (!occupied(i) && occupied(i + 1)) row[s ^ bit(i) ^ bit(i + 1)] += params.q * unit;
    }
    if (!occupied(0)) row[s ^ bit(0)] += params.alpha * unit;
    if (occupied(n - 1)) row[s ^ bit(n - 1)] += params.beta * unit;
    mpq_class off = 0;
    for (std::size_t t = 0; t < size; ++t) {
      if (t != s) off += row[t];
    }
    row[s] = 1 - off;
  }
  return chain;
}

std::vector<mpq_class> stationary(const MarkovChain& chain) {
  const std::size_t size = chain.states();
  // Row r of the system is column r of (P - I): sum_s pi_s (P_{s,r} - [s=r]) = 0.
  std::vector<std::vector<mpz_class>> a(size, std::vector<mpz_class>(size));
  for (std::size_t r = 0; r < size; ++r) {
    mpz_class scale = 1;
    for (std::size_t s = 0; s < size; ++s) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), chain.matrix[s][r].get_den_mpz_t());
    }
    for (std::size_t s = 0; s < size; ++s) {
      const mpq_class entry = chain.matrix[s][r] - (s == r ? 1 : 0);
      const mpq_class scaled = entry * scale;
      a[r][s] = scaled.get_num();
    }
  }

  // Bareiss elimination to row echelon form.
  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < size && row < size; ++col) {
    std::size_t pivot = row;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t r = row + 1; r < size; ++r) {
      for (std::size_t c = col + 1; c < size; ++c) {
        a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    pivot_cols.push_back(col);
    ++row;
  }

  const auto rank = pivot_cols.size();
  const auto nullity = static_cast<int>(size - rank);
  if (nullity != 1) {
    throw NonUniqueStationary(nullity, "stationary null space has dimension " +
                                           std::to_string(nullity));
  }
  std::size_t free_col = 0;
  while (free_col < rank && pivot_cols[free_col] == free_col) ++free_col;

  std::vector<mpq_class> pi(size, mpq_class(0));
  pi[free_col] = 1;
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t col = pivot_cols[r];
    mpq_class sum = 0;
    for (std::size_t c = col + 1; c < size; ++c) sum += mpq_class(a[r][c]) * pi[c];
    pi[col] = -sum / mpq_class(a[r][col]);
  }
  const mpq_class total = std::accumulate(pi.begin(), pi.end(), mpq_class(0));
  for (mpq_class& v : pi) v /= total;

  for (std::size_t t = 0; t < size; ++t) {
    mpq_class flow = 0;
    for (std::size_t s = 0; s < size; ++s) flow += pi[s] * chain.matrix[s][t];
    if (flow != pi[t]) throw std::logic_error("stationary vector fails pi P = pi");
  }
  return pi;
}

namespace {

void check_weight_size(int n) {
  if (n < 1 || n > kMaxWeightSize) {
    throw std::out_of_range("configuration length must be in 1.." +
                            std::to_string(kMaxWeightSize));
  }
}

}  // namespace

mpq_class config_weight(const BasicConfiguration& config, const AsepParameters& params) {
  check_weight_size(config.size());
  const auto scheme = scheme_asep(params.alpha, params.beta, params.q);
  mpq_class total = 0;
  for (const auto& path : theta_fiber(config)) total += path_weight(path, scheme);
  return total;
}

MultiPoly config_weight_symbolic(const BasicConfiguration& config) {
  check_weight_size(config.size());
  const auto scheme = scheme_asep_symbolic();
  MultiPoly total;
  for (const auto& path : theta_fiber(config)) total += path_weight(path, scheme);
  return total;
}

mpq_class partition_function(int n, const AsepParameters& params) {
  check_weight_size(n);
  mpq_class total = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    total += config_weight(BasicConfiguration::from_index(n, s), params);
  }
  return total;
}

MultiPoly partition_function_symbolic(int n) {
  check_weight_size(n);
  MultiPoly total;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    total += config_weight_symbolic(BasicConfiguration::from_index(n, s));
  }
  return total;
}

bool AnsatzReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const AnsatzRow& r) { return r.match; });
}

AnsatzReport verify_matrix_ansatz(int n, const AsepParameters& params) {
  if (n > 8) throw ParameterOutOfRange("ansatz verification supports n <= 8");
  const MarkovChain chain = build_chain(n, params);
  const std::vector<mpq_class> pi = stationary(chain);
  AnsatzReport report;
  report.n = n;
  report.params = params;
  for (std::uint32_t s = 0; s < chain.states(); ++s) {
    AnsatzRow r;
    r.config = BasicConfiguration::from_index(n, s);
    r.pi = pi[s];
    r.weight = config_weight(r.config, params);
    report.partition += r.weight;
    report.rows.push_back(std::move(r));
  }
  for (AnsatzRow& r : report.rows) {
    r.ansatz_prob = r.weight / report.partition;
    r.match = r.ansatz_prob == r.pi;
  }
  return report;
}

MultiPoly k_particle_polynomial(int n, int k) {
  if (n < 0 || n > kMaxChainSize || k < 0 || k > n) {
    throw std::out_of_range("k_particle_polynomial needs 0 <= k <= n <= 10");
  }
  if (n == 0) return MultiPoly(1L);
  MultiPoly total;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto config = BasicConfiguration::from_index(n, s);
    if (config.particles() == k) total += config_weight_symbolic(config);
  }
  return total;
}

mpq_class parse_rational(const std::string& text) {
  const auto valid = [](const std::string& part, bool allow_sign) {
    std::size_t start = allow_sign && !part.empty() && part[0] == '-' ? 1 : 0;
    return part.size() > start &&
           std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw std::invalid_argument("expected a rational of the form a/b, got '" + text + "'");
  }
  const mpz_class numerator(num);
  const mpz_class denominator(den);
  if (denominator == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  mpq_class value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  return v.get_str();
}

}  // namespace qeul
