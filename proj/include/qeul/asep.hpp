#pragma once

/**
 * @file asep.hpp
 * @brief The discrete-time ASEP chain on n cells, its exact stationary
 *        distribution, and the path-sum weights W(X) and Z_n.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qeul/configuration.hpp"
#include "qeul/poly.hpp"

namespace qeul {

class ParameterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonUniqueStationary : public std::runtime_error {
 public:
  NonUniqueStationary(int nullity, const std::string& what)
      : std::runtime_error(what), nullity_(nullity) {}
  int nullity() const { return nullity_; }

 private:
  int nullity_;
};

inline constexpr int kMaxChainSize = 10;
inline constexpr int kMaxWeightSize = 12;

struct AsepParameters {
  mpq_class alpha = 1;
  mpq_class beta = 1;
  mpq_class q = 0;
};

/// Dense row-stochastic matrix over the 2^n states; state index s is the
/// configuration with leftmost cell as most significant bit, Particle = 1.
struct MarkovChain {
  int n = 0;
  AsepParameters params;
  std::vector<std::vector<mpq_class>> matrix;

  std::size_t states() const { return matrix.size(); }
};

/// Rules with rate 1/(n+1) each: a particle hops right (1) or left (q)
/// into an empty neighbour, enters at the left end (alpha) and leaves at
/// the right end (beta). Requires 1 <= n <= 10, 0 < alpha, beta <= 1 and
/// 0 <= q <= 1.
MarkovChain build_chain(int n, const AsepParameters& params);

/// Exact solution of pi P = pi with sum 1, by fraction-free elimination on
/// the integer-scaled system. Throws NonUniqueStationary unless the null
/// space is one-dimensional, and std::logic_error if the result fails the
/// exact re-check pi P = pi.
std::vector<mpq_class> stationary(const MarkovChain& chain);

/// Sum of path weights over the theta-fiber of the configuration.
mpq_class config_weight(const BasicConfiguration& config, const AsepParameters& params);
/// Same at alpha = beta = 1, as a polynomial in q.
MultiPoly config_weight_symbolic(const BasicConfiguration& config);

mpq_class partition_function(int n, const AsepParameters& params);
MultiPoly partition_function_symbolic(int n);

struct AnsatzRow {
  BasicConfiguration config;
  mpq_class pi;
  mpq_class weight;
  mpq_class ansatz_prob;
  bool match = false;
};

struct AnsatzReport {
  int n = 0;
  AsepParameters params;
  mpq_class partition;
  std::vector<AnsatzRow> rows;  // in state-index order

  bool passed() const;
};

/// Compares pi(X) with W(X)/Z_n for every configuration. Requires n <= 8.
AnsatzReport verify_matrix_ansatz(int n, const AsepParameters& params);

/// Sum of config_weight_symbolic over configurations with k particles.
/// Requires 0 <= k <= n <= 10.
MultiPoly k_particle_polynomial(int n, int k);

/// Parses "a/b" or an integer; throws std::invalid_argument otherwise.
mpq_class parse_rational(const std::string& text);
std::string to_string(const mpq_class& value);

}  // namespace qeul
