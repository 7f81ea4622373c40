#pragma once

/**
 * @file paths.hpp
 * @brief Bicolored Motzkin paths, step weight schemes, the projection onto
 *        ASEP configurations and the length-raising transfer map.
 *
 * A path is a word over {N, S, E, Ebar}. The running height before step i
 * is #N - #S among the earlier steps; it must stay non-negative and end at 0.
 */

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qeul/configuration.hpp"
#include "qeul/poly.hpp"

namespace qeul {

enum class Step : std::uint8_t { N, S, E, Ebar };

/// "N", "S", "E", "B" (B is Ebar).
char step_letter(Step s);

class InvalidPath : public std::invalid_argument {
 public:
  enum class Kind { NegativeHeight, NonzeroFinalHeight, BadLetter };
  InvalidPath(Kind kind, int index, const std::string& what)
      : std::invalid_argument(what), kind_(kind), index_(index) {}
  Kind kind() const { return kind_; }
  /// 1-based index of the offending step (final height: path length).
  int index() const { return index_; }

 private:
  Kind kind_;
  int index_;
};

class BicoloredMotzkinPath {
 public:
  BicoloredMotzkinPath() = default;

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  Step operator[](int i) const { return steps_[static_cast<std::size_t>(i)]; }
  /// Height before the 0-based step i; start_height(size()) is 0.
  int start_height(int i) const { return heights_[static_cast<std::size_t>(i)]; }
  /// Number of N and E steps.
  int up_or_east() const;

  bool operator==(const BicoloredMotzkinPath& o) const { return steps_ == o.steps_; }
  auto operator<=>(const BicoloredMotzkinPath& o) const { return steps_ <=> o.steps_; }

 private:
  friend BicoloredMotzkinPath validate_path(std::vector<Step> steps);
  std::vector<Step> steps_;
  std::vector<int> heights_{0};
};

/// Throws InvalidPath naming the first violating index.
BicoloredMotzkinPath validate_path(std::vector<Step> steps);
/// Parses letters N, S, E, B.
BicoloredMotzkinPath parse_path(std::string_view text);
std::string to_string(const BicoloredMotzkinPath& path);

inline constexpr int kMaxPathLength = 14;

/// Calls visit(path) for every valid path of length n (n <= kMaxPathLength).
void for_each_path(int n, const std::function<void(const BicoloredMotzkinPath&)>& visit);
std::vector<BicoloredMotzkinPath> enumerate_paths(int n);

/// A weight for each (step, starting height).
template <class T>
using WeightScheme = std::function<T(Step, int)>;

/// N, E at height h: y[h+1]_{p,q}; S, Ebar at height h: [h]_{p,q}. With
/// refined = false, p is set to 1.
WeightScheme<MultiPoly> scheme_fz(bool refined = true);
/// E: y[h+1], Ebar: [h+1], N: y[h+1], S: q[h].
WeightScheme<MultiPoly> scheme_decorated(bool refined = true);
/// Stationary-weight steps with rational alpha, beta, q. Throws
/// std::invalid_argument if alpha or beta is zero.
WeightScheme<mpq_class> scheme_asep(const mpq_class& alpha, const mpq_class& beta,
                                    const mpq_class& q);
/// The same rule at alpha = beta = 1 with q symbolic.
WeightScheme<MultiPoly> scheme_asep_symbolic();
/// Every step at height h weighs [h+1]_q.
WeightScheme<MultiPoly> scheme_uniform_q();
/// N, E at height h weigh [h+1]_q; S, Ebar weigh [h]_q.
WeightScheme<MultiPoly> scheme_shifted_q();

template <class T>
T path_weight(const BicoloredMotzkinPath& path, const WeightScheme<T>& scheme) {
  T w(1L);
  for (int i = 0; i < path.size(); ++i) w *= scheme(path[i], path.start_height(i));
  return w;
}

/// Ebar and S become empty cells; E and N become particles.
BasicConfiguration theta(const BicoloredMotzkinPath& path);

/// All valid paths whose i-th step is N or E exactly when cell i holds a
/// particle.
std::vector<BicoloredMotzkinPath> theta_fiber(const BasicConfiguration& config);

/// Expands each step into a pair of N/S half-steps, wraps the word in
/// N ... S and re-pairs it with offset one (NN->N, NS->E, SN->Ebar, SS->S).
/// Expansion is N->NN, E->SN, Ebar->NS, S->SS, so (#N + #E) goes up by one
/// and the image never has Ebar at height 0.
BicoloredMotzkinPath lemma_transfer(const BicoloredMotzkinPath& path);
/// Same construction with E->NS, Ebar->SN; (#N + #E) becomes n - k + 1.
BicoloredMotzkinPath lemma_transfer_unswapped(const BicoloredMotzkinPath& path);

}  // namespace qeul
