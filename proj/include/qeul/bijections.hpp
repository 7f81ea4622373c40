#pragma once

/**
 * @file bijections.hpp
 * @brief Permutations <-> labeled bicolored Motzkin paths.
 *
 * Foata-Zeilberger (fz_*) reads positions and arc statistics; Francon-Viennot
 * (fv_*) reads values and vincular pattern counts. Both produce a label
 * y^e p^a q^c per step with e = 1 exactly on N and E, and a + c equal to the
 * starting height h (N, E) or h - 1 (S, Ebar).
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "qeul/paths.hpp"
#include "qeul/permutation.hpp"
#include "qeul/poly.hpp"

namespace qeul {

struct StepLabel {
  int y = 0;
  int p = 0;
  int q = 0;
  bool operator==(const StepLabel&) const = default;
};

struct LabeledPath {
  BicoloredMotzkinPath path;
  std::vector<StepLabel> labels;

  /// Product of the step labels.
  Monomial weight() const;
  bool operator==(const LabeledPath&) const = default;
};

class MalformedLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws MalformedLabel when the label count, the y exponents or the
/// capacity a + c disagree with the path.
void check_labels(const LabeledPath& lp);

/// Label with the p and q exponents exchanged (capacity is unchanged).
LabeledPath swap_pq(const LabeledPath& lp);

/// Step i is N if i < sigma(i) and i < sigma^{-1}(i), E if i < sigma(i) and
/// i > sigma^{-1}(i), Ebar and S symmetrically; fixed points are E. N/E
/// steps carry y p^|A_+(i)| q^|C_+(i)|, S/Ebar steps p^|A_-(i)| q^|C_-(i)|.
LabeledPath fz_map(const Permutation& sigma);

/// Rebuilds sigma scanning positions left to right. Pending upper arcs are
/// kept ordered by their (future) targets: the q exponent of an N or E step
/// is the insertion rank of the new arc, and an E step with q exponent 0 is
/// a fixed point. Pending lower values are kept in increasing order and the
/// p exponent of an S or Ebar step picks sigma(i) among them.
Permutation fz_inverse(const LabeledPath& lp);

/// Step for value i from its valley / double ascent / double descent / peak
/// type; label y^[N or E] p^{31-2(i)} q^{2-31(i)}.
LabeledPath fv_map(const Permutation& sigma);

/// Inserts values 1..n into a word of slots; the p exponent of step i is the
/// slot index counted from the left. The rightmost slot (next to the n+1
/// sentinel) only accepts N and E.
Permutation fv_inverse(const LabeledPath& lp);

/// fz_inverse(swap_pq(fv_map(sigma))): k descents, l occurrences of 31-2
/// and m of 2-31 become n - k weak exceedances, l crossings, m nestings.
Permutation transport(const Permutation& sigma);
/// fz_inverse(fv_map(sigma)) without the exchange: 31-2 lands on nestings.
Permutation transport_unswapped(const Permutation& sigma);

class AmbiguousArray : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TwoRowedArrays {
  std::vector<int> f_top;
  std::vector<int> f_bottom;
  std::vector<int> g_top;
  std::vector<int> g_bottom;
  Permutation tau;
};

/// f pairs the beginnings of descents (increasing) with the ends of
/// descents, ordered so each entry i has 2-31(i) smaller entries to its
/// right; g pairs the beginnings of ascents (increasing) with the remaining
/// values, ordered so each entry i has 2-31(i) larger entries to its left.
/// tau is the union of both arrays read as a function.
TwoRowedArrays two_rowed_arrays(const Permutation& sigma);
inline Permutation two_rowed_map(const Permutation& sigma) {
  return two_rowed_arrays(sigma).tau;
}

}  // namespace qeul
