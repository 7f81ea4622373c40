#pragma once

/**
 * @file perm_stats.hpp
 * @brief Single-permutation statistics: weak exceedances, crossings,
 *        nestings, alignments, descents and the vincular patterns
 *        31-2, 2-31, 13-2, 2-13.
 *
 * All counts come straight from the set definitions, one O(n^2) pass over
 * ordered pairs of positions.
 */

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qeul/permutation.hpp"

namespace qeul {

struct StatProfile {
  int n = 0;
  int wexc = 0;
  int a_plus = 0;
  int a_minus = 0;
  int a_pm = 0;
  int c_plus = 0;
  int c_minus = 0;
  int crossings = 0;
  int nestings = 0;
  int alignments = 0;
  int descents = 0;
  int ascents = 0;
  int p31_2 = 0;
  int p2_31 = 0;
  int p13_2 = 0;
  int p2_13 = 0;

  bool operator==(const StatProfile&) const = default;
};

StatProfile stat_profile(const Permutation& sigma);

/// Per-position set sizes |A_+(i)|, |A_-(i)|, |A_{+,-}(i)|, |C_+(i)|, |C_-(i)|.
struct PositionStats {
  int a_plus = 0;
  int a_minus = 0;
  int a_pm = 0;
  int c_plus = 0;
  int c_minus = 0;
};

PositionStats position_stats(const Permutation& sigma, int i);

/// h_i = |{j < i : sigma(j) >= i}|. Checks that it agrees with
/// |{j >= i : sigma(j) < i}| and throws std::logic_error otherwise.
/// Throws std::out_of_range unless 1 <= i <= n.
int height(const Permutation& sigma, int i);

enum class ValueKind : std::uint8_t { Valley, DoubleAscent, DoubleDescent, Peak };

std::string_view to_string(ValueKind kind);

/// Classifies the position holding `value` with sentinels sigma(0) = 0 and
/// sigma(n+1) = n+1.
ValueKind classify_value(const Permutation& sigma, int value);

/// True when the entry `value` begins an ascent (sigma(j) < sigma(j+1), with
/// sigma(n+1) = n+1).
bool begins_ascent(const Permutation& sigma, int value);

struct PatternCounts {
  int count_31_2 = 0;
  int count_2_31 = 0;
  bool operator==(const PatternCounts&) const = default;
};

/// 31-2(value) and 2-31(value): number of adjacent descents
/// sigma(k-1) > value > sigma(k), k in 2..n, lying left (resp. right) of
/// the position of `value`. Boundary sentinels are never used here.
PatternCounts pattern_counts_at_value(const Permutation& sigma, int value);

struct DecoratedProfile {
  int n = 0;
  int wexc = 0;
  int a_plus = 0;
  int a_minus = 0;
  int a_pm = 0;
  int c_plus = 0;
  int c_minus = 0;
  int crossings = 0;
  int nestings = 0;
  int alignments = 0;
  /// |{i : i < sigma(i)}|, the set the decorated "descedance" wording names.
  int strict_exceedances = 0;
  /// |{j : j > sigma(j)}|, the set displayed in the decorated alignment identity.
  int anti_exceedances = 0;

  bool operator==(const DecoratedProfile&) const = default;
};

/// Fixed points are resolved through their color: i <=_+ sigma(i) and
/// i >=_- sigma(i). The "sigma(j) >= j" conditions inside A_{+,-} use the
/// colored relation j <=_+ sigma(j).
DecoratedProfile decorated_profile(const DecoratedPermutation& dsigma);

/// Ordered list of StatProfile (or DecoratedProfile) field names.
using Selector = std::vector<std::string>;
using Census = std::map<std::vector<int>, std::uint64_t>;

class UnknownField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Field lookup by name; throws UnknownField.
int stat_field(const StatProfile& profile, std::string_view field);
int stat_field(const DecoratedProfile& profile, std::string_view field);

std::vector<std::string_view> stat_field_names();
std::vector<std::string_view> decorated_field_names();

inline constexpr int kMaxCensus = 8;
inline constexpr int kMaxDecoratedCensus = 6;

/// Exact census of the selected statistic tuple over all of S_n. The rank
/// space is split into `threads` contiguous chunks whose count maps are
/// merged; the result does not depend on the chunking.
Census joint_distribution(int n, const Selector& selector, unsigned threads = 1);

/// Same over all decorated permutations of [n].
Census decorated_joint_distribution(int n, const Selector& selector);

}  // namespace qeul
