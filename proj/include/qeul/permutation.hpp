#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of [n] in one-line notation, decorated permutations,
 *        and exhaustive enumeration.
 *
 * Values and positions are 1-based throughout: sigma(i) for i in 1..n.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeul {

class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EnumerationTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `word` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// sigma^{-1}(v), 1-based.
  int preimage(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }
  bool is_fixed_point(int i) const { return (*this)(i) == i; }

  std::span<const int> word() const { return word_; }
  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return word_ == other.word_; }
  auto operator<=>(const Permutation& other) const { return word_ <=> other.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

/// Left-right reversal (sigma(n), ..., sigma(1)).
Permutation reverse(const Permutation& sigma);

/// Value complement: i -> n + 1 - sigma(i).
Permutation complement(const Permutation& sigma);

/// Accepts comma- and/or whitespace-separated one-line notation.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& sigma);

enum class Color : std::uint8_t { Plus, Minus };

/// A permutation whose fixed points each carry a color in {+, -}.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  /// Throws InvalidPermutation unless `colors` has exactly one entry per
  /// fixed point of `perm`.
  DecoratedPermutation(Permutation perm, std::map<int, Color> colors);

  const Permutation& perm() const { return perm_; }
  const std::map<int, Color>& colors() const { return colors_; }
  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }

  /// i <=_+ sigma(i): i < sigma(i), or a fixed point colored +.
  bool weakly_up(int i) const;
  /// i >=_- sigma(i): i > sigma(i), or a fixed point colored -.
  bool weakly_down(int i) const;

  bool operator==(const DecoratedPermutation&) const = default;

 private:
  Permutation perm_;
  std::map<int, Color> colors_;
};

/// Format "1,2 | 1+,2-"; the color list may be omitted when there are no
/// fixed points. Both '-' and U+2212 are accepted as minus.
DecoratedPermutation parse_decorated(std::string_view text);
std::string to_string(const DecoratedPermutation& dsigma);

inline constexpr int kMaxEnumerate = 10;
inline constexpr int kMaxEnumerateDecorated = 8;

/// All n! permutations in lexicographic order of their one-line words.
/// Single-pass input range; n is limited to kMaxEnumerate.
class PermutationRange {
 public:
  explicit PermutationRange(int n);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class PermutationRange;
    explicit iterator(int n);
    std::vector<int> word_;
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

inline PermutationRange enumerate_permutations(int n) { return PermutationRange(n); }

/// Permutation of lexicographic rank `rank` (0-based) among S_n.
Permutation unrank_permutation(int n, std::uint64_t rank);

std::uint64_t factorial(int n);

/// Every permutation with every coloring of its fixed points; the total
/// count is sum over sigma of 2^fix(sigma). n is limited to
/// kMaxEnumerateDecorated.
std::vector<DecoratedPermutation> enumerate_decorated(int n);

}  // namespace qeul
