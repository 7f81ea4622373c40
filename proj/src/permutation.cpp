#include "qeul/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qeul {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw InvalidPermutation("unexpected character in permutation text: '" +
                               std::string(1, c) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  inverse_.assign(word_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0) {
      throw InvalidPermutation("not a permutation of 1.." + std::to_string(n));
    }
    inverse_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

Permutation reverse(const Permutation& sigma) {
  std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int v : sigma.word()) w.push_back(n + 1 - v);
  return Permutation(std::move(w));
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_int_list(text));
}

std::string to_string(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out;
}

DecoratedPermutation::DecoratedPermutation(Permutation perm, std::map<int, Color> colors)
    : perm_(std::move(perm)), colors_(std::move(colors)) {
  int fixed = 0;
  for (int i = 1; i <= perm_.size(); ++i) {
    if (!perm_.is_fixed_point(i)) continue;
    ++fixed;
    if (!colors_.contains(i)) {
      throw InvalidPermutation("fixed point " + std::to_string(i) + " has no color");
    }
  }
  if (static_cast<int>(colors_.size()) != fixed) {
    throw InvalidPermutation("colors given for positions that are not fixed points");
  }
}

bool DecoratedPermutation::weakly_up(int i) const {
  const int v = perm_(i);
  return i < v || (i == v && colors_.at(i) == Color::Plus);
}

bool DecoratedPermutation::weakly_down(int i) const {
  const int v = perm_(i);
  return i > v || (i == v && colors_.at(i) == Color::Minus);
}

DecoratedPermutation parse_decorated(std::string_view text) {
  const auto bar = text.find('|');
  Permutation perm = parse_permutation(text.substr(0, bar));
  std::map<int, Color> colors;
  if (bar != std::string_view::npos) {
    std::string_view rest = text.substr(bar + 1);
    std::size_t i = 0;
    while (i < rest.size()) {
      const char c = rest[i];
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      int point = 0;
      auto [ptr, ec] = std::from_chars(rest.data() + i, rest.data() + rest.size(), point);
      if (ec != std::errc{}) throw InvalidPermutation("bad color entry in decorated text");
      i = static_cast<std::size_t>(ptr - rest.data());
      std::string_view tail = rest.substr(i);
      Color color;
      if (tail.starts_with("+")) {
        color = Color::Plus;
        i += 1;
      } else if (tail.starts_with("-")) {
        color = Color::Minus;
        i += 1;
      } else if (tail.starts_with("−")) {
        color = Color::Minus;
        i += std::string_view("−").size();
      } else {
        throw InvalidPermutation("color must be '+' or '-' after fixed point " +
                                 std::to_string(point));
      }
      if (!colors.emplace(point, color).second) {
        throw InvalidPermutation("duplicate color for " + std::to_string(point));
      }
    }
  }
  return DecoratedPermutation(std::move(perm), std::move(colors));
}

std::string to_string(const DecoratedPermutation& dsigma) {
  std::string out = to_string(dsigma.perm());
  if (dsigma.colors().empty()) return out;
  out += " | ";
  bool first = true;
  for (const auto& [point, color] : dsigma.colors()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(point);
    out += color == Color::Plus ? '+' : '-';
  }
  return out;
}

PermutationRange::PermutationRange(int n) : n_(n) {
  if (n < 0 || n > kMaxEnumerate) {
    throw EnumerationTooLarge("permutation enumeration supports 0 <= n <= " +
                              std::to_string(kMaxEnumerate));
  }
}

PermutationRange::iterator::iterator(int n) : done_(false) {
  word_.resize(static_cast<std::size_t>(n));
  std::iota(word_.begin(), word_.end(), 1);
  current_ = Permutation(word_);
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (!std::next_permutation(word_.begin(), word_.end())) {
    done_ = true;
  } else {
    current_ = Permutation(word_);
  }
  return *this;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto idx = static_cast<std::ptrdiff_t>(rank / block);
    rank %= block;
    w.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(w));
}

std::vector<DecoratedPermutation> enumerate_decorated(int n) {
  if (n < 0 || n > kMaxEnumerateDecorated) {
    throw EnumerationTooLarge("decorated enumeration supports 0 <= n <= " +
                              std::to_string(kMaxEnumerateDecorated));
  }
  std::vector<DecoratedPermutation> out;
  for (const Permutation& sigma : enumerate_permutations(n)) {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i) {
      if (sigma.is_fixed_point(i)) fixed.push_back(i);
    }
    const std::uint32_t colorings = 1u << fixed.size();
    for (std::uint32_t mask = 0; mask < colorings; ++mask) {
      std::map<int, Color> colors;
      for (std::size_t b = 0; b < fixed.size(); ++b) {
        colors[fixed[b]] = (mask >> b) & 1u ? Color::Minus : Color::Plus;
      }
      out.emplace_back(sigma, std::move(colors));
    }
  }
  return out;
}

}  // namespace qeul
