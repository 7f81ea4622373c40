#include "qeul/perm_stats.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <utility>

namespace qeul {

namespace {

template <class Profile>
struct FieldEntry {
  std::string_view name;
  int Profile::*member;
};

constexpr std::array<FieldEntry<StatProfile>, 16> kStatFields{{
    {"n", &StatProfile::n},
    {"wexc", &StatProfile::wexc},
    {"a_plus", &StatProfile::a_plus},
    {"a_minus", &StatProfile::a_minus},
    {"a_pm", &StatProfile::a_pm},
    {"c_plus", &StatProfile::c_plus},
    {"c_minus", &StatProfile::c_minus},
    {"crossings", &StatProfile::crossings},
    {"nestings", &StatProfile::nestings},
    {"alignments", &StatProfile::alignments},
    {"descents", &StatProfile::descents},
    {"ascents", &StatProfile::ascents},
    {"p31_2", &StatProfile::p31_2},
    {"p2_31", &StatProfile::p2_31},
    {"p13_2", &StatProfile::p13_2},
    {"p2_13", &StatProfile::p2_13},
}};

constexpr std::array<FieldEntry<DecoratedProfile>, 12> kDecoratedFields{{
    {"n", &DecoratedProfile::n},
    {"wexc", &DecoratedProfile::wexc},
    {"a_plus", &DecoratedProfile::a_plus},
    {"a_minus", &DecoratedProfile::a_minus},
    {"a_pm", &DecoratedProfile::a_pm},
    {"c_plus", &DecoratedProfile::c_plus},
    {"c_minus", &DecoratedProfile::c_minus},
    {"crossings", &DecoratedProfile::crossings},
    {"nestings", &DecoratedProfile::nestings},
    {"alignments", &DecoratedProfile::alignments},
    {"strict_exceedances", &DecoratedProfile::strict_exceedances},
    {"anti_exceedances", &DecoratedProfile::anti_exceedances},
}};

template <class Profile, std::size_t N>
int Profile::*lookup(const std::array<FieldEntry<Profile>, N>& table, std::string_view field) {
  for (const auto& e : table) {
    if (e.name == field) return e.member;
  }
  throw UnknownField("unknown statistic '" + std::string(field) + "'");
}

template <class Profile, std::size_t N>
std::vector<int Profile::*> resolve(const std::array<FieldEntry<Profile>, N>& table,
                                    const Selector& selector) {
  std::vector<int Profile::*> members;
  members.reserve(selector.size());
  for (const auto& name : selector) members.push_back(lookup(table, name));
  return members;
}

void check_value(const Permutation& sigma, int value) {
  if (value < 1 || value > sigma.size()) {
    throw std::out_of_range("value " + std::to_string(value) + " outside 1.." +
                            std::to_string(sigma.size()));
  }
}

}  // namespace

PositionStats position_stats(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i > n) throw std::out_of_range("position out of range");
  PositionStats s;
  const int si = sigma(i);
  for (int j = 1; j <= n; ++j) {
    const int sj = sigma(j);
    if (j < i && i <= si && si < sj) ++s.a_plus;
    if (j > i && i > si && si > sj) ++s.a_minus;
    if ((j <= sj && sj < si && si < i) || (si < i && i < j && j <= sj)) ++s.a_pm;
    if (j < i && i <= sj && sj < si) ++s.c_plus;
    if (j > i && i > sj && sj > si) ++s.c_minus;
  }
  return s;
}

StatProfile stat_profile(const Permutation& sigma) {
  StatProfile p;
  const int n = sigma.size();
  p.n = n;
  for (int i = 1; i <= n; ++i) {
    const int si = sigma(i);
    if (si >= i) ++p.wexc;
    const PositionStats s = position_stats(sigma, i);
    p.a_plus += s.a_plus;
    p.a_minus += s.a_minus;
    p.a_pm += s.a_pm;
    p.c_plus += s.c_plus;
    p.c_minus += s.c_minus;
  }
  for (int i = 1; i + 1 <= n; ++i) {
    const int left = sigma(i);
    const int right = sigma(i + 1);
    if (left > right) {
      ++p.descents;
    } else {
      ++p.ascents;
    }
    for (int j = 1; j <= n; ++j) {
      const int sj = sigma(j);
      // (i, i+1) is the adjacent pair; j is the isolated letter.
      if (j > i + 1) {
        if (left > sj && sj > right) ++p.p31_2;
        if (right > sj && sj > left) ++p.p13_2;
      }
      if (j < i) {
        if (right < sj && sj < left) ++p.p2_31;
        if (left < sj && sj < right) ++p.p2_13;
      }
    }
  }
  p.crossings = p.c_plus + p.c_minus;
  p.nestings = p.a_plus + p.a_minus;
  p.alignments = p.nestings + p.a_pm;
  return p;
}

int height(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i > n) throw std::out_of_range("height index out of range");
  int open_above = 0;
  int open_below = 0;
  for (int j = 1; j < i; ++j) {
    if (sigma(j) >= i) ++open_above;
  }
  for (int j = i; j <= n; ++j) {
    if (sigma(j) < i) ++open_below;
  }
  if (open_above != open_below) throw std::logic_error("height counts disagree");
  return open_above;
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Valley: return "valley";
    case ValueKind::DoubleAscent: return "double-ascent";
    case ValueKind::DoubleDescent: return "double-descent";
    case ValueKind::Peak: return "peak";
  }
  return "?";
}

ValueKind classify_value(const Permutation& sigma, int value) {
  check_value(sigma, value);
  const int n = sigma.size();
  const int j = sigma.preimage(value);
  const int left = j > 1 ? sigma(j - 1) : 0;
  const int right = j < n ? sigma(j + 1) : n + 1;
  if (left > value) return value < right ? ValueKind::Valley : ValueKind::DoubleDescent;
  return value < right ? ValueKind::DoubleAscent : ValueKind::Peak;
}

bool begins_ascent(const Permutation& sigma, int value) {
  const ValueKind kind = classify_value(sigma, value);
  return kind == ValueKind::Valley || kind == ValueKind::DoubleAscent;
}

PatternCounts pattern_counts_at_value(const Permutation& sigma, int value) {
  check_value(sigma, value);
  const int n = sigma.size();
  const int j = sigma.preimage(value);
  PatternCounts c;
  for (int k = 2; k <= n; ++k) {
    if (!(sigma(k - 1) > value && value > sigma(k))) continue;
    if (k < j) ++c.count_31_2;
    if (k > j) ++c.count_2_31;
  }
  return c;
}

DecoratedProfile decorated_profile(const DecoratedPermutation& d) {
  DecoratedProfile p;
  const int n = d.size();
  p.n = n;
  for (int i = 1; i <= n; ++i) {
    const int si = d(i);
    const bool up_i = d.weakly_up(i);
    const bool down_i = d.weakly_down(i);
    if (up_i) ++p.wexc;
    if (i < si) ++p.strict_exceedances;
    if (i > si) ++p.anti_exceedances;
    for (int j = 1; j <= n; ++j) {
      const int sj = d(j);
      const bool up_j = d.weakly_up(j);
      if (j < i && up_i && si < sj) ++p.a_plus;
      if (j > i && down_i && si > sj) ++p.a_minus;
      if (down_i && si > sj && up_j) ++p.a_pm;
      if (down_i && up_j && j > i) ++p.a_pm;
      if (i < j && j <= si && si < sj) ++p.c_plus;
      if (j > i && i > sj && sj > si) ++p.c_minus;
    }
  }
  p.crossings = p.c_plus + p.c_minus;
  p.nestings = p.a_plus + p.a_minus;
  p.alignments = p.nestings + p.a_pm;
  return p;
}

int stat_field(const StatProfile& profile, std::string_view field) {
  return profile.*lookup(kStatFields, field);
}

int stat_field(const DecoratedProfile& profile, std::string_view field) {
  return profile.*lookup(kDecoratedFields, field);
}

std::vector<std::string_view> stat_field_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kStatFields) out.push_back(e.name);
  return out;
}

std::vector<std::string_view> decorated_field_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kDecoratedFields) out.push_back(e.name);
  return out;
}

Census joint_distribution(int n, const Selector& selector, unsigned threads) {
  if (n < 0 || n > kMaxCensus) {
    throw EnumerationTooLarge("census supports 0 <= n <= " + std::to_string(kMaxCensus));
  }
  const auto members = resolve(kStatFields, selector);
  auto tally = [&](std::uint64_t first, std::uint64_t last) {
    Census local;
    if (first >= last) return local;
    std::vector<int> key(members.size());
    // Walk the chunk with next_permutation from its first element.
    const Permutation start = unrank_permutation(n, first);
    std::vector<int> word(start.word().begin(), start.word().end());
    for (std::uint64_t r = first; r < last; ++r) {
      const StatProfile p = stat_profile(Permutation(word));
      for (std::size_t f = 0; f < members.size(); ++f) key[f] = p.*members[f];
      ++local[key];
      std::next_permutation(word.begin(), word.end());
    }
    return local;
  };

  const std::uint64_t total = factorial(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) return tally(0, total);

  std::vector<std::future<Census>> parts;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (std::uint64_t first = 0; first < total; first += chunk) {
    parts.push_back(std::async(std::launch::async, tally, first, std::min(total, first + chunk)));
  }
  Census merged;
  for (auto& part : parts) {
    for (const auto& [key, count] : part.get()) merged[key] += count;
  }
  return merged;
}

Census decorated_joint_distribution(int n, const Selector& selector) {
  if (n < 0 || n > kMaxDecoratedCensus) {
    throw EnumerationTooLarge("decorated census supports 0 <= n <= " +
                              std::to_string(kMaxDecoratedCensus));
  }
  const auto members = resolve(kDecoratedFields, selector);
  Census census;
  std::vector<int> key(members.size());
  for (const auto& d : enumerate_decorated(n)) {
    const DecoratedProfile p = decorated_profile(d);
    for (std::size_t f = 0; f < members.size(); ++f) key[f] = p.*members[f];
    ++census[key];
  }
  return census;
}

}  // namespace qeul
