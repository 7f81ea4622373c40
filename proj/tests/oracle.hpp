#pragma once

// Direct transcriptions of the set definitions, used as independent
// oracles. Words are 1-based values in a 0-based vector.

#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline int at(const Word& w, int i) { return w[static_cast<std::size_t>(i - 1)]; }
inline int n_of(const Word& w) { return static_cast<int>(w.size()); }

inline int a_plus(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = 1; j <= n_of(w); ++j)
      if (j < i && i <= at(w, i) && at(w, i) < at(w, j)) ++c;
  return c;
}

inline int a_minus(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = 1; j <= n_of(w); ++j)
      if (j > i && i > at(w, i) && at(w, i) > at(w, j)) ++c;
  return c;
}

inline int a_pm(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = 1; j <= n_of(w); ++j) {
      const int si = at(w, i);
      const int sj = at(w, j);
      if (j <= sj && sj < si && si < i) ++c;
      if (si < i && i < j && j <= sj) ++c;
    }
  return c;
}

inline int c_plus(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = 1; j <= n_of(w); ++j)
      if (j < i && i <= at(w, j) && at(w, j) < at(w, i)) ++c;
  return c;
}

inline int c_minus(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = 1; j <= n_of(w); ++j)
      if (j > i && i > at(w, j) && at(w, j) > at(w, i)) ++c;
  return c;
}

inline int wexc(const Word& w) {
  int c = 0;
  for (int j = 1; j <= n_of(w); ++j)
    if (at(w, j) >= j) ++c;
  return c;
}

inline int descents(const Word& w) {
  int c = 0;
  for (int j = 1; j < n_of(w); ++j)
    if (at(w, j) > at(w, j + 1)) ++c;
  return c;
}

// Occurrences of 31-2: i < j with w(i) > w(j) > w(i+1), i and i+1 adjacent.
inline int p31_2(const Word& w) {
  int c = 0;
  for (int i = 1; i < n_of(w); ++i)
    for (int j = i + 2; j <= n_of(w); ++j)
      if (at(w, i) > at(w, j) && at(w, j) > at(w, i + 1)) ++c;
  return c;
}

// Occurrences of 2-31: i < j with w(j+1) < w(i) < w(j).
inline int p2_31(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = i + 1; j < n_of(w); ++j)
      if (at(w, j + 1) < at(w, i) && at(w, i) < at(w, j)) ++c;
  return c;
}

// Occurrences of 13-2: i < j with w(i) < w(j) < w(i+1).
inline int p13_2(const Word& w) {
  int c = 0;
  for (int i = 1; i < n_of(w); ++i)
    for (int j = i + 2; j <= n_of(w); ++j)
      if (at(w, i) < at(w, j) && at(w, j) < at(w, i + 1)) ++c;
  return c;
}

// Occurrences of 2-13: i < j with w(j) < w(i) < w(j+1).
inline int p2_13(const Word& w) {
  int c = 0;
  for (int i = 1; i <= n_of(w); ++i)
    for (int j = i + 1; j < n_of(w); ++j)
      if (at(w, j) < at(w, i) && at(w, i) < at(w, j + 1)) ++c;
  return c;
}

}  // namespace oracle
