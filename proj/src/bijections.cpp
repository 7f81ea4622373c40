#include "qeul/bijections.hpp"

#include <algorithm>

#include "qeul/perm_stats.hpp"

namespace qeul {

namespace {

bool is_up_or_east(Step s) { return s == Step::N || s == Step::E; }

int capacity(Step s, int height) { return is_up_or_east(s) ? height : height - 1; }

}  // namespace

Monomial LabeledPath::weight() const {
  Monomial m;
  for (const StepLabel& l : labels) {
    m = m * Monomial{static_cast<std::uint16_t>(l.q), static_cast<std::uint16_t>(l.p),
                     static_cast<std::uint16_t>(l.y)};
  }
  return m;
}

void check_labels(const LabeledPath& lp) {
  if (static_cast<int>(lp.labels.size()) != lp.path.size()) {
    throw MalformedLabel("label count differs from path length");
  }
  for (int i = 0; i < lp.path.size(); ++i) {
    const Step s = lp.path[i];
    const StepLabel& l = lp.labels[static_cast<std::size_t>(i)];
    if (l.y != (is_up_or_east(s) ? 1 : 0)) {
      throw MalformedLabel("y exponent at step " + std::to_string(i + 1));
    }
    if (l.p < 0 || l.q < 0 || l.p + l.q != capacity(s, lp.path.start_height(i))) {
      throw MalformedLabel("p/q exponents at step " + std::to_string(i + 1) +
                           " do not match the step's capacity");
    }
  }
}

LabeledPath swap_pq(const LabeledPath& lp) {
  LabeledPath out = lp;
  for (StepLabel& l : out.labels) std::swap(l.p, l.q);
  return out;
}

LabeledPath fz_map(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Step> steps;
  std::vector<StepLabel> labels;
  steps.reserve(static_cast<std::size_t>(n));
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int image = sigma(i);
    const int pre = sigma.preimage(i);
    const PositionStats st = position_stats(sigma, i);
    if (image >= i) {
      steps.push_back(image > i && pre > i ? Step::N : Step::E);
      labels.push_back({1, st.a_plus, st.c_plus});
    } else {
      steps.push_back(pre > i ? Step::Ebar : Step::S);
      labels.push_back({0, st.a_minus, st.c_minus});
    }
  }
  return {validate_path(std::move(steps)), std::move(labels)};
}

Permutation fz_inverse(const LabeledPath& lp) {
  check_labels(lp);
  const int n = lp.path.size();
  std::vector<int> image(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> open_arcs;       // positions, ordered by target
  std::vector<int> pending_values;  // increasing

  auto close_front_arc = [&](int target) {
    if (open_arcs.empty()) throw MalformedLabel("no open arc to close");
    image[static_cast<std::size_t>(open_arcs.front())] = target;
    open_arcs.erase(open_arcs.begin());
  };
  auto open_arc = [&](int position, int rank) {
    if (rank < 0 || rank > static_cast<int>(open_arcs.size())) {
      throw MalformedLabel("arc rank out of range");
    }
    open_arcs.insert(open_arcs.begin() + rank, position);
  };
  auto take_pending = [&](int rank) {
    if (rank < 0 || rank >= static_cast<int>(pending_values.size())) {
      throw MalformedLabel("pending value rank out of range");
    }
    const int v = pending_values[static_cast<std::size_t>(rank)];
    pending_values.erase(pending_values.begin() + rank);
    return v;
  };

  for (int i = 1; i <= n; ++i) {
    const StepLabel& l = lp.labels[static_cast<std::size_t>(i - 1)];
    switch (lp.path[i - 1]) {
      case Step::N:
        open_arc(i, l.q);
        pending_values.push_back(i);
        break;
      case Step::E:
        if (l.q == 0) {
          image[static_cast<std::size_t>(i)] = i;
        } else {
          close_front_arc(i);
          open_arc(i, l.q - 1);
        }
        break;
      case Step::S:
        close_front_arc(i);
        image[static_cast<std::size_t>(i)] = take_pending(l.p);
        break;
      case Step::Ebar:
        image[static_cast<std::size_t>(i)] = take_pending(l.p);
        pending_values.push_back(i);
        break;
    }
  }
  if (!open_arcs.empty() || !pending_values.empty()) {
    throw MalformedLabel("unclosed arcs at end of path");
  }
  return Permutation(std::vector<int>(image.begin() + 1, image.end()));
}

LabeledPath fv_map(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Step> steps;
  std::vector<StepLabel> labels;
  for (int v = 1; v <= n; ++v) {
    const PatternCounts c = pattern_counts_at_value(sigma, v);
    switch (classify_value(sigma, v)) {
      case ValueKind::Valley: steps.push_back(Step::N); break;
      case ValueKind::DoubleAscent: steps.push_back(Step::E); break;
      case ValueKind::DoubleDescent: steps.push_back(Step::Ebar); break;
      case ValueKind::Peak: steps.push_back(Step::S); break;
    }
    labels.push_back({is_up_or_east(steps.back()) ? 1 : 0, c.count_31_2, c.count_2_31});
  }
  return {validate_path(std::move(steps)), std::move(labels)};
}

Permutation fv_inverse(const LabeledPath& lp) {
  check_labels(lp);
  constexpr int kSlot = 0;
  std::vector<int> tokens{kSlot};
  const int n = lp.path.size();
  for (int v = 1; v <= n; ++v) {
    const Step s = lp.path[v - 1];
    const int slot = lp.labels[static_cast<std::size_t>(v - 1)].p;
    const auto slots = static_cast<int>(std::count(tokens.begin(), tokens.end(), kSlot));
    const int usable = is_up_or_east(s) ? slots : slots - 1;
    if (slot < 0 || slot >= usable) throw MalformedLabel("slot index out of range");

    auto it = tokens.begin();
    for (int seen = -1;; ++it) {
      if (*it == kSlot && ++seen == slot) break;
    }
    switch (s) {
      case Step::N:
        *it = v;
        it = tokens.insert(it, kSlot);
        tokens.insert(it + 2, kSlot);
        break;
      case Step::E:
        *it = v;
        tokens.insert(it + 1, kSlot);
        break;
      case Step::Ebar:
        *it = v;
        tokens.insert(it, kSlot);
        break;
      case Step::S:
        *it = v;
        break;
    }
  }
  std::erase(tokens, kSlot);
  return Permutation(std::move(tokens));
}

Permutation transport(const Permutation& sigma) { return fz_inverse(swap_pq(fv_map(sigma))); }

Permutation transport_unswapped(const Permutation& sigma) { return fz_inverse(fv_map(sigma)); }

TwoRowedArrays two_rowed_arrays(const Permutation& sigma) {
  const int n = sigma.size();
  auto at = [&](int j) { return j == 0 ? 0 : (j == n + 1 ? n + 1 : sigma(j)); };

  TwoRowedArrays out;
  std::vector<bool> ends_descent(static_cast<std::size_t>(n + 1), false);
  for (int j = 1; j <= n; ++j) {
    if (at(j) > at(j + 1)) {
      out.f_top.push_back(at(j));
    } else {
      out.g_top.push_back(at(j));
    }
    if (at(j - 1) > at(j)) ends_descent[static_cast<std::size_t>(at(j))] = true;
  }
  std::sort(out.f_top.begin(), out.f_top.end());
  std::sort(out.g_top.begin(), out.g_top.end());

  std::vector<int> rank(static_cast<std::size_t>(n + 1), 0);
  for (int v = 1; v <= n; ++v) {
    rank[static_cast<std::size_t>(v)] = pattern_counts_at_value(sigma, v).count_2_31;
  }

  // f: entries with 2-31(v) smaller entries to their right; insert by
  // increasing value so later (larger) entries do not disturb the count.
  for (int v = 1; v <= n; ++v) {
    if (!ends_descent[static_cast<std::size_t>(v)]) continue;
    const int r = rank[static_cast<std::size_t>(v)];
    const int len = static_cast<int>(out.f_bottom.size());
    if (r > len) throw AmbiguousArray("no row order realizes 2-31 counts in f");
    out.f_bottom.insert(out.f_bottom.begin() + (len - r), v);
  }
  // g: entries with 2-31(v) larger entries to their left; insert by
  // decreasing value.
  for (int v = n; v >= 1; --v) {
    if (ends_descent[static_cast<std::size_t>(v)]) continue;
    const int r = rank[static_cast<std::size_t>(v)];
    if (r > static_cast<int>(out.g_bottom.size())) {
      throw AmbiguousArray("no row order realizes 2-31 counts in g");
    }
    out.g_bottom.insert(out.g_bottom.begin() + r, v);
  }
  if (out.f_top.size() != out.f_bottom.size() || out.g_top.size() != out.g_bottom.size()) {
    throw AmbiguousArray("two-rowed array rows have different lengths");
  }

  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (std::size_t t = 0; t < out.f_top.size(); ++t) {
    word[static_cast<std::size_t>(out.f_top[t] - 1)] = out.f_bottom[t];
  }
  for (std::size_t t = 0; t < out.g_top.size(); ++t) {
    word[static_cast<std::size_t>(out.g_top[t] - 1)] = out.g_bottom[t];
  }
  out.tau = Permutation(std::move(word));
  return out;
}

}  // namespace qeul
