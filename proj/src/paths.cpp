#include "qeul/paths.hpp"

#include <algorithm>

namespace qeul {

// ---- BasicConfiguration ----------------------------------------------------

BasicConfiguration BasicConfiguration::from_index(int n, std::uint32_t code) {
  std::vector<Site> sites(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const bool bit = (code >> (n - 1 - i)) & 1u;
    sites[static_cast<std::size_t>(i)] = bit ? Site::Particle : Site::Empty;
  }
  return BasicConfiguration(std::move(sites));
}

std::uint32_t BasicConfiguration::index() const {
  std::uint32_t code = 0;
  for (Site s : sites_) code = (code << 1u) | (s == Site::Particle ? 1u : 0u);
  return code;
}

int BasicConfiguration::particles() const {
  return static_cast<int>(std::count(sites_.begin(), sites_.end(), Site::Particle));
}

std::string to_string(const BasicConfiguration& config) {
  std::string out;
  for (Site s : config.sites()) out += s == Site::Particle ? 'X' : 'O';
  return out;
}

BasicConfiguration parse_configuration(std::string_view text) {
  std::vector<Site> sites;
  while (!text.empty()) {
    if (text.starts_with("X") || text.starts_with("x") || text.starts_with("1")) {
      sites.push_back(Site::Particle);
      text.remove_prefix(1);
    } else if (text.starts_with("O") || text.starts_with("o") || text.starts_with("0")) {
      sites.push_back(Site::Empty);
      text.remove_prefix(1);
    } else if (text.starts_with("•")) {
      sites.push_back(Site::Particle);
      text.remove_prefix(std::string_view("•").size());
    } else if (text.starts_with("∘")) {
      sites.push_back(Site::Empty);
      text.remove_prefix(std::string_view("∘").size());
    } else {
      throw std::invalid_argument("bad configuration character");
    }
  }
  return BasicConfiguration(std::move(sites));
}

// ---- paths -----------------------------------------------------------------

char step_letter(Step s) {
  switch (s) {
    case Step::N: return 'N';
    case Step::S: return 'S';
    case Step::E: return 'E';
    case Step::Ebar: return 'B';
  }
  return '?';
}

int BicoloredMotzkinPath::up_or_east() const {
  return static_cast<int>(std::count_if(steps_.begin(), steps_.end(),
                                        [](Step s) { return s == Step::N || s == Step::E; }));
}

BicoloredMotzkinPath validate_path(std::vector<Step> steps) {
  BicoloredMotzkinPath path;
  path.heights_.assign(1, 0);
  path.heights_.reserve(steps.size() + 1);
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::N) ++h;
    if (steps[i] == Step::S) --h;
    if (h < 0) {
      throw InvalidPath(InvalidPath::Kind::NegativeHeight, static_cast<int>(i + 1),
                        "path height negative after step " + std::to_string(i + 1));
    }
    path.heights_.push_back(h);
  }
  if (h != 0) {
    throw InvalidPath(InvalidPath::Kind::NonzeroFinalHeight, static_cast<int>(steps.size()),
                      "path ends at height " + std::to_string(h));
  }
  path.steps_ = std::move(steps);
  return path;
}

BicoloredMotzkinPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'N': steps.push_back(Step::N); break;
      case 'S': steps.push_back(Step::S); break;
      case 'E': steps.push_back(Step::E); break;
      case 'B': steps.push_back(Step::Ebar); break;
      default:
        throw InvalidPath(InvalidPath::Kind::BadLetter, static_cast<int>(i + 1),
                          "path letters are N, S, E, B");
    }
  }
  return validate_path(std::move(steps));
}

std::string to_string(const BicoloredMotzkinPath& path) {
  std::string out;
  for (Step s : path.steps()) out += step_letter(s);
  return out;
}

namespace {

constexpr Step kAllSteps[] = {Step::N, Step::S, Step::E, Step::Ebar};

void extend(std::vector<Step>& prefix, int height, int n,
            const std::function<bool(int, Step)>& allowed,
            const std::function<void(const BicoloredMotzkinPath&)>& visit) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    if (height == 0) visit(validate_path(prefix));
    return;
  }
  const int remaining = n - pos;
  for (Step s : kAllSteps) {
    if (!allowed(pos, s)) continue;
    const int next = height + (s == Step::N) - (s == Step::S);
    if (next < 0 || next > remaining - 1) continue;
    prefix.push_back(s);
    extend(prefix, next, n, allowed, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_path(int n, const std::function<void(const BicoloredMotzkinPath&)>& visit) {
  if (n < 0 || n > kMaxPathLength) {
    throw std::out_of_range("path enumeration supports 0 <= n <= " +
                            std::to_string(kMaxPathLength));
  }
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, 0, n, [](int, Step) { return true; }, visit);
}

std::vector<BicoloredMotzkinPath> enumerate_paths(int n) {
  std::vector<BicoloredMotzkinPath> out;
  for_each_path(n, [&](const BicoloredMotzkinPath& p) { out.push_back(p); });
  return out;
}

WeightScheme<MultiPoly> scheme_fz(bool refined) {
  return [refined](Step s, int h) -> MultiPoly {
    auto bracket = [refined](int m) { return refined ? pq_integer(m) : q_integer(m); };
    switch (s) {
      case Step::N:
      case Step::E: return MultiPoly::y() * bracket(h + 1);
      case Step::S:
      case Step::Ebar: return bracket(h);
    }
    return MultiPoly();
  };
}

WeightScheme<MultiPoly> scheme_decorated(bool refined) {
  return [refined](Step s, int h) -> MultiPoly {
    auto bracket = [refined](int m) { return refined ? pq_integer(m) : q_integer(m); };
    switch (s) {
      case Step::N:
      case Step::E: return MultiPoly::y() * bracket(h + 1);
      case Step::Ebar: return bracket(h + 1);
      case Step::S: return MultiPoly::q() * bracket(h);
    }
    return MultiPoly();
  };
}

namespace {

mpq_class q_int_value(const mpq_class& q, int m) {
  mpq_class total = 0;
  mpq_class power = 1;
  for (int i = 0; i < m; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

mpq_class power(const mpq_class& q, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

WeightScheme<mpq_class> scheme_asep(const mpq_class& alpha, const mpq_class& beta,
                                    const mpq_class& q) {
  if (alpha == 0 || beta == 0) throw std::invalid_argument("alpha and beta must be nonzero");
  const mpq_class inv_a = 1 / alpha;
  const mpq_class inv_b = 1 / beta;
  return [=](Step s, int h) -> mpq_class {
    switch (s) {
      case Step::N: return q_int_value(q, h + 1);
      case Step::Ebar: return q_int_value(q, h) + power(q, h) * inv_a;
      case Step::E: return q_int_value(q, h) + power(q, h) * inv_b;
      case Step::S: {
        // A valid path never takes S from height 0, where q^(h-1) is undefined.
        if (h < 1) throw std::logic_error("S step evaluated at height 0");
        return q_int_value(q, h) + power(q, h) * inv_a * inv_b -
               power(q, h - 1) * (inv_a - 1) * (inv_b - 1);
      }
    }
    return 0;
  };
}

WeightScheme<MultiPoly> scheme_asep_symbolic() {
  return [](Step s, int h) -> MultiPoly {
    const MultiPoly qh = MultiPoly::monomial({static_cast<std::uint16_t>(h), 0, 0});
    switch (s) {
      case Step::N: return q_integer(h + 1);
      case Step::Ebar:
      case Step::E: return q_integer(h) + qh;
      case Step::S:
        if (h < 1) throw std::logic_error("S step evaluated at height 0");
        // (1/alpha - 1)(1/beta - 1) vanishes at alpha = beta = 1.
        return q_integer(h) + qh;
    }
    return MultiPoly();
  };
}

WeightScheme<MultiPoly> scheme_uniform_q() {
  return [](Step, int h) { return q_integer(h + 1); };
}

WeightScheme<MultiPoly> scheme_shifted_q() {
  return [](Step s, int h) {
    return (s == Step::N || s == Step::E) ? q_integer(h + 1) : q_integer(h);
  };
}

BasicConfiguration theta(const BicoloredMotzkinPath& path) {
  std::vector<Site> sites;
  sites.reserve(path.steps().size());
  for (Step s : path.steps()) {
    sites.push_back(s == Step::N || s == Step::E ? Site::Particle : Site::Empty);
  }
  return BasicConfiguration(std::move(sites));
}

std::vector<BicoloredMotzkinPath> theta_fiber(const BasicConfiguration& config) {
  const int n = config.size();
  if (n > kMaxPathLength) throw std::out_of_range("configuration too long");
  std::vector<BicoloredMotzkinPath> out;
  std::vector<Step> prefix;
  auto allowed = [&config](int pos, Step s) {
    const bool particle_step = s == Step::N || s == Step::E;
    return particle_step == (config[pos] == Site::Particle);
  };
  extend(prefix, 0, n, allowed, [&](const BicoloredMotzkinPath& p) { out.push_back(p); });
  return out;
}

namespace {

BicoloredMotzkinPath transfer(const BicoloredMotzkinPath& path, bool swap_colors) {
  // true = up half-step, false = down half-step.
  std::vector<bool> word;
  word.reserve(static_cast<std::size_t>(2 * path.size() + 2));
  word.push_back(true);
  for (Step s : path.steps()) {
    switch (s) {
      case Step::N: word.insert(word.end(), {true, true}); break;
      case Step::S: word.insert(word.end(), {false, false}); break;
      case Step::E:
        word.insert(word.end(), swap_colors ? std::initializer_list<bool>{false, true}
                                            : std::initializer_list<bool>{true, false});
        break;
      case Step::Ebar:
        word.insert(word.end(), swap_colors ? std::initializer_list<bool>{true, false}
                                            : std::initializer_list<bool>{false, true});
        break;
    }
  }
  word.push_back(false);

  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(path.size() + 1));
  for (std::size_t i = 0; i < word.size(); i += 2) {
    const bool a = word[i];
    const bool b = word[i + 1];
    if (a && b) steps.push_back(Step::N);
    else if (a && !b) steps.push_back(Step::E);
    else if (!a && b) steps.push_back(Step::Ebar);
    else steps.push_back(Step::S);
  }
  return validate_path(std::move(steps));
}

}  // namespace

BicoloredMotzkinPath lemma_transfer(const BicoloredMotzkinPath& path) {
  return transfer(path, true);
}

BicoloredMotzkinPath lemma_transfer_unswapped(const BicoloredMotzkinPath& path) {
  return transfer(path, false);
}

}  // namespace qeul
