// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qeul/asep.hpp"
#include "qeul/bijections.hpp"
#include "qeul/perm_stats.hpp"
#include "qeul/series.hpp"
#include "qeul/verify.hpp"

using namespace qeul;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Runs suites and folds their statuses; Documented-Discrepancy counts as a pass.
Outcome suites(const std::vector<std::pair<const char*, int>>& runs) {
  Outcome o{true, ""};
  for (const auto& [id, n] : runs) {
    const VerificationReport r = verify_proposition(id, n);
    if (!r.ok()) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(id) + "(n<=" + std::to_string(n) + ")=" + std::string(to_string(r.status));
    if (!r.counterexamples.empty()) o.detail += " first: " + r.counterexamples.front();
  }
  return o;
}

Outcome with_budget(Outcome o, double elapsed, double budget) {
  if (elapsed >= budget) {
    o.pass = false;
    o.detail += "; over time budget";
  }
  return o;
}

Outcome ac1() {
  const Permutation s = parse_permutation("4,7,3,6,2,1,5");
  std::vector<double> times;
  StatProfile p;
  for (int i = 0; i < 101; ++i) {
    const auto t0 = Clock::now();
    p = stat_profile(s);
    times.push_back(seconds_since(t0));
  }
  std::nth_element(times.begin(), times.begin() + 50, times.end());
  const bool exact = p.a_plus == 3 && p.a_minus == 1 && p.a_pm == 2 && p.c_plus == 2 && p.c_minus == 1;
  Outcome o{exact, "A+=" + std::to_string(p.a_plus) + " A-=" + std::to_string(p.a_minus) +
                       " A+-=" + std::to_string(p.a_pm) + " C+=" + std::to_string(p.c_plus) +
                       " C-=" + std::to_string(p.c_minus)};
  return with_budget(o, times[50], 1e-3);
}

Outcome ac2() { return suites({{"complementarity", 8}}); }
Outcome ac3() { return suites({{"cf-census", 8}}); }
Outcome ac4() { return suites({{"formula-vs-cf", 8}}); }
Outcome ac5() { return suites({{"specializations", 8}}); }
Outcome ac6() {
  return suites({{"fz-roundtrip", 7}, {"fv-roundtrip", 7}, {"fz-lemma", 7}, {"fv-lemma", 7}});
}
Outcome ac7() { return suites({{"patterns", 8}, {"pattern-13-2", 8}}); }

Outcome ac8() {
  Outcome o = suites({{"two-rowed", 7}});
  const Permutation tau = two_rowed_map(parse_permutation("5,1,7,4,3,6,8,2"));
  const bool example = tau == parse_permutation("8,6,5,1,3,7,4,2");
  o.pass = o.pass && example;
  o.detail = "example -> " + to_string(tau) + "; " + o.detail;
  return o;
}

Outcome ac9() {
  Outcome o = suites({{"decorated-cf", 6}, {"decorated-identity", 6}});
  const MultiPoly y = MultiPoly::y();
  const bool worked = a_series(2, false)[2] == 1 + 2 * y + y * y + y * MultiPoly::q();
  o.pass = o.pass && worked;
  o.detail = "[x^2] = " + to_string(a_series(2, false)[2]) + "; " + o.detail;
  return o;
}

Outcome ac10() { return suites({{"asep-ansatz", 6}}); }
Outcome ac11() { return suites({{"asep-k-particle", 9}}); }
Outcome ac12() { return suites({{"lemma-transfer", 8}}); }

Outcome ac13() {
  const std::vector<NumericCheckResult> results = closed_form_numeric();
  int e_ok = 0;
  int a_ok = 0;
  std::string first_error;
  for (const NumericCheckResult& r : results) {
    e_ok += r.e_ok ? 1 : 0;
    a_ok += r.a_ok ? 1 : 0;
    if (first_error.empty() && !r.e_error.empty()) first_error = "E: " + r.e_error;
    if (first_error.empty() && !r.a_error.empty()) first_error = "A: " + r.a_error;
  }
  const int total = static_cast<int>(results.size());
  Outcome o{e_ok == total && a_ok == total,
            "E within 1e-8 at " + std::to_string(e_ok) + "/" + std::to_string(total) + ", A at " +
                std::to_string(a_ok) + "/" + std::to_string(total)};
  if (!first_error.empty()) o.detail += "; " + first_error;
  const VerificationReport r = verify_proposition("closed-form-numeric");
  for (const std::string& note : r.notes) o.detail += "\n      note: " + note;
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "worked example", 0, ac1},
      {"AC2", "complementarity", 10, ac2},
      {"AC3", "census vs J-fraction", 30, ac3},
      {"AC4", "formula vs J-fraction", 0, ac4},
      {"AC5", "specializations", 0, ac5},
      {"AC6", "bijection round trips and lemmas", 60, ac6},
      {"AC7", "pattern propositions", 0, ac7},
      {"AC8", "two-rowed map", 0, ac8},
      {"AC9", "decorated series and identity", 60, ac9},
      {"AC10", "ASEP matrix ansatz", 30, ac10},
      {"AC11", "k-particle weights", 0, ac11},
      {"AC12", "lemma transfer", 0, ac12},
      {"AC13", "closed-form numeric", 5, ac13},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(t0);
    if (c.budget > 0 && elapsed >= c.budget) o = with_budget(o, elapsed, c.budget);
    if (!o.pass) ++failed;
    std::printf("%s %s  %s (%.3fs): %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, elapsed, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
