#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qeul/asep.hpp"
#include "qeul/bijections.hpp"
#include "qeul/io.hpp"
#include "qeul/perm_stats.hpp"
#include "qeul/permutation.hpp"
#include "qeul/series.hpp"
#include "qeul/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::string format = "text";
  int max_n = -1;
  unsigned seed = 0;
};

using nlohmann::json;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_stats(const Globals& g, const std::string& text, bool decorated) {
  if (decorated) {
    const qeul::DecoratedPermutation d = qeul::parse_decorated(text);
    const qeul::DecoratedProfile p = qeul::decorated_profile(d);
    json j = qeul::to_json(p);
    j["perm"] = qeul::to_string(d);
    j["n_minus_k_times_k"] = (p.n - p.wexc) * p.wexc;
    j["alignments_plus_crossings_plus_anti_exceedances"] =
        p.alignments + p.crossings + p.anti_exceedances;
    j["schema"] = qeul::kSchema;
    if (g.format == "json") {
      print_json(j);
    } else {
      for (const auto& [key, value] : j.items()) std::cout << key << ": " << value << '\n';
    }
    return kExitOk;
  }
  const qeul::Permutation sigma = qeul::parse_permutation(text);
  const qeul::StatProfile p = qeul::stat_profile(sigma);
  json j = qeul::to_json(p);
  j["perm"] = qeul::to_string(sigma);
  j["k_minus_1_times_n_minus_k"] = (p.wexc - 1) * (p.n - p.wexc);
  j["crossings_plus_alignments"] = p.crossings + p.alignments;
  j["schema"] = qeul::kSchema;
  if (g.format == "json") {
    print_json(j);
  } else {
    for (const auto& [key, value] : j.items()) std::cout << key << ": " << value << '\n';
  }
  return kExitOk;
}

int cmd_table(const Globals& g, int n, const std::string& row, const std::string& col) {
  const qeul::Census census = qeul::joint_distribution(n, {row, col}, 4);
  const qeul::CensusTable table = qeul::census_table(census, row, col);
  if (g.format == "json") {
    json j = qeul::to_json(table);
    j["n"] = n;
    print_json(j);
  } else if (g.format == "csv") {
    std::cout << qeul::to_csv(table);
  } else {
    std::cout << qeul::to_text(table);
  }
  return kExitOk;
}

int cmd_poly(const Globals& g, const std::string& kind, int k, int n) {
  qeul::MultiPoly poly;
  if (kind == "ehat") {
    poly = qeul::ehat_polynomial(k, n);
  } else {
    if (k < 0 || k > n || n > qeul::kMaxEhatOrderPlain) {
      throw std::out_of_range("a needs 0 <= k <= n <= " + std::to_string(qeul::kMaxEhatOrderPlain));
    }
    poly = qeul::a_series(n, false).coeff(n, k);
  }
  if (g.format == "json") {
    print_json({{"schema", qeul::kSchema},
                {"kind", kind},
                {"k", k},
                {"n", n},
                {"text", qeul::to_string(poly)},
                {"terms", qeul::to_json(poly)}});
  } else {
    std::cout << qeul::to_string(poly) << '\n';
  }
  return kExitOk;
}

int cmd_series(const Globals& g, const std::string& kind, int order, bool refined) {
  qeul::TruncatedSeries s;
  if (kind == "ehat") {
    s = qeul::ehat_series(order, refined);
  } else if (kind == "a") {
    s = qeul::a_series(order, refined);
  } else {
    s = qeul::e_twisted_series(order);
  }
  if (g.format == "json") {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(qeul::to_json(s[n]));
    print_json({{"schema", qeul::kSchema}, {"kind", kind}, {"refined", refined}, {"coefficients", coeffs}});
  } else if (g.format == "csv") {
    std::cout << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) std::cout << n << ",\"" << qeul::to_string(s[n]) << "\"\n";
  } else {
    for (int n = 0; n <= s.order(); ++n) std::cout << "x^" << n << ": " << qeul::to_string(s[n]) << '\n';
  }
  return kExitOk;
}

void print_report(const Globals& g, const qeul::VerificationReport& r) {
  if (g.format == "json") {
    print_json(qeul::to_json(r));
    return;
  }
  std::cout << r.id << " (max-n " << r.max_n << "): " << qeul::to_string(r.status) << '\n';
  for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
  for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
}

int cmd_verify(const Globals& g, const std::string& id, int max_n) {
  if (id != "all") {
    const qeul::VerificationReport r = qeul::verify_proposition(id, max_n);
    print_report(g, r);
    return r.ok() ? kExitOk : kExitFailure;
  }
  bool ok = true;
  json all = json::array();
  for (const auto& info : qeul::propositions()) {
    const int n = max_n < 0 ? -1 : std::min(max_n, info.limit_max_n);
    const qeul::VerificationReport r = qeul::verify_proposition(info.id, n);
    ok = ok && r.ok();
    if (g.format == "json") {
      all.push_back(qeul::to_json(r));
    } else {
      print_report(g, r);
    }
  }
  if (g.format == "json") print_json({{"schema", qeul::kSchema}, {"reports", all}});
  return ok ? kExitOk : kExitFailure;
}

int cmd_asep(const Globals& g, int n, const std::string& alpha, const std::string& beta,
             const std::string& q) {
  const qeul::AsepParameters params{qeul::parse_rational(alpha), qeul::parse_rational(beta),
                                    qeul::parse_rational(q)};
  const qeul::AnsatzReport r = qeul::verify_matrix_ansatz(n, params);
  if (g.format == "json") {
    print_json(qeul::to_json(r));
  } else {
    std::cout << qeul::ansatz_csv(r);
  }
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_bij(const Globals& g, const std::string& map, const std::string& text) {
  const qeul::Permutation sigma = qeul::parse_permutation(text);
  json j;
  if (map == "fz") {
    j = qeul::trace_json(sigma, qeul::fz_map(sigma));
  } else if (map == "fv") {
    j = qeul::trace_json(sigma, qeul::fv_map(sigma));
  } else if (map == "transport") {
    const qeul::Permutation image = qeul::transport(sigma);
    j = qeul::trace_json(sigma, qeul::fv_map(sigma));
    j["image"] = qeul::to_string(image);
    j["image_path"] = qeul::to_string(qeul::fz_map(image).path);
  } else {
    const qeul::TwoRowedArrays arrays = qeul::two_rowed_arrays(sigma);
    j = qeul::to_json(arrays);
    j["perm"] = qeul::to_string(sigma);
    j["image"] = qeul::to_string(arrays.tau);
  }
  j["map"] = map;
  j["schema"] = qeul::kSchema;
  if (g.format == "json") {
    print_json(j);
    return kExitOk;
  }
  if (map == "two-rowed") {
    std::cout << j["image"].get<std::string>() << '\n';
    return kExitOk;
  }
  std::cout << "path: " << j["path"].get<std::string>() << "\nweights:";
  const qeul::LabeledPath lp = map == "fz" ? qeul::fz_map(sigma) : qeul::fv_map(sigma);
  for (const qeul::StepLabel& l : lp.labels) {
    std::string w;
    if (l.y) w += "y";
    if (l.p) w += "p" + (l.p > 1 ? "^" + std::to_string(l.p) : std::string());
    if (l.q) w += "q" + (l.q > 1 ? "^" + std::to_string(l.q) : std::string());
    std::cout << ' ' << (w.empty() ? "1" : w);
  }
  std::cout << '\n';
  if (j.contains("image")) std::cout << "image: " << j["image"].get<std::string>() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Eulerian statistics, continued fractions and the ASEP"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-n", g.max_n, "Largest size for verification and tables");
  app.add_option("--seed", g.seed, "Reserved; all output is deterministic");

  std::function<int()> action;

  auto* stats = app.add_subcommand("stats", "Statistics of a permutation");
  std::string perm_text;
  bool decorated = false;
  stats->add_option("perm", perm_text, "e.g. 4,7,3,6,2,1,5 or '1,2 | 1+,2-'")->required();
  stats->add_flag("--decorated", decorated, "Read a decorated permutation");
  stats->callback([&] { action = [&] { return cmd_stats(g, perm_text, decorated); }; });

  auto* table = app.add_subcommand("table", "Joint distribution of two statistics over S_n");
  int table_n = 0;
  std::string row_stat = "wexc";
  std::string col_stat = "crossings";
  table->add_option("n", table_n, "Permutation size")->required();
  table->add_option("--row", row_stat, "Row statistic");
  table->add_option("--col", col_stat, "Column statistic");
  table->callback([&] { action = [&] { return cmd_table(g, table_n, row_stat, col_stat); }; });

  auto* poly = app.add_subcommand("poly", "Ehat_{k,n}(q) or A_{k,n}(q)");
  std::string poly_kind;
  int poly_k = 0;
  int poly_n = 0;
  poly->add_option("kind", poly_kind)->required()->check(CLI::IsMember({"ehat", "a"}));
  poly->add_option("k", poly_k)->required();
  poly->add_option("n", poly_n)->required();
  poly->callback([&] { action = [&] { return cmd_poly(g, poly_kind, poly_k, poly_n); }; });

  auto* series = app.add_subcommand("series", "Truncated generating function");
  std::string series_kind;
  int series_order = 6;
  bool refined = false;
  series->add_option("kind", series_kind)->required()->check(CLI::IsMember({"ehat", "a", "e"}));
  series->add_option("--order", series_order, "Highest power of x");
  series->add_flag("--refined", refined, "Keep p (crossing/nesting refinement)");
  series->callback([&] { action = [&] { return cmd_series(g, series_kind, series_order, refined); }; });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string prop_id;
  verify->add_option("id", prop_id, "Proposition id or 'all'")->required();
  verify->callback([&] { action = [&] { return cmd_verify(g, prop_id, g.max_n); }; });

  auto* asep = app.add_subcommand("asep", "Stationary distribution against W(X)/Z_n");
  int asep_n = 0;
  std::string alpha = "1";
  std::string beta = "1";
  std::string q = "0";
  asep->add_option("--n", asep_n, "Number of cells")->required();
  asep->add_option("--alpha", alpha, "Entry rate as a/b");
  asep->add_option("--beta", beta, "Exit rate as a/b");
  asep->add_option("--q", q, "Left hop rate as a/b");
  asep->callback([&] { action = [&] { return cmd_asep(g, asep_n, alpha, beta, q); }; });

  auto* bij = app.add_subcommand("bij", "Bijection trace of a permutation");
  std::string map_name;
  std::string bij_perm;
  bij->add_option("map", map_name)->required()->check(
      CLI::IsMember({"fz", "fv", "transport", "two-rowed"}));
  bij->add_option("perm", bij_perm)->required();
  bij->callback([&] { action = [&] { return cmd_bij(g, map_name, bij_perm); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const qeul::NonPolynomialResult& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
