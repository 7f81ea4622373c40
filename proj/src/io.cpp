#include "qeul/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qeul {

using nlohmann::json;

json to_json(const StatProfile& p) {
  return json{{"n", p.n},
              {"wexc", p.wexc},
              {"a_plus", p.a_plus},
              {"a_minus", p.a_minus},
              {"a_pm", p.a_pm},
              {"c_plus", p.c_plus},
              {"c_minus", p.c_minus},
              {"crossings", p.crossings},
              {"nestings", p.nestings},
              {"alignments", p.alignments},
              {"descents", p.descents},
              {"ascents", p.ascents},
              {"p31_2", p.p31_2},
              {"p2_31", p.p2_31},
              {"p13_2", p.p13_2},
              {"p2_13", p.p2_13}};
}

json to_json(const DecoratedProfile& p) {
  return json{{"n", p.n},
              {"wexc", p.wexc},
              {"a_plus", p.a_plus},
              {"a_minus", p.a_minus},
              {"a_pm", p.a_pm},
              {"c_plus", p.c_plus},
              {"c_minus", p.c_minus},
              {"crossings", p.crossings},
              {"nestings", p.nestings},
              {"alignments", p.alignments},
              {"strict_exceedances", p.strict_exceedances},
              {"anti_exceedances", p.anti_exceedances}};
}

json to_json(const MultiPoly& poly) {
  json terms = json::array();
  for (const auto& [m, c] : poly.terms()) {
    terms.push_back({{"q", m.eq}, {"p", m.ep}, {"y", m.ey}, {"c", c.get_str()}});
  }
  return terms;
}

json trace_json(const Permutation& sigma, const LabeledPath& lp) {
  json weights = json::array();
  for (const StepLabel& l : lp.labels) weights.push_back({{"y", l.y}, {"p", l.p}, {"q", l.q}});
  const auto word = sigma.word();
  return json{{"perm", std::vector<int>(word.begin(), word.end())},
              {"path", to_string(lp.path)},
              {"weights", weights}};
}

json to_json(const VerificationReport& r) {
  return json{{"schema", kSchema},
              {"id", r.id},
              {"max_n", r.max_n},
              {"status", std::string(to_string(r.status))},
              {"counterexamples", r.counterexamples},
              {"notes", r.notes}};
}

json to_json(const AnsatzReport& r) {
  json rows = json::array();
  for (const AnsatzRow& row : r.rows) {
    rows.push_back({{"config", to_string(row.config)},
                    {"pi_exact", to_string(row.pi)},
                    {"ansatz_weight", to_string(row.weight)},
                    {"ansatz_prob", to_string(row.ansatz_prob)},
                    {"match", row.match}});
  }
  return json{{"schema", kSchema},
              {"n", r.n},
              {"alpha", to_string(r.params.alpha)},
              {"beta", to_string(r.params.beta)},
              {"q", to_string(r.params.q)},
              {"partition_function", to_string(r.partition)},
              {"rows", rows}};
}

json to_json(const TwoRowedArrays& a) {
  const auto word = a.tau.word();
  return json{{"f", {a.f_top, a.f_bottom}},
              {"g", {a.g_top, a.g_bottom}},
              {"tau", std::vector<int>(word.begin(), word.end())}};
}

std::string ansatz_csv(const AnsatzReport& r) {
  std::ostringstream out;
  out << "config,pi_exact,ansatz_weight,ansatz_prob,match\n";
  for (const AnsatzRow& row : r.rows) {
    out << to_string(row.config) << ',' << to_string(row.pi) << ',' << to_string(row.weight) << ','
        << to_string(row.ansatz_prob) << ',' << (row.match ? "true" : "false") << '\n';
  }
  return out.str();
}

CensusTable census_table(const Census& census, std::string row_stat, std::string col_stat) {
  CensusTable t;
  t.row_stat = std::move(row_stat);
  t.col_stat = std::move(col_stat);
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& [key, count] : census) {
    rows.insert(key.at(0));
    cols.insert(key.at(1));
  }
  t.rows.assign(rows.begin(), rows.end());
  t.cols.assign(cols.begin(), cols.end());
  t.counts.assign(t.rows.size(), std::vector<std::uint64_t>(t.cols.size(), 0));
  t.row_totals.assign(t.rows.size(), 0);
  auto index = [](const std::vector<int>& v, int x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  for (const auto& [key, count] : census) {
    const std::size_t r = index(t.rows, key[0]);
    t.counts[r][index(t.cols, key[1])] += count;
    t.row_totals[r] += count;
  }
  return t;
}

std::string to_csv(const CensusTable& t) {
  std::ostringstream out;
  out << t.row_stat << '\\' << t.col_stat;
  for (int c : t.cols) out << ',' << c;
  out << ",total\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << t.rows[r];
    for (std::uint64_t v : t.counts[r]) out << ',' << v;
    out << ',' << t.row_totals[r] << '\n';
  }
  return out.str();
}

std::string to_text(const CensusTable& t) {
  std::ostringstream out;
  const std::string corner = t.row_stat + "\\" + t.col_stat;
  std::size_t width = 6;
  for (const auto& row : t.counts) {
    for (std::uint64_t v : row) width = std::max(width, std::to_string(v).size() + 1);
  }
  auto cell = [&](const std::string& s) {
    out << std::string(width > s.size() ? width - s.size() : 1, ' ') << s;
  };
  out << corner;
  for (int c : t.cols) cell(std::to_string(c));
  cell("total");
  out << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string label = std::to_string(t.rows[r]);
    out << label << std::string(corner.size() > label.size() ? corner.size() - label.size() : 0, ' ');
    for (std::uint64_t v : t.counts[r]) cell(std::to_string(v));
    cell(std::to_string(t.row_totals[r]));
    out << '\n';
  }
  return out.str();
}

json to_json(const CensusTable& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    rows.push_back({{t.row_stat, t.rows[r]}, {"counts", t.counts[r]}, {"total", t.row_totals[r]}});
  }
  return json{{"schema", kSchema},
              {"row_stat", t.row_stat},
              {"col_stat", t.col_stat},
              {"columns", t.cols},
              {"rows", rows}};
}

}  // namespace qeul
