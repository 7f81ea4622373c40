#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV renderings of library values. JSON documents carry
 *        "schema": "qeul/1".
 */

#include "json.hpp"

#include <string>
#include <vector>

#include "qeul/asep.hpp"
#include "qeul/bijections.hpp"
#include "qeul/perm_stats.hpp"
#include "qeul/poly.hpp"
#include "qeul/series.hpp"
#include "qeul/verify.hpp"

namespace qeul {

inline constexpr const char* kSchema = "qeul/1";

nlohmann::json to_json(const StatProfile& profile);
nlohmann::json to_json(const DecoratedProfile& profile);
/// List of {"q","p","y","c"} with the coefficient as a decimal string.
nlohmann::json to_json(const MultiPoly& poly);
/// {"perm": [...], "path": "NBNESS", "weights": [{"y","p","q"}, ...]}.
nlohmann::json trace_json(const Permutation& sigma, const LabeledPath& lp);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const AnsatzReport& report);
nlohmann::json to_json(const TwoRowedArrays& arrays);

/// Columns config, pi_exact, ansatz_weight, ansatz_prob, match.
std::string ansatz_csv(const AnsatzReport& report);

/// Two-way table of a census over (row, column) keys with row totals.
struct CensusTable {
  std::string row_stat;
  std::string col_stat;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::uint64_t> row_totals;
};

CensusTable census_table(const Census& census, std::string row_stat, std::string col_stat);
std::string to_csv(const CensusTable& table);
std::string to_text(const CensusTable& table);
nlohmann::json to_json(const CensusTable& table);

}  // namespace qeul
