#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive checks of the identities implemented by the library,
 *        one suite per proposition id.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeul {

enum class Status : std::uint8_t { Pass, Fail, DocumentedDiscrepancy };

std::string_view to_string(Status status);

struct VerificationReport {
  std::string id;
  int max_n = 0;
  Status status = Status::Pass;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  bool ok() const { return status != Status::Fail; }
};

class UnknownProposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PropositionInfo {
  std::string_view id;
  int default_max_n;
  int limit_max_n;
  std::string_view summary;
};

const std::vector<PropositionInfo>& propositions();
const PropositionInfo& proposition(std::string_view id);

/// Runs the suite for `id` on sizes up to max_n (default when max_n < 0).
/// Throws UnknownProposition for an unknown id and std::out_of_range when
/// max_n exceeds the suite's limit.
VerificationReport verify_proposition(std::string_view id, int max_n = -1);

/// Settings of the numeric closed-form comparison.
struct NumericCheckOptions {
  int points = 20;
  double max_abs_q = 0.5;
  double max_abs_x = 0.1;
  double max_abs_y = 1.0;
  int order = 16;
  int terms = 60;
  double tolerance = 1e-8;
  std::uint32_t seed = 20240607;
};

struct NumericCheckResult {
  double q = 0;
  double x = 0;
  double y = 0;
  double series_e = 0;
  double closed_e = 0;
  double series_a = 0;
  double closed_a = 0;
  bool e_ok = false;
  bool a_ok = false;
  std::string e_error;
  std::string a_error;
};

/// Closed forms against the truncated series at deterministic pseudorandom
/// points.
std::vector<NumericCheckResult> closed_form_numeric(const NumericCheckOptions& options = {});

}  // namespace qeul
