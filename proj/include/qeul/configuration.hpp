#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qeul {

enum class Site : std::uint8_t { Empty, Particle };

/// A word over {empty, particle}: one ASEP state.
class BasicConfiguration {
 public:
  BasicConfiguration() = default;
  explicit BasicConfiguration(std::vector<Site> sites) : sites_(std::move(sites)) {}

  /// State with index `code` among the 2^n states; the leftmost cell is the
  /// most significant bit and Particle = 1.
  static BasicConfiguration from_index(int n, std::uint32_t code);
  std::uint32_t index() const;

  int size() const { return static_cast<int>(sites_.size()); }
  Site operator[](int i) const { return sites_[static_cast<std::size_t>(i)]; }
  const std::vector<Site>& sites() const { return sites_; }
  int particles() const;

  bool operator==(const BasicConfiguration&) const = default;

 private:
  std::vector<Site> sites_;
};

/// "X" for a particle, "O" for an empty cell, e.g. "OXO".
std::string to_string(const BasicConfiguration& config);
/// Inverse of to_string; also accepts the glyphs U+2022 and U+2218.
BasicConfiguration parse_configuration(std::string_view text);

}  // namespace qeul
