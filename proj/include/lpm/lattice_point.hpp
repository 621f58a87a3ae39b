#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lpm {

/// An integer vector; vertices of flag matroid polytopes and points of
/// (flag) diagrams.
struct LatticePoint {
  std::vector<int> coords;

  int dimension() const noexcept { return static_cast<int>(coords.size()); }

  /// "(3,1,2)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

}  // namespace lpm
