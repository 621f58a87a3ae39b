#pragma once

// Text form of LPMs: `M[<U>|<L>]@<n>`. A side is `-` (empty), a comma list
// such as `1,2,4,6`, or, when n <= 9, a run of digits such as `1246`.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path_matroid.hpp"

namespace lpm {

namespace detail {

struct SideToken {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<int> parse_side(const SideToken& side, int n) {
  std::vector<int> out;
  const auto text = side.text;
  if (text == "-") return out;
  if (text.empty()) throw ParseError("empty side; write '-' for the empty set", side.offset);
  const bool comma_list = text.find(',') != std::string_view::npos;
  if (!comma_list && text.size() > 1 && n <= 9) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", side.offset + i);
      out.push_back(text[i] - '0');
    }
  } else {
    std::size_t i = 0;
    while (true) {
      const std::size_t start = i;
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("element too large", side.offset + start);
        ++i;
      }
      if (i == start) throw ParseError("expected an element", side.offset + i);
      out.push_back(value);
      if (i == text.size()) break;
      if (text[i] != ',') throw ParseError("expected ',' or end of side", side.offset + i);
      ++i;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > n)
      throw ParseError("element " + std::to_string(out[i]) + " outside [" + std::to_string(n) + "]", side.offset);
    for (std::size_t j = 0; j < i; ++j)
      if (out[j] == out[i]) throw ParseError("repeated element " + std::to_string(out[i]), side.offset);
  }
  return out;
}

}  // namespace detail

/// Grammar violations raise ParseError; a valid parse with U not Gale-below
/// L (or sides of different size) raises ConstructionError.
inline Lpm parse_lpm(std::string_view s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;

  std::size_t i = begin;
  auto expect = [&](char c) {
    if (i >= end || s[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  expect('M');
  expect('[');
  const std::size_t bar = s.find('|', i);
  if (bar == std::string_view::npos || bar >= end) throw ParseError("expected '|'", end);
  detail::SideToken upper{s.substr(i, bar - i), i};
  i = bar + 1;
  const std::size_t close = s.find(']', i);
  if (close == std::string_view::npos || close >= end) throw ParseError("expected ']'", end);
  detail::SideToken lower{s.substr(i, close - i), i};
  i = close + 1;
  expect('@');
  const std::size_t n_start = i;
  int n = 0;
  while (i < end && std::isdigit(static_cast<unsigned char>(s[i]))) {
    n = n * 10 + (s[i] - '0');
    if (n > 64) throw ParseError("ground set size above 64", n_start);
    ++i;
  }
  if (i == n_start) throw ParseError("expected the ground set size", i);
  if (i != end) throw ParseError("unexpected trailing text", i);

  auto up = detail::parse_side(upper, n);
  auto low = detail::parse_side(lower, n);
  if (up.size() != low.size())
    throw ConstructionError("U has " + std::to_string(up.size()) + " elements but L has " + std::to_string(low.size()));
  return Lpm(n, GroundSubset(n, std::move(up)), GroundSubset(n, std::move(low)));
}

inline std::string format_lpm(const Lpm& m) { return m.to_string(); }

/// Subset given as `-`, `1,3,4`, or `134` (digits only when n <= 9).
inline GroundSubset parse_subset(std::string_view s, int n) {
  return GroundSubset(n, detail::parse_side({s, 0}, n));
}

}  // namespace lpm
