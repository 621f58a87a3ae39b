#pragma once

// Permutations of [n] in 1-based one-line notation.

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpm/error.hpp"

namespace lpm {

class Permutation {
 public:
  Permutation() = default;

  /// `image[i-1]` is the value at position i. Must be a bijection on [n].
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : image_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw ArgumentError("not a permutation of [" + std::to_string(n) + "]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(img));
  }

  /// n, n-1, ..., 1.
  static Permutation longest(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(img));
  }

  int size() const noexcept { return static_cast<int>(image_.size()); }
  std::span<const int> image() const noexcept { return image_; }

  /// Value at 1-based position i.
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// this * (i j): exchange the values at positions i and j.
  Permutation swap_positions(int i, int j) const {
    std::vector<int> img(image_);
    std::swap(img.at(static_cast<std::size_t>(i - 1)), img.at(static_cast<std::size_t>(j - 1)));
    return Permutation(std::move(img));
  }

  /// Number of inversions, the Coxeter length in S_n.
  int length() const noexcept {
    int inv = 0;
    for (std::size_t i = 0; i < image_.size(); ++i)
      for (std::size_t j = i + 1; j < image_.size(); ++j)
        if (image_[i] > image_[j]) ++inv;
    return inv;
  }

  /// Digit string when n <= 9 ("2413"), comma form otherwise ("2,4,1,3,...").
  std::string to_string() const {
    std::string s;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i && !digits) s += ',';
      s += std::to_string(image_[i]);
    }
    return s;
  }

  /// Always comma-separated.
  std::string to_comma_string() const {
    std::string s;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(image_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(),
                                                  b.image_.begin(), b.image_.end());
  }

 private:
  std::vector<int> image_;
};

/// Parses `2,4,1,3` or the digit shorthand `2413` (only for n <= 9).
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> img;
  const bool comma = text.find(',') != std::string_view::npos;
  if (text.empty()) throw ParseError("empty permutation", 0);
  if (!comma) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a digit", i);
      img.push_back(text[i] - '0');
    }
    if (img.size() > 9)
      throw ParseError("digit shorthand is only accepted for n <= 9", 0);
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      if (end == pos) throw ParseError("expected a number", pos);
      int v = 0;
      for (std::size_t i = pos; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", i);
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("value too large", i);
      }
      img.push_back(v);
      pos = end + 1;
    }
  }
  try {
    return Permutation(std::move(img));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

/// All permutations of [n] in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace lpm

template <>
struct std::hash<lpm::Permutation> {
  std::size_t operator()(const lpm::Permutation& p) const noexcept {
    std::size_t h = 0;
    for (int v : p.image()) h = h * 131u + static_cast<std::size_t>(v);
    return h;
  }
};
