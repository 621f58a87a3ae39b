#pragma once

// Subsets of the ordered ground set [n] = {1, ..., n} and the Gale order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lpm/error.hpp"

namespace lpm {

/// A subset of [n], stored as a strictly increasing element list with a
/// bitmask mirror when n <= 64.
class GroundSubset {
 public:
  static constexpr int kMaskLimit = 64;

  GroundSubset() = default;

  /// Elements may be given in any order; duplicates or values outside
  /// 1..n raise ArgumentError.
  GroundSubset(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
    if (n < 0) throw ArgumentError("ground set size must be non-negative");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1 || elems_[i] > n)
        throw ArgumentError("element " + std::to_string(elems_[i]) + " outside [" +
                            std::to_string(n) + "]");
      if (i > 0 && elems_[i] == elems_[i - 1])
        throw ArgumentError("duplicate element " + std::to_string(elems_[i]));
    }
    rebuild_mask();
  }

  GroundSubset(int n, std::initializer_list<int> elements)
      : GroundSubset(n, std::vector<int>(elements)) {}

  static GroundSubset empty(int n) { return GroundSubset(n, std::vector<int>{}); }

  static GroundSubset full(int n) {
    std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return GroundSubset(n, std::move(all));
  }

  static GroundSubset from_mask(int n, std::uint64_t mask) {
    std::vector<int> elems;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1u) elems.push_back(i);
    return GroundSubset(n, std::move(elems));
  }

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool is_empty() const noexcept { return elems_.empty(); }
  std::span<const int> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// The r-th smallest element, 1-based (a_r in A = {a_1 < ... < a_k}).
  int nth(int r) const {
    if (r < 1 || r > size()) throw ArgumentError("index " + std::to_string(r) + " out of range");
    return elems_[static_cast<std::size_t>(r - 1)];
  }

  bool has_mask() const noexcept { return n_ <= kMaskLimit; }
  std::uint64_t mask() const noexcept { return mask_; }

  bool contains(int x) const noexcept {
    if (x < 1 || x > n_) return false;
    if (has_mask()) return mask_ >> (x - 1) & 1u;
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  /// 1-based position of x among the elements, or 0 if x is absent.
  int position_of(int x) const noexcept {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) return 0;
    return static_cast<int>(it - elems_.begin()) + 1;
  }

  GroundSubset without(int x) const {
    if (!contains(x)) throw ArgumentError(std::to_string(x) + " is not an element");
    std::vector<int> out;
    out.reserve(elems_.size() - 1);
    for (int e : elems_)
      if (e != x) out.push_back(e);
    return GroundSubset(n_, std::move(out));
  }

  GroundSubset with(int x) const {
    if (contains(x)) throw ArgumentError(std::to_string(x) + " is already an element");
    std::vector<int> out(elems_);
    out.push_back(x);
    return GroundSubset(n_, std::move(out));
  }

  bool is_subset_of(const GroundSubset& other) const noexcept {
    if (has_mask() && other.has_mask()) return (mask_ & ~other.mask_) == 0;
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  /// "{1,2,4,6}".
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

  /// "1246" when every element is a single digit, comma-joined otherwise;
  /// "-" for the empty set.
  std::string to_compact() const {
    if (elems_.empty()) return "-";
    bool digits = std::all_of(elems_.begin(), elems_.end(), [](int e) { return e <= 9; });
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i && !digits) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s;
  }

  friend bool operator==(const GroundSubset& a, const GroundSubset& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }
  /// Lexicographic on the sorted element sequence (after n).
  friend std::strong_ordering operator<=>(const GroundSubset& a, const GroundSubset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                  b.elems_.begin(), b.elems_.end());
  }

 private:
  void rebuild_mask() {
    mask_ = 0;
    if (!has_mask()) return;
    for (int e : elems_) mask_ |= std::uint64_t{1} << (e - 1);
  }

  int n_ = 0;
  std::vector<int> elems_;
  std::uint64_t mask_ = 0;
};

namespace detail {
inline void require_comparable(const GroundSubset& a, const GroundSubset& b) {
  if (a.n() != b.n())
    throw ArgumentError("subsets live on different ground sets (" + std::to_string(a.n()) +
                        " vs " + std::to_string(b.n()) + ")");
  if (a.size() != b.size())
    throw ArgumentError("subsets have different sizes (" + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + ")");
}
}  // namespace detail

/// A <=_G B: a_r <= b_r for every r.
inline bool gale_leq(const GroundSubset& a, const GroundSubset& b) {
  detail::require_comparable(a, b);
  auto ea = a.elements();
  auto eb = b.elements();
  for (std::size_t r = 0; r < ea.size(); ++r)
    if (ea[r] > eb[r]) return false;
  return true;
}

/// [n] \ A.
inline GroundSubset complement(const GroundSubset& a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.n() - a.size()));
  for (int i = 1; i <= a.n(); ++i)
    if (!a.contains(i)) out.push_back(i);
  return GroundSubset(a.n(), std::move(out));
}

/// Componentwise minimum; the Gale meet.
inline GroundSubset gale_meet(const GroundSubset& a, const GroundSubset& b) {
  detail::require_comparable(a, b);
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int r = 1; r <= a.size(); ++r) out[static_cast<std::size_t>(r - 1)] = std::min(a.nth(r), b.nth(r));
  return GroundSubset(a.n(), std::move(out));
}

/// Componentwise maximum; the Gale join.
inline GroundSubset gale_join(const GroundSubset& a, const GroundSubset& b) {
  detail::require_comparable(a, b);
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int r = 1; r <= a.size(); ++r) out[static_cast<std::size_t>(r - 1)] = std::max(a.nth(r), b.nth(r));
  return GroundSubset(a.n(), std::move(out));
}

/// Rank of x inside S under the order-preserving bijection S -> [|S|].
inline int standardize(const GroundSubset& s, int x) {
  int pos = s.position_of(x);
  if (pos == 0) throw ArgumentError(std::to_string(x) + " is not in " + s.to_string());
  return pos;
}

/// All k-subsets of [n] in lexicographic order.
inline std::vector<GroundSubset> k_subsets(int n, int k) {
  std::vector<GroundSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace lpm

template <>
struct std::hash<lpm::GroundSubset> {
  std::size_t operator()(const lpm::GroundSubset& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.n());
    for (int e : s) h = h * 1000003u ^ std::hash<int>{}(e);
    return h;
  }
};
