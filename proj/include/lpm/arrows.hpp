#pragma once

// Decorated permutations of LPMs and their row and column intervals.
//
// For M = M[U, L] of rank k, π(u_i) = l_i and π(ū_i) = l̄_i, where ū and l̄
// list the complements of U and L. A fixed point is a coloop when it lies in
// U and a loop otherwise. Row intervals are the cyclic intervals [l_i, u_i],
// column intervals the linear ones [l̄_i, ū_i].

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/permutation.hpp"

namespace lpm {

enum class Decoration { none, loop, coloop };

class DecoratedPermutation {
 public:
  DecoratedPermutation(Permutation image, std::vector<Decoration> decorations)
      : image_(std::move(image)), decorations_(std::move(decorations)) {
    if (decorations_.size() != static_cast<std::size_t>(image_.size()))
      throw ArgumentError("one decoration slot per point is required");
    for (int i = 1; i <= image_.size(); ++i) {
      const bool fixed = image_(i) == i;
      const bool decorated = decoration(i) != Decoration::none;
      if (fixed != decorated)
        throw ArgumentError("point " + std::to_string(i) + (fixed ? " is fixed but undecorated" : " is decorated but not fixed"));
    }
  }

  int n() const noexcept { return image_.size(); }
  const Permutation& image() const noexcept { return image_; }
  Decoration decoration(int i) const { return decorations_.at(static_cast<std::size_t>(i - 1)); }

  /// "2,1,5,3,4"; fixed points carry a suffix, `3u` for a loop, `3c` for a coloop.
  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
      if (i > 1) s += ',';
      s += std::to_string(image_(i));
      if (decoration(i) == Decoration::loop) s += 'u';
      if (decoration(i) == Decoration::coloop) s += 'c';
    }
    return s;
  }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;

 private:
  Permutation image_;
  std::vector<Decoration> decorations_;
};

inline DecoratedPermutation decorated_permutation(const Lpm& m) {
  const int n = m.n();
  std::vector<int> img(static_cast<std::size_t>(n));
  std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::none);
  for (int i = 1; i <= m.rank(); ++i) img[static_cast<std::size_t>(m.upper().nth(i) - 1)] = m.lower().nth(i);
  const GroundSubset up_bar = complement(m.upper()), low_bar = complement(m.lower());
  for (int i = 1; i <= up_bar.size(); ++i) img[static_cast<std::size_t>(up_bar.nth(i) - 1)] = low_bar.nth(i);
  for (int a = 1; a <= n; ++a)
    if (img[static_cast<std::size_t>(a - 1)] == a)
      dec[static_cast<std::size_t>(a - 1)] = m.upper().contains(a) ? Decoration::coloop : Decoration::loop;
  return DecoratedPermutation(Permutation(std::move(img)), std::move(dec));
}

enum class IntervalKind { row, column };

/// {start, start+1, ..., end} read cyclically on [n], with its membership mask.
class CyclicInterval {
 public:
  CyclicInterval(int n, int start, int end, IntervalKind kind) : n_(n), start_(start), end_(end), kind_(kind) {
    if (n < 1 || n > 64) throw ArgumentError("cyclic intervals need 1 <= n <= 64");
    if (start < 1 || start > n || end < 1 || end > n) throw ArgumentError("interval endpoints outside [n]");
    for (int x = start;; x = x % n + 1) {
      mask_ |= std::uint64_t{1} << (x - 1);
      if (x == end) break;
    }
  }

  int n() const noexcept { return n_; }
  int start() const noexcept { return start_; }
  int end() const noexcept { return end_; }
  IntervalKind kind() const noexcept { return kind_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int x) const { return x >= 1 && x <= n_ && (mask_ >> (x - 1)) & 1; }
  bool is_subset_of(const CyclicInterval& other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int x = start_;; x = x % n_ + 1) {
      out.push_back(x);
      if (x == end_) break;
    }
    return out;
  }

  /// "[2,1]={2,3,4,5,1}".
  std::string to_string() const {
    std::string s = "[" + std::to_string(start_) + "," + std::to_string(end_) + "]={";
    const auto m = members();
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "}";
  }

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

 private:
  int n_;
  int start_, end_;
  IntervalKind kind_;
  std::uint64_t mask_ = 0;
};

namespace detail {
inline void require_free(const Lpm& m) {
  const auto lc = loops_and_coloops(m);
  if (!lc.loops.is_empty() || !lc.coloops.is_empty())
    throw PreconditionError(m.to_short_string() + " has loops or coloops (loops " + lc.loops.to_string() +
                            ", coloops " + lc.coloops.to_string() + ")");
}
}  // namespace detail

inline bool is_loop_and_coloop_free(const Lpm& m) {
  const auto lc = loops_and_coloops(m);
  return lc.loops.is_empty() && lc.coloops.is_empty();
}

/// [l_i, u_i] for i = 1..k; each wraps through n and 1.
inline std::vector<CyclicInterval> row_intervals(const Lpm& m) {
  detail::require_free(m);
  std::vector<CyclicInterval> out;
  for (int i = 1; i <= m.rank(); ++i) out.emplace_back(m.n(), m.lower().nth(i), m.upper().nth(i), IntervalKind::row);
  return out;
}

/// [l̄_i, ū_i] for i = 1..n-k; each is an ordinary interval.
inline std::vector<CyclicInterval> column_intervals(const Lpm& m) {
  detail::require_free(m);
  const GroundSubset up_bar = complement(m.upper()), low_bar = complement(m.lower());
  std::vector<CyclicInterval> out;
  for (int i = 1; i <= up_bar.size(); ++i) out.emplace_back(m.n(), low_bar.nth(i), up_bar.nth(i), IntervalKind::column);
  return out;
}

inline std::vector<CyclicInterval> all_intervals(const Lpm& m) {
  auto out = row_intervals(m);
  for (auto& c : column_intervals(m)) out.push_back(std::move(c));
  return out;
}

/// The intervals of `sub` lying inside I. I is a union of intervals of
/// `sub` iff these cover it.
inline std::vector<CyclicInterval> contained_intervals(const Lpm& sub, const CyclicInterval& interval) {
  std::vector<CyclicInterval> out;
  for (auto& j : all_intervals(sub))
    if (j.is_subset_of(interval)) out.push_back(std::move(j));
  return out;
}

inline bool is_union_of_intervals(const Lpm& sub, const CyclicInterval& interval) {
  std::uint64_t covered = 0;
  for (const auto& j : contained_intervals(sub, interval)) covered |= j.mask();
  return covered == interval.mask();
}

/// Every row and column interval of M is a union of intervals of `sub`.
inline bool interval_union_condition(const Lpm& sub, const Lpm& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  detail::require_free(sub);
  detail::require_free(m);
  const auto pieces = all_intervals(sub);
  for (const auto& interval : all_intervals(m)) {
    std::uint64_t covered = 0;
    for (const auto& j : pieces)
      if (j.is_subset_of(interval)) covered |= j.mask();
    if (covered != interval.mask()) return false;
  }
  return true;
}

/// True iff no row interval of `sub` fits inside the interval I of M, so any
/// union expressing I uses column intervals only. I may be a row or a column
/// interval of M.
inline bool columns_need_columns(const Lpm& sub, const Lpm& m, const CyclicInterval& interval) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  if (m.n() >= 1 && m == Lpm::uniform(m.n() - 1, m.n())) throw PreconditionError("M must differ from U_{n-1,n}");
  detail::require_free(sub);
  const auto own = all_intervals(m);
  if (std::find(own.begin(), own.end(), interval) == own.end())
    throw PreconditionError(interval.to_string() + " is not an interval of " + m.to_short_string());
  for (const auto& row : row_intervals(sub))
    if (row.is_subset_of(interval)) return false;
  return true;
}

}  // namespace lpm
