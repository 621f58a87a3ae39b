#pragma once

// Strong Bruhat order on S_n.
//
// The cover relation is implemented literally: v covers u when v = u(i,j),
// i < j, u(i) < u(j), and no position strictly between holds a value strictly
// between u(i) and u(j). The order itself has two routes: the transitive
// closure of covers (bruhat_leq_by_covers) and the dominance criterion
// (bruhat_leq), which compares the counts #{a <= i : w(a) >= j}.

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <unordered_set>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/permutation.hpp"

namespace lpm {

namespace detail {
inline void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw ArgumentError("permutations of different sizes");
}
}  // namespace detail

inline bool bruhat_cover(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  const int n = u.size();
  int first = 0, second = 0, diffs = 0;
  for (int p = 1; p <= n; ++p) {
    if (u(p) != v(p)) {
      if (++diffs > 2) return false;
      (first == 0 ? first : second) = p;
    }
  }
  if (diffs != 2) return false;
  if (u(first) != v(second) || u(second) != v(first)) return false;
  const int lo = u(first), hi = u(second);
  if (lo > hi) return false;
  for (int k = first + 1; k < second; ++k)
    if (u(k) > lo && u(k) < hi) return false;
  return true;
}

/// Every v that covers u.
inline std::vector<Permutation> bruhat_upper_covers(const Permutation& u) {
  std::vector<Permutation> out;
  const int n = u.size();
  for (int i = 1; i <= n; ++i) {
    // Scanning j to the right, the admissible partners are exactly the
    // successive minima above u(i).
    int ceiling = n + 1;
    for (int j = i + 1; j <= n; ++j) {
      if (u(j) > u(i) && u(j) < ceiling) {
        out.push_back(u.swap_positions(i, j));
        ceiling = u(j);
      }
    }
  }
  return out;
}

/// Dominance criterion: u <=_B v iff for all i, j:
/// #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  const int n = u.size();
  // stack buffers for the common small case
  std::array<int, 34> small_u{}, small_v{};
  std::vector<int> big_u, big_v;
  int* cu = small_u.data();
  int* cv = small_v.data();
  if (n + 2 > static_cast<int>(small_u.size())) {
    big_u.assign(static_cast<std::size_t>(n) + 2, 0);
    big_v.assign(static_cast<std::size_t>(n) + 2, 0);
    cu = big_u.data();
    cv = big_v.data();
  }
  for (int i = 1; i <= n; ++i) {
    // cu[j] = #{a <= i : u(a) >= j}
    for (int j = 1; j <= u(i); ++j) ++cu[j];
    for (int j = 1; j <= v(i); ++j) ++cv[j];
    for (int j = 1; j <= n; ++j)
      if (cu[j] > cv[j]) return false;
  }
  return true;
}

/// u <=_B v via breadth-first search along upper covers. Exponential in n;
/// meant as a cross-check for small n.
inline bool bruhat_leq_by_covers(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  if (u == v) return true;
  const int target = v.length();
  std::unordered_set<Permutation> seen{u};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    if (cur.length() >= target) continue;
    for (auto& next : bruhat_upper_covers(cur)) {
      if (next == v) return true;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

/// {z : u <=_B z <=_B v}, sorted lexicographically.
inline std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  if (!bruhat_leq(u, v))
    throw PreconditionError("empty Bruhat interval: " + u.to_string() + " is not below " +
                            v.to_string());
  std::unordered_set<Permutation> seen{u};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : bruhat_upper_covers(cur)) {
      if (!bruhat_leq(next, v)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpm
