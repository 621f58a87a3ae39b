#pragma once

// Lattice path matroids M[U, L]: the rank-k matroid on [n] whose bases are
// the k-subsets B with U <=_G B <=_G L.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/subset.hpp"

namespace lpm {

class Lpm {
 public:
  /// Throws ConstructionError unless |U| = |L|, both live on [n], and U <=_G L.
  Lpm(int n, GroundSubset upper, GroundSubset lower)
      : n_(n), upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.n() != n_ || lower_.n() != n_)
      throw ConstructionError("U and L must be subsets of [" + std::to_string(n_) + "]");
    if (upper_.size() != lower_.size())
      throw ConstructionError("U and L have different sizes");
    if (!gale_leq(upper_, lower_))
      throw ConstructionError("U = " + upper_.to_string() + " is not Gale-below L = " +
                              lower_.to_string());
  }

  /// U_{k,n}: U = {1..k}, L = {n-k+1..n}.
  static Lpm uniform(int k, int n) {
    if (k < 0 || k > n) throw ArgumentError("uniform matroid needs 0 <= k <= n");
    std::vector<int> up, low;
    for (int i = 1; i <= k; ++i) {
      up.push_back(i);
      low.push_back(n - k + i);
    }
    return Lpm(n, GroundSubset(n, up), GroundSubset(n, low));
  }

  int n() const noexcept { return n_; }
  int rank() const noexcept { return upper_.size(); }
  int corank() const noexcept { return n_ - rank(); }
  const GroundSubset& upper() const noexcept { return upper_; }
  const GroundSubset& lower() const noexcept { return lower_; }

  /// Canonical text form `M[1,2,4,6|3,5,6,8]@8`; `-` marks an empty side.
  std::string to_string() const {
    auto side = [](const GroundSubset& s) {
      if (s.is_empty()) return std::string("-");
      std::string out;
      for (int e : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
      }
      return out;
    };
    return "M[" + side(upper_) + "|" + side(lower_) + "]@" + std::to_string(n_);
  }

  /// Short form `M[1246,3568]` used in logs and diagrams.
  std::string to_short_string() const {
    return "M[" + upper_.to_compact() + "," + lower_.to_compact() + "]";
  }

  friend bool operator==(const Lpm&, const Lpm&) = default;
  /// Orders by n, rank, then U and L lexicographically.
  friend std::strong_ordering operator<=>(const Lpm& a, const Lpm& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
    return a.lower_ <=> b.lower_;
  }

 private:
  int n_;
  GroundSubset upper_;
  GroundSubset lower_;
};

inline Lpm make_lpm(int n, GroundSubset upper, GroundSubset lower) {
  return Lpm(n, std::move(upper), std::move(lower));
}

/// A nonempty collection of equal-size subsets of [n], kept sorted and
/// deduplicated. Need not satisfy the exchange axiom.
class BasisSet {
 public:
  BasisSet(int n, std::vector<GroundSubset> bases) : n_(n), bases_(std::move(bases)) {
    if (bases_.empty()) throw ArgumentError("a basis set must be nonempty");
    k_ = bases_.front().size();
    for (const auto& b : bases_) {
      if (b.n() != n_) throw ArgumentError("basis on a different ground set");
      if (b.size() != k_) throw ArgumentError("bases of different sizes");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (n_ <= GroundSubset::kMaskLimit) {
      masks_.reserve(bases_.size());
      for (const auto& b : bases_) masks_.push_back(b.mask());
      std::sort(masks_.begin(), masks_.end());
    }
  }

  int n() const noexcept { return n_; }
  int rank() const noexcept { return k_; }
  std::size_t size() const noexcept { return bases_.size(); }
  const std::vector<GroundSubset>& bases() const noexcept { return bases_; }
  auto begin() const noexcept { return bases_.begin(); }
  auto end() const noexcept { return bases_.end(); }

  bool contains(const GroundSubset& b) const {
    if (b.n() != n_ || b.size() != k_) return false;
    if (!masks_.empty()) return contains_mask(b.mask());
    return std::binary_search(bases_.begin(), bases_.end(), b);
  }

  bool contains_mask(std::uint64_t m) const { return std::binary_search(masks_.begin(), masks_.end(), m); }

  friend bool operator==(const BasisSet& a, const BasisSet& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  int n_;
  int k_ = 0;
  std::vector<GroundSubset> bases_;
  std::vector<std::uint64_t> masks_;
};

/// U <=_G B <=_G L, without enumeration.
inline bool is_basis(const Lpm& m, const GroundSubset& b) {
  if (b.n() != m.n()) throw ArgumentError("basis candidate lives on a different ground set");
  if (b.size() != m.rank())
    throw ArgumentError("basis candidate has size " + std::to_string(b.size()) + ", rank is " +
                        std::to_string(m.rank()));
  return gale_leq(m.upper(), b) && gale_leq(b, m.lower());
}

/// Every basis, in lexicographic order.
inline std::vector<GroundSubset> enumerate_bases(const Lpm& m) {
  const int k = m.rank();
  std::vector<GroundSubset> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  // b_r ranges over [max(u_r, b_{r-1} + 1), l_r].
  auto rec = [&](auto&& self, int r) -> void {
    if (r > k) {
      out.emplace_back(m.n(), cur);
      return;
    }
    const int lo = std::max(m.upper().nth(r), r > 1 ? cur[static_cast<std::size_t>(r - 2)] + 1 : 1);
    for (int v = lo; v <= m.lower().nth(r); ++v) {
      cur[static_cast<std::size_t>(r - 1)] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 1);
  return out;
}

inline BasisSet bases(const Lpm& m) { return BasisSet(m.n(), enumerate_bases(m)); }

/// Number of bases by dynamic programming over lattice points, independent
/// of enumerate_bases.
inline std::uint64_t count_bases(const Lpm& m) {
  // ways[j] = number of admissible prefixes of length t with j North steps.
  const int n = m.n(), k = m.rank();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[0] = 1;
  int up_count = 0, low_count = 0;  // |U ∩ [t]|, |L ∩ [t]|
  for (int t = 1; t <= n; ++t) {
    up_count += m.upper().contains(t);
    low_count += m.lower().contains(t);
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int j = 0; j <= k; ++j) {
      std::uint64_t w = ways[static_cast<std::size_t>(j)];
      if (!w) continue;
      next[static_cast<std::size_t>(j)] += w;                     // East
      if (j + 1 <= k) next[static_cast<std::size_t>(j + 1)] += w;  // North
    }
    // A prefix path of length t is inside the region iff its North count
    // lies between those of L and U.
    for (int j = 0; j <= k; ++j)
      if (j < low_count || j > up_count) next[static_cast<std::size_t>(j)] = 0;
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(k)];
}

namespace detail {
inline void require_exchange_args(const Lpm& m, const GroundSubset& b, int p) {
  if (p < 1 || p > m.n()) throw ArgumentError("element " + std::to_string(p) + " outside ground set");
  if (b.contains(p)) throw ArgumentError(std::to_string(p) + " already lies in the basis");
  if (!is_basis(m, b)) throw ArgumentError(b.to_string() + " is not a basis of " + m.to_short_string());
}
}  // namespace detail

/// B_p = {q in B : B + p - q is a basis}, computed from the positions of B
/// against the boundary paths. With b_{x-1} < p < b_x, removing b_r for r < x
/// is valid iff p <= l_{x-1} and b_{m+1} <= l_m for r <= m <= x-2; removing
/// b_r for r >= x is valid iff p >= u_x and b_m >= u_{m+1} for x <= m <= r-1.
/// Both valid ranges touch x, so B_p is the contiguous run b_s, ..., b_t.
inline GroundSubset fundamental_set(const Lpm& m, const GroundSubset& b, int p) {
  detail::require_exchange_args(m, b, p);
  const int k = m.rank();
  const auto& upper = m.upper();
  const auto& lower = m.lower();
  int x = 1;
  while (x <= k && b.nth(x) < p) ++x;

  int s = x;
  if (x > 1 && p <= lower.nth(x - 1)) {
    s = x - 1;
    while (s > 1 && b.nth(s) <= lower.nth(s - 1)) --s;
  }
  int t = x - 1;
  if (x <= k && p >= upper.nth(x)) {
    t = x;
    while (t < k && b.nth(t) >= upper.nth(t + 1)) ++t;
  }
  std::vector<int> out;
  for (int r = s; r <= t; ++r) out.push_back(b.nth(r));
  return GroundSubset(m.n(), std::move(out));
}

/// B_p by testing every exchange B - q + p against the Gale sandwich.
inline GroundSubset fundamental_set_oracle(const Lpm& m, const GroundSubset& b, int p) {
  detail::require_exchange_args(m, b, p);
  std::vector<int> out;
  for (int q : b)
    if (is_basis(m, b.without(q).with(p))) out.push_back(q);
  return GroundSubset(m.n(), std::move(out));
}

/// B_p inside an arbitrary basis collection.
inline GroundSubset fundamental_set(const BasisSet& bs, const GroundSubset& b, int p) {
  if (b.contains(p)) throw ArgumentError(std::to_string(p) + " already lies in the basis");
  std::vector<int> out;
  if (b.has_mask()) {
    const std::uint64_t with_p = b.mask() | (std::uint64_t{1} << (p - 1));
    for (int q : b)
      if (bs.contains_mask(with_p & ~(std::uint64_t{1} << (q - 1)))) out.push_back(q);
  } else {
    for (int q : b)
      if (bs.contains(b.without(q).with(p))) out.push_back(q);
  }
  return GroundSubset(b.n(), std::move(out));
}

/// M* = M[complement(L), complement(U)].
inline Lpm dual(const Lpm& m) { return Lpm(m.n(), complement(m.lower()), complement(m.upper())); }

struct LoopsAndColoops {
  GroundSubset loops;
  GroundSubset coloops;
  friend bool operator==(const LoopsAndColoops&, const LoopsAndColoops&) = default;
};

namespace detail {
// i is a non-loop iff u_t <= i <= l_t for some t.
inline GroundSubset structural_loops(const Lpm& m) {
  std::vector<int> loops;
  for (int i = 1; i <= m.n(); ++i) {
    bool covered = false;
    for (int t = 1; t <= m.rank() && !covered; ++t)
      covered = m.upper().nth(t) <= i && i <= m.lower().nth(t);
    if (!covered) loops.push_back(i);
  }
  return GroundSubset(m.n(), std::move(loops));
}
}  // namespace detail

/// Loops from the structural test, coloops as the loops of the dual.
inline LoopsAndColoops loops_and_coloops(const Lpm& m) {
  return {detail::structural_loops(m), detail::structural_loops(dual(m))};
}

/// Loops and coloops read off a basis collection: elements in no basis and
/// in every basis.
inline LoopsAndColoops loops_and_coloops(const BasisSet& bs) {
  std::vector<int> loops, coloops;
  for (int i = 1; i <= bs.n(); ++i) {
    std::size_t hits = 0;
    for (const auto& b : bs) hits += b.contains(i);
    if (hits == 0) loops.push_back(i);
    if (hits == bs.size()) coloops.push_back(i);
  }
  return {GroundSubset(bs.n(), loops), GroundSubset(bs.n(), coloops)};
}

/// Bases of the i-th truncation: all (k-i)-subsets of some basis.
inline BasisSet truncation_bases(const Lpm& m, int i) {
  if (i < 0 || i > m.rank())
    throw ArgumentError("truncation depth " + std::to_string(i) + " exceeds rank " +
                        std::to_string(m.rank()));
  if (i == 0) return bases(m);
  const int r = m.rank() - i;
  std::set<GroundSubset> out;
  for (const auto& b : enumerate_bases(m)) {
    for (const auto& idx : k_subsets(m.rank(), r)) {
      std::vector<int> sub;
      for (int pos : idx) sub.push_back(b.nth(pos));
      out.emplace(m.n(), std::move(sub));
    }
  }
  return BasisSet(m.n(), {out.begin(), out.end()});
}

/// M[U, L] if the collection is exactly a Gale interval [U, L]_G.
inline std::optional<Lpm> recognize_lpm(const BasisSet& bs) {
  GroundSubset lo = bs.bases().front();
  GroundSubset hi = lo;
  for (const auto& b : bs) {
    lo = gale_meet(lo, b);
    hi = gale_join(hi, b);
  }
  // Every member lies in [lo, hi]_G, so equality is a cardinality check.
  Lpm candidate(bs.n(), lo, hi);
  if (count_bases(candidate) != bs.size()) return std::nullopt;
  return candidate;
}

}  // namespace lpm
