#pragma once

// Quotients among lattice path matroids.
//
// A pair (l, u) with l = l_i in L and u = u_j in U is good when i <= j and
// u - l <= j - i; removing a good pair gives a corank-one quotient
// M[U - u, L - l]. M' = M[U', L'] is a quotient of M = M[U, L] iff U' ⊆ U,
// L' ⊆ L and the greedy pairing of (L \ L', U \ U') is good. The brute-force
// route checks the basis-exchange definition directly on basis collections.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path_matroid.hpp"

namespace lpm {

/// (l, u): an element of L and an element of U, by value.
struct ElementPair {
  int ell;
  int u;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
  friend auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// An ordered list of (l, u) pairs drawn from the L and U of `source`.
class Pairing {
 public:
  Pairing(Lpm source, std::vector<ElementPair> pairs) : source_(std::move(source)), pairs_(std::move(pairs)) {
    std::set<int> ells, us;
    for (const auto& p : pairs_) {
      if (!source_.lower().contains(p.ell))
        throw ArgumentError(std::to_string(p.ell) + " is not in L of " + source_.to_short_string());
      if (!source_.upper().contains(p.u))
        throw ArgumentError(std::to_string(p.u) + " is not in U of " + source_.to_short_string());
      if (!ells.insert(p.ell).second || !us.insert(p.u).second)
        throw ArgumentError("pairing repeats an element");
    }
  }

  const Lpm& source() const noexcept { return source_; }
  const std::vector<ElementPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// "((1,3),(2,5))".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(pairs_[i].ell) + "," + std::to_string(pairs_[i].u) + ")";
    }
    return s + ")";
  }

 private:
  Lpm source_;
  std::vector<ElementPair> pairs_;
};

/// Takes element values; positions are recomputed against M's own U and L.
inline bool is_good_pair(const Lpm& m, int ell, int u) {
  const int i = m.lower().position_of(ell);
  const int j = m.upper().position_of(u);
  if (i == 0) throw ArgumentError(std::to_string(ell) + " is not in L of " + m.to_short_string());
  if (j == 0) throw ArgumentError(std::to_string(u) + " is not in U of " + m.to_short_string());
  return i <= j && u - ell <= j - i;
}

inline Lpm remove_pair(const Lpm& m, int ell, int u) {
  if (!is_good_pair(m, ell, u))
    throw PreconditionError("(" + std::to_string(ell) + "," + std::to_string(u) + ") is a bad pair of " +
                            m.to_short_string());
  return Lpm(m.n(), m.upper().without(u), m.lower().without(ell));
}

namespace detail {
inline void require_containment(const Lpm& sub, const Lpm& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  if (!sub.upper().is_subset_of(m.upper()) || !sub.lower().is_subset_of(m.lower()))
    throw PreconditionError(sub.to_short_string() + " is not contained in " + m.to_short_string() +
                            " (need U' ⊆ U and L' ⊆ L)");
}
}  // namespace detail

/// Pairs L \ L' with U \ U' in increasing order.
inline Pairing greedy_pairing(const Lpm& sub, const Lpm& m) {
  detail::require_containment(sub, m);
  std::vector<int> ells, us;
  for (int e : m.lower())
    if (!sub.lower().contains(e)) ells.push_back(e);
  for (int e : m.upper())
    if (!sub.upper().contains(e)) us.push_back(e);
  std::vector<ElementPair> pairs;
  for (std::size_t r = 0; r < ells.size(); ++r) pairs.push_back({ells[r], us[r]});
  return Pairing(m, std::move(pairs));
}

/// Removes the pairs in order; each must be good in the LPM left by the
/// previous removals.
inline bool is_good_pairing(const Lpm& m, const Pairing& pairing) {
  Lpm cur = m;
  for (const auto& p : pairing.pairs()) {
    if (!cur.lower().contains(p.ell) || !cur.upper().contains(p.u)) return false;
    if (!is_good_pair(cur, p.ell, p.u)) return false;
    cur = Lpm(cur.n(), cur.upper().without(p.u), cur.lower().without(p.ell));
  }
  return true;
}

struct QuotientVerdict {
  bool quotient = false;
  std::optional<Pairing> pairing;             // the greedy pairing, when containment holds
  std::optional<ElementPair> failing_pair;    // first bad pair along the greedy pairing
  std::string reason;
};

inline QuotientVerdict explain_quotient(const Lpm& sub, const Lpm& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  QuotientVerdict v;
  if (sub.rank() > m.rank()) {
    v.reason = "rank " + std::to_string(sub.rank()) + " exceeds rank " + std::to_string(m.rank());
    return v;
  }
  if (!sub.upper().is_subset_of(m.upper())) {
    v.reason = "U' is not a subset of U";
    return v;
  }
  if (!sub.lower().is_subset_of(m.lower())) {
    v.reason = "L' is not a subset of L";
    return v;
  }
  v.pairing = greedy_pairing(sub, m);
  Lpm cur = m;
  for (const auto& p : v.pairing->pairs()) {
    if (!is_good_pair(cur, p.ell, p.u)) {
      v.failing_pair = p;
      v.reason = "bad pair (" + std::to_string(p.ell) + "," + std::to_string(p.u) + ") in " + cur.to_short_string();
      return v;
    }
    cur = Lpm(cur.n(), cur.upper().without(p.u), cur.lower().without(p.ell));
  }
  v.quotient = true;
  return v;
}

/// M' <=_Q M by containment plus goodness of the greedy pairing. Equal
/// ranks reduce to equality.
inline bool is_quotient(const Lpm& sub, const Lpm& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  if (sub.rank() > m.rank()) return false;
  if (sub.rank() == m.rank()) return sub == m;
  return explain_quotient(sub, m).quotient;
}

/// Brute-force quotient test on basis collections: for every basis B of M
/// and p outside B there must be a basis B' of M' with B' ⊆ B and
/// B'_p ⊆ B_p. Works for any collections, LPM or not.
inline bool is_quotient_oracle(const BasisSet& sub, const BasisSet& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  if (sub.rank() > m.rank()) return false;
  const int n = m.n();
  if (n <= GroundSubset::kMaskLimit) {
    std::vector<std::uint64_t> sub_masks;
    for (const auto& b : sub) sub_masks.push_back(b.mask());
    for (const auto& b : m) {
      const std::uint64_t bm = b.mask();
      for (int p = 1; p <= n; ++p) {
        const std::uint64_t pbit = std::uint64_t{1} << (p - 1);
        if (bm & pbit) continue;
        std::uint64_t bp = 0;
        for (int q : b)
          if (m.contains_mask((bm | pbit) & ~(std::uint64_t{1} << (q - 1)))) bp |= std::uint64_t{1} << (q - 1);
        bool witnessed = false;
        for (std::uint64_t sm : sub_masks) {
          if (sm & ~bm) continue;
          bool inside = true;
          for (std::uint64_t rest = sm; rest && inside; rest &= rest - 1) {
            const std::uint64_t qbit = rest & (~rest + 1);
            if (sub.contains_mask((sm | pbit) & ~qbit) && !(bp & qbit)) inside = false;
          }
          if (inside) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) return false;
      }
    }
    return true;
  }
  for (const auto& b : m) {
    for (int p = 1; p <= n; ++p) {
      if (b.contains(p)) continue;
      const GroundSubset bp = fundamental_set(m, b, p);
      bool witnessed = std::any_of(sub.begin(), sub.end(), [&](const GroundSubset& bs) {
        return bs.is_subset_of(b) && fundamental_set(sub, bs, p).is_subset_of(bp);
      });
      if (!witnessed) return false;
    }
  }
  return true;
}

inline bool is_quotient_oracle(const Lpm& sub, const Lpm& m) { return is_quotient_oracle(bases(sub), bases(m)); }

/// All corank-one quotients M[U - u, L - l] over good pairs (l, u), sorted.
inline std::vector<Lpm> quotient_children(const Lpm& m) {
  std::vector<Lpm> out;
  for (int ell : m.lower())
    for (int u : m.upper())
      if (is_good_pair(m, ell, u)) out.emplace_back(m.n(), m.upper().without(u), m.lower().without(ell));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpm
