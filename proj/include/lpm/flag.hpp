#pragma once

// Lattice path flag matroids (LPFMs) and their flags of bases.
//
// A full flag of bases ∅ = B_0 ⊂ B_1 ⊂ ... ⊂ B_n = [n] is recorded by its
// Gale permutation π(i) = B_i \ B_{i-1}. Its Bruhat permutation is
// τ = π̄^{-1} with π̄(i) = π(n - i + 1). An LPFM is a maximal chain
// U_{0,n} = M_0 <_Q M_1 <_Q ... <_Q M_n = U_{n,n} of LPMs.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpm/bruhat.hpp"
#include "lpm/error.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/lattice_point.hpp"
#include "lpm/permutation.hpp"
#include "lpm/quotient.hpp"

namespace lpm {

class FlagOfBases {
 public:
  /// chain[i] must have i elements and contain chain[i-1]; chain[n] = [n].
  explicit FlagOfBases(std::vector<GroundSubset> chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw ArgumentError("a flag needs at least the empty set");
    const int n = static_cast<int>(chain_.size()) - 1;
    std::vector<int> entering;
    for (int i = 0; i <= n; ++i) {
      const auto& b = chain_[static_cast<std::size_t>(i)];
      if (b.n() != n) throw ArgumentError("flag member " + b.to_string() + " is not a subset of [" + std::to_string(n) + "]");
      if (b.size() != i) throw ArgumentError("flag member " + std::to_string(i) + " must have " + std::to_string(i) + " elements");
      if (i == 0) continue;
      const auto& prev = chain_[static_cast<std::size_t>(i - 1)];
      if (!prev.is_subset_of(b)) throw ArgumentError("flag members are not nested at step " + std::to_string(i));
      for (int e : b)
        if (!prev.contains(e)) entering.push_back(e);
    }
    gale_ = Permutation(std::move(entering));
  }

  /// B_i = {π(1), ..., π(i)}.
  static FlagOfBases from_gale_permutation(const Permutation& pi) {
    const int n = pi.size();
    std::vector<GroundSubset> chain{GroundSubset::empty(n)};
    for (int i = 1; i <= n; ++i) chain.push_back(chain.back().with(pi(i)));
    return FlagOfBases(std::move(chain));
  }

  int n() const noexcept { return gale_.size(); }
  const std::vector<GroundSubset>& chain() const noexcept { return chain_; }
  const GroundSubset& at(int i) const { return chain_.at(static_cast<std::size_t>(i)); }
  const Permutation& gale_permutation() const noexcept { return gale_; }

  /// "(-,3,34,134,1234)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < chain_.size(); ++i) s += (i ? "," : "") + chain_[i].to_compact();
    return s + ")";
  }

  friend bool operator==(const FlagOfBases& a, const FlagOfBases& b) { return a.gale_ == b.gale_; }
  friend auto operator<=>(const FlagOfBases& a, const FlagOfBases& b) { return a.gale_ <=> b.gale_; }

 private:
  std::vector<GroundSubset> chain_;
  Permutation gale_;
};

inline Permutation gale_perm(const FlagOfBases& b) { return b.gale_permutation(); }

inline Permutation reverse_positions(const Permutation& p) {
  std::vector<int> img(p.image().rbegin(), p.image().rend());
  return Permutation(std::move(img));
}

inline Permutation bruhat_perm(const FlagOfBases& b) { return reverse_positions(b.gale_permutation()).inverse(); }

inline FlagOfBases flag_of_perm(const Permutation& pi) { return FlagOfBases::from_gale_permutation(pi); }

/// Inverse of bruhat_perm: π̄ = τ^{-1}, then undo the reversal.
inline FlagOfBases flag_of_bruhat_perm(const Permutation& tau) {
  return FlagOfBases::from_gale_permutation(reverse_positions(tau.inverse()));
}

/// Componentwise Gale comparison B_i <=_G B'_i.
inline bool flag_gale_leq(const FlagOfBases& a, const FlagOfBases& b) {
  if (a.n() != b.n()) throw ArgumentError("flags on different ground sets");
  for (int i = 1; i < a.n(); ++i)
    if (!gale_leq(a.at(i), b.at(i))) return false;
  return true;
}

/// A chain of LPMs with strictly increasing ranks, each a quotient of the
/// next. Partial chains are only used for diagrams and polytope vertices.
class PartialLpfm {
 public:
  explicit PartialLpfm(std::vector<Lpm> constituents) : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw ConstructionError("a flag matroid needs at least one constituent");
    for (std::size_t i = 1; i < constituents_.size(); ++i) {
      const auto& lo = constituents_[i - 1];
      const auto& hi = constituents_[i];
      if (lo.n() != hi.n()) throw ConstructionError("constituents live on different ground sets");
      if (lo.rank() >= hi.rank()) throw ConstructionError("constituent ranks must increase strictly");
      if (!is_quotient(lo, hi))
        throw ConstructionError(lo.to_short_string() + " is not a quotient of " + hi.to_short_string());
    }
  }

  int n() const noexcept { return constituents_.front().n(); }
  const std::vector<Lpm>& constituents() const noexcept { return constituents_; }
  std::size_t size() const noexcept { return constituents_.size(); }
  const Lpm& at(std::size_t i) const { return constituents_.at(i); }

  /// True when the chain runs from U_{0,n} to U_{n,n}.
  bool spans() const {
    return constituents_.front() == Lpm::uniform(0, n()) && constituents_.back() == Lpm::uniform(n(), n());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < constituents_.size(); ++i) s += (i ? ", " : "") + constituents_[i].to_short_string();
    return s + ")";
  }

  friend bool operator==(const PartialLpfm&, const PartialLpfm&) = default;

 private:
  std::vector<Lpm> constituents_;
};

/// A full LPFM: n + 1 constituents with rank(M_i) = i.
class Lpfm {
 public:
  explicit Lpfm(std::vector<Lpm> constituents) : chain_(std::move(constituents)) {
    const int n = chain_.n();
    if (chain_.size() != static_cast<std::size_t>(n) + 1)
      throw ConstructionError("a full flag matroid on [" + std::to_string(n) + "] has " + std::to_string(n + 1) +
                              " constituents");
  }

  /// Builds the full chain from the middle constituents M_1..M_{n-1}.
  static Lpfm from_middle(int n, std::vector<Lpm> middle) {
    std::vector<Lpm> all{Lpm::uniform(0, n)};
    for (auto& m : middle) all.push_back(std::move(m));
    all.push_back(Lpm::uniform(n, n));
    return Lpfm(std::move(all));
  }

  int n() const noexcept { return chain_.n(); }
  const std::vector<Lpm>& constituents() const noexcept { return chain_.constituents(); }
  const Lpm& at(int i) const { return chain_.at(static_cast<std::size_t>(i)); }
  const PartialLpfm& as_partial() const noexcept { return chain_; }

  /// The flag U_0 ⊂ U_1 ⊂ ... ⊂ U_n (the Gale-minimal flag of bases).
  FlagOfBases upper_flag() const {
    std::vector<GroundSubset> chain;
    for (const auto& m : constituents()) chain.push_back(m.upper());
    return FlagOfBases(std::move(chain));
  }

  /// The flag L_0 ⊂ L_1 ⊂ ... ⊂ L_n (the Gale-maximal flag of bases).
  FlagOfBases lower_flag() const {
    std::vector<GroundSubset> chain;
    for (const auto& m : constituents()) chain.push_back(m.lower());
    return FlagOfBases(std::move(chain));
  }

  std::string to_string() const { return chain_.to_string(); }
  friend bool operator==(const Lpfm&, const Lpfm&) = default;

 private:
  PartialLpfm chain_;
};

/// Every chain (B_0, ..., B_r) with B_i a basis of M_i and B_i ⊆ B_{i+1}.
inline std::vector<std::vector<GroundSubset>> chains_of_bases(const PartialLpfm& f) {
  std::vector<std::vector<GroundSubset>> layers;
  for (const auto& m : f.constituents()) layers.push_back(enumerate_bases(m));
  std::vector<std::vector<GroundSubset>> out;
  std::vector<GroundSubset> cur;
  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == layers.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& b : layers[level]) {
      if (level > 0 && !cur.back().is_subset_of(b)) continue;
      cur.push_back(b);
      self(self, level + 1);
      cur.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

/// All flags of bases of F, sorted by Gale permutation. Grows the flag one
/// element at a time, keeping B_i a basis of M_i.
inline std::vector<FlagOfBases> flags_of_lpfm(const Lpfm& f) {
  const int n = f.n();
  std::vector<FlagOfBases> out;
  std::vector<int> pi;
  GroundSubset cur = GroundSubset::empty(n);
  auto walk = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(FlagOfBases::from_gale_permutation(Permutation(pi)));
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if (cur.contains(e)) continue;
      GroundSubset next = cur.with(e);
      if (!is_basis(f.at(i), next)) continue;
      std::swap(cur, next);
      pi.push_back(e);
      self(self, i + 1);
      pi.pop_back();
      std::swap(cur, next);
    }
  };
  walk(walk, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// M_k = M[B_k, B'_k] must form a chain of quotients.
inline std::optional<Lpfm> lpfm_from_flag_pair(const FlagOfBases& low, const FlagOfBases& high) {
  if (!flag_gale_leq(low, high))
    throw PreconditionError(low.to_string() + " is not Gale-below " + high.to_string());
  const int n = low.n();
  std::vector<Lpm> chain;
  for (int k = 0; k <= n; ++k) chain.emplace_back(n, low.at(k), high.at(k));
  for (int k = 1; k <= n; ++k)
    if (!is_quotient(chain[static_cast<std::size_t>(k - 1)], chain[static_cast<std::size_t>(k)])) return std::nullopt;
  return Lpfm(std::move(chain));
}

namespace detail {
/// max{0, a_k - a'_k} <= st_{a_1..a_k}(a_k) - st_{a'_1..a'_k}(a'_k) for all k.
inline bool standardization_inequalities(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    int st_a = 1, st_b = 1;
    for (std::size_t j = 0; j < k; ++j) {
      st_a += a[j] < a[k];
      st_b += b[j] < b[k];
    }
    if (std::max(0, a[k] - b[k]) > st_a - st_b) return false;
  }
  return true;
}
}  // namespace detail

/// Standardization test on Gale permutations; π is the Gale-lower flag.
inline bool good_interval_gale(const Permutation& pi, const Permutation& pi_high) {
  if (pi.size() != pi_high.size()) throw ArgumentError("permutations of different sizes");
  if (!flag_gale_leq(flag_of_perm(pi), flag_of_perm(pi_high)))
    throw PreconditionError("flag of " + pi.to_string() + " is not Gale-below flag of " + pi_high.to_string());
  return detail::standardization_inequalities({pi.image().begin(), pi.image().end()},
                                              {pi_high.image().begin(), pi_high.image().end()});
}

/// The same test in Bruhat coordinates a_k = τ^{-1}(n - k + 1); needs τ >=_B τ'.
inline bool good_interval_bruhat(const Permutation& tau, const Permutation& tau_low) {
  if (tau.size() != tau_low.size()) throw ArgumentError("permutations of different sizes");
  if (!bruhat_leq(tau_low, tau))
    throw PreconditionError(tau_low.to_string() + " is not Bruhat-below " + tau.to_string());
  const int n = tau.size();
  const Permutation inv = tau.inverse(), inv_low = tau_low.inverse();
  std::vector<int> a, b;
  for (int k = 1; k <= n; ++k) {
    a.push_back(inv(n - k + 1));
    b.push_back(inv_low(n - k + 1));
  }
  return detail::standardization_inequalities(a, b);
}

/// τ' = τ s_{i_1} ... s_{i_m} for pairwise commuting adjacent transpositions
/// (s_i swaps positions i and i+1); tests the interval [τ, τ'].
inline bool cube_interval_check(const Permutation& tau, const std::vector<int>& indices) {
  const int n = tau.size();
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] < 1 || indices[a] >= n)
      throw PreconditionError("s_" + std::to_string(indices[a]) + " is not an adjacent transposition of S_" +
                              std::to_string(n));
    for (std::size_t b = 0; b < a; ++b)
      if (std::abs(indices[a] - indices[b]) < 2)
        throw PreconditionError("s_" + std::to_string(indices[a]) + " and s_" + std::to_string(indices[b]) +
                                " do not commute");
  }
  Permutation top = tau;
  for (int i : indices) top = top.swap_positions(i, i + 1);
  if (!bruhat_leq(tau, top))
    throw PreconditionError(tau.to_string() + " is not Bruhat-below " + top.to_string());
  return good_interval_bruhat(top, tau);
}

/// Point e_{B_0} + ... + e_{B_r} per chain of bases, deduplicated and sorted.
inline std::vector<LatticePoint> polytope_vertices(const PartialLpfm& f) {
  std::set<LatticePoint> points;
  const int n = f.n();
  for (const auto& chain : chains_of_bases(f)) {
    LatticePoint p{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (const auto& b : chain)
      for (int e : b) ++p.coords[static_cast<std::size_t>(e - 1)];
    points.insert(std::move(p));
  }
  return {points.begin(), points.end()};
}

inline std::vector<LatticePoint> polytope_vertices(const Lpfm& f) {
  std::vector<LatticePoint> out;
  for (const auto& flag : flags_of_lpfm(f)) {
    const auto tau = bruhat_perm(flag);
    out.push_back({std::vector<int>(tau.image().begin(), tau.image().end())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every LPFM on [n], read off the maximal chains of the quotient poset.
inline std::vector<Lpfm> enumerate_lpfms(int n) {
  std::vector<Lpfm> out;
  std::vector<Lpm> chain{Lpm::uniform(n, n)};
  auto walk = [&](auto&& self) -> void {
    const Lpm& cur = chain.back();
    if (cur.rank() == 0) {
      out.emplace_back(std::vector<Lpm>(chain.rbegin(), chain.rend()));
      return;
    }
    for (const auto& child : quotient_children(cur)) {
      chain.push_back(child);
      self(self);
      chain.pop_back();
    }
  };
  walk(walk);
  return out;
}

}  // namespace lpm
