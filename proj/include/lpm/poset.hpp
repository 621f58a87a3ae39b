#pragma once

// The graded poset of all lattice path matroids on [n] under the quotient
// order, Narayana rank counts, the Dyck path bijection, and the
// rank-preserving weak order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/parallel.hpp"
#include "lpm/quotient.hpp"

namespace lpm {

/// Every LPM on [n], ordered by rank, then U, then L lexicographically.
inline std::vector<Lpm> enumerate_lpms(int n) {
  if (n < 0) throw ArgumentError("n must be non-negative");
  std::vector<Lpm> out;
  for (int k = 0; k <= n; ++k) {
    const auto layer = k_subsets(n, k);
    for (const auto& up : layer)
      for (const auto& low : layer)
        if (gale_leq(up, low)) out.emplace_back(n, up, low);
  }
  return out;
}

class QuotientPoset {
 public:
  using NodeId = std::size_t;

  QuotientPoset(int n, std::vector<Lpm> nodes, std::vector<std::pair<NodeId, NodeId>> covers)
      : n_(n), nodes_(std::move(nodes)), covers_(std::move(covers)) {
    children_.resize(nodes_.size());
    parents_.resize(nodes_.size());
    for (NodeId id = 0; id < nodes_.size(); ++id) index_.emplace(nodes_[id].to_string(), id);
    for (const auto& [parent, child] : covers_) {
      children_[parent].push_back(child);
      parents_[child].push_back(parent);
    }
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Lpm>& nodes() const noexcept { return nodes_; }
  const Lpm& node(NodeId id) const { return nodes_.at(id); }
  int rank(NodeId id) const { return nodes_.at(id).rank(); }
  /// (parent, child) with rank(parent) = rank(child) + 1.
  const std::vector<std::pair<NodeId, NodeId>>& covers() const noexcept { return covers_; }
  const std::vector<NodeId>& children(NodeId id) const { return children_.at(id); }
  const std::vector<NodeId>& parents(NodeId id) const { return parents_.at(id); }

  std::optional<NodeId> find(const Lpm& m) const {
    auto it = index_.find(m.to_string());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeId id_of(const Lpm& m) const {
    auto id = find(m);
    if (!id) throw ArgumentError(m.to_short_string() + " is not a node of the poset");
    return *id;
  }

 private:
  int n_;
  std::vector<Lpm> nodes_;
  std::vector<std::pair<NodeId, NodeId>> covers_;
  std::vector<std::vector<NodeId>> children_, parents_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Nodes from enumerate_lpms; cover edges from the good pairs of each node.
inline QuotientPoset build_poset(int n) {
  auto nodes = enumerate_lpms(n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].to_string(), i);

  std::vector<std::vector<std::size_t>> kids(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    for (const auto& child : quotient_children(nodes[i])) kids[i].push_back(index.at(child.to_string()));
    std::sort(kids[i].begin(), kids[i].end());
  });
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t c : kids[i]) covers.emplace_back(i, c);
  return QuotientPoset(n, std::move(nodes), std::move(covers));
}

namespace detail {
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}
}  // namespace detail

/// a(n, k) = C(n, k) C(n, k-1) / n, the number of Dyck paths of semilength
/// n with k peaks.
inline std::uint64_t narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw ArgumentError("narayana(" + std::to_string(n) + "," + std::to_string(k) + ") needs 1 <= k <= n");
  unsigned __int128 v = static_cast<unsigned __int128>(detail::binomial(n, k)) * detail::binomial(n, k - 1);
  return static_cast<std::uint64_t>(v / static_cast<unsigned>(n));
}

inline std::uint64_t catalan(int m) {
  if (m < 0) throw ArgumentError("catalan needs m >= 0");
  return detail::binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

/// Number of nodes of each rank 0..n.
inline std::vector<std::uint64_t> rank_counts(const QuotientPoset& p) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(p.n()) + 1, 0);
  for (const auto& m : p.nodes()) ++counts[static_cast<std::size_t>(m.rank())];
  return counts;
}

/// The Narayana row predicted for the poset on [n]: entry k is
/// a(n+1, n-k+1).
inline std::vector<std::uint64_t> predicted_rank_counts(int n) {
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= n; ++k) out.push_back(narayana(n + 1, n - k + 1));
  return out;
}

/// A Dyck path of N (0,1) and E (1,0) steps from (0,0) to (m,m) that never
/// goes below the diagonal y = x.
class DyckPath {
 public:
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    if (steps_.size() % 2 != 0) throw ArgumentError("Dyck path must have even length");
    int height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const char c = steps_[i];
      if (c == 'N') ++height;
      else if (c == 'E') --height;
      else throw ArgumentError("Dyck path steps must be N or E");
      if (height < 0) throw ArgumentError("Dyck path crosses below the diagonal at step " + std::to_string(i + 1));
    }
    if (height != 0) throw ArgumentError("Dyck path does not end on the diagonal");
  }

  /// Path with the given valleys (x_r, y_r), strictly increasing in both
  /// coordinates and 1 <= x_r <= y_r <= m - 1.
  static DyckPath from_valleys(int m, const std::vector<std::pair<int, int>>& valleys) {
    std::string s;
    int x = 0, y = 0;
    for (const auto& [vx, vy] : valleys) {
      if (vx <= x || vy <= y || vx > vy || vy >= m) throw ArgumentError("invalid valley sequence");
      s.append(static_cast<std::size_t>(vy - y), 'N');
      s.append(static_cast<std::size_t>(vx - x), 'E');
      x = vx;
      y = vy;
    }
    s.append(static_cast<std::size_t>(m - y), 'N');
    s.append(static_cast<std::size_t>(m - x), 'E');
    return DyckPath(std::move(s));
  }

  const std::string& steps() const noexcept { return steps_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }

  int peaks() const noexcept {
    int count = 0;
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) count += steps_[i] == 'N' && steps_[i + 1] == 'E';
    return count;
  }

  /// Corner points (x, y) entered by an E step and left by an N step.
  std::vector<std::pair<int, int>> valleys() const {
    std::vector<std::pair<int, int>> out;
    int x = 0, y = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      (steps_[i] == 'N' ? y : x)++;
      if (steps_[i] == 'E' && i + 1 < steps_.size() && steps_[i + 1] == 'N') out.emplace_back(x, y);
    }
    return out;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// Reads M as a quotient of U_{n,n}: the greedy pairing points (j_r, i_r)
/// (positions of the removed L- and U-elements) become the valleys of a Dyck
/// path of semilength n + 1 with corank(M) + 1 peaks.
inline DyckPath lpm_to_dyck(const Lpm& m) {
  const Lpm top = Lpm::uniform(m.n(), m.n());
  const Pairing pairing = greedy_pairing(m, top);
  std::vector<std::pair<int, int>> points;
  for (const auto& p : pairing.pairs())
    points.emplace_back(top.lower().position_of(p.ell), top.upper().position_of(p.u));
  return DyckPath::from_valleys(m.n() + 1, points);
}

inline Lpm dyck_to_lpm(const DyckPath& d, int n) {
  if (d.semilength() != n + 1)
    throw ArgumentError("Dyck path of semilength " + std::to_string(d.semilength()) + " does not encode an LPM on [" +
                        std::to_string(n) + "]");
  std::vector<int> removed_lower, removed_upper;
  for (const auto& [x, y] : d.valleys()) {
    removed_lower.push_back(x);
    removed_upper.push_back(y);
  }
  return Lpm(n, complement(GroundSubset(n, removed_upper)), complement(GroundSubset(n, removed_lower)));
}

/// Rank-preserving weak order: diagram containment, U' >=_G U and L' <=_G L.
inline bool weak_leq(const Lpm& sub, const Lpm& m) {
  if (sub.n() != m.n()) throw ArgumentError("matroids on different ground sets");
  if (sub.rank() != m.rank()) throw ArgumentError("weak order compares LPMs of equal rank");
  return gale_leq(m.upper(), sub.upper()) && gale_leq(sub.lower(), m.lower());
}

namespace detail {
inline void require_interval(const QuotientPoset& p, const Lpm& bottom, const Lpm& top) {
  (void)p.id_of(bottom);
  (void)p.id_of(top);
  if (!is_quotient(bottom, top))
    throw PreconditionError(bottom.to_short_string() + " is not a quotient of " + top.to_short_string());
}
}  // namespace detail

/// Node ids of [bottom, top]_Q.
inline std::vector<QuotientPoset::NodeId> interval_nodes(const QuotientPoset& p, const Lpm& bottom, const Lpm& top) {
  detail::require_interval(p, bottom, top);
  std::vector<QuotientPoset::NodeId> out;
  for (QuotientPoset::NodeId id = 0; id < p.size(); ++id) {
    const Lpm& m = p.node(id);
    if (m.rank() < bottom.rank() || m.rank() > top.rank()) continue;
    if (is_quotient(bottom, m) && is_quotient(m, top)) out.push_back(id);
  }
  return out;
}

/// Number of maximal chains of [bottom, top]_Q, by memoized counting over
/// the cover edges.
inline std::uint64_t maximal_chains(const QuotientPoset& p, const Lpm& bottom, const Lpm& top) {
  detail::require_interval(p, bottom, top);
  const auto bottom_id = p.id_of(bottom);
  std::unordered_map<QuotientPoset::NodeId, std::uint64_t> memo;
  auto count = [&](auto&& self, QuotientPoset::NodeId id) -> std::uint64_t {
    if (id == bottom_id) return 1;
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (auto child : p.children(id))
      if (p.rank(child) >= bottom.rank() && is_quotient(bottom, p.node(child))) total += self(self, child);
    memo.emplace(id, total);
    return total;
  };
  return count(count, p.id_of(top));
}

/// Every maximal chain of [bottom, top]_Q, listed bottom-up.
inline std::vector<std::vector<Lpm>> list_maximal_chains(const QuotientPoset& p, const Lpm& bottom, const Lpm& top) {
  detail::require_interval(p, bottom, top);
  std::vector<std::vector<Lpm>> out;
  std::vector<Lpm> stack{top};
  const auto bottom_id = p.id_of(bottom);
  auto walk = [&](auto&& self, QuotientPoset::NodeId id) -> void {
    if (id == bottom_id) {
      out.emplace_back(stack.rbegin(), stack.rend());
      return;
    }
    for (auto child : p.children(id)) {
      if (p.rank(child) < bottom.rank() || !is_quotient(bottom, p.node(child))) continue;
      stack.push_back(p.node(child));
      self(self, child);
      stack.pop_back();
    }
  };
  walk(walk, p.id_of(top));
  std::sort(out.begin(), out.end());
  return out;
}

/// The <=_W-maximal LPMs among the rank-r members of [bottom, top]_Q.
inline std::vector<Lpm> weak_maxima_in_interval(const QuotientPoset& p, const Lpm& bottom, const Lpm& top, int r) {
  detail::require_interval(p, bottom, top);
  if (r < bottom.rank() || r > top.rank())
    throw ArgumentError("rank " + std::to_string(r) + " outside [" + std::to_string(bottom.rank()) + "," +
                        std::to_string(top.rank()) + "]");
  std::vector<Lpm> layer;
  for (auto id : interval_nodes(p, bottom, top))
    if (p.rank(id) == r) layer.push_back(p.node(id));
  std::vector<Lpm> maxima;
  for (const auto& a : layer) {
    bool dominated = std::any_of(layer.begin(), layer.end(), [&](const Lpm& b) { return b != a && weak_leq(a, b); });
    if (!dominated) maxima.push_back(a);
  }
  return maxima;
}

/// Rank histogram of [bottom, top]_Q, indexed from rank(bottom).
inline std::vector<std::uint64_t> interval_rank_counts(const QuotientPoset& p, const Lpm& bottom, const Lpm& top) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(top.rank() - bottom.rank() + 1), 0);
  for (auto id : interval_nodes(p, bottom, top)) ++counts[static_cast<std::size_t>(p.rank(id) - bottom.rank())];
  return counts;
}

/// Graphviz Hasse diagram, one rank per layer, top rank first.
inline std::string to_dot(const QuotientPoset& p) {
  std::ostringstream out;
  out << "digraph P" << p.n() << " {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (QuotientPoset::NodeId id = 0; id < p.size(); ++id)
    out << "  n" << id << " [label=\"" << p.node(id).to_string() << "\"];\n";
  for (int r = p.n(); r >= 0; --r) {
    out << "  { rank=same;";
    for (QuotientPoset::NodeId id = 0; id < p.size(); ++id)
      if (p.rank(id) == r) out << " n" << id << ";";
    out << " }\n";
  }
  for (const auto& [parent, child] : p.covers()) out << "  n" << parent << " -> n" << child << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lpm
