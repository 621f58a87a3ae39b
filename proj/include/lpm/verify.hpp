#pragma once

// Exhaustive cross-checks of the fast routines against brute force, run for
// every ground set size up to a bound. Each suite returns a report rather
// than throwing so callers can print all verdicts.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "lpm/arrows.hpp"
#include "lpm/bruhat.hpp"
#include "lpm/flag.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/parallel.hpp"
#include "lpm/poset.hpp"
#include "lpm/quotient.hpp"
#include "lpm/text.hpp"

namespace lpm {

struct SuiteReport {
  std::string name;
  int max_n = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t skipped = 0;  // inputs outside the statement's hypotheses
  std::vector<std::string> examples;  // first few mismatches

  bool ok() const { return mismatches == 0; }
};

namespace detail {

/// Thread-safe tally shared by the workers of one suite.
class Tally {
 public:
  void pass() { ++cases_; }
  void skip() { ++skipped_; }
  void fail(const std::string& what) {
    ++cases_;
    ++mismatches_;
    std::lock_guard lock(mutex_);
    if (examples_.size() < 5) examples_.push_back(what);
  }
  void check(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }

  SuiteReport report(std::string name, int max_n) {
    std::sort(examples_.begin(), examples_.end());
    return {std::move(name), max_n, cases_.load(), mismatches_.load(), skipped_.load(), examples_};
  }

 private:
  std::atomic<std::uint64_t> cases_{0}, mismatches_{0}, skipped_{0};
  std::mutex mutex_;
  std::vector<std::string> examples_;
};

inline std::string pair_text(const Lpm& a, const Lpm& b) { return a.to_short_string() + " vs " + b.to_short_string(); }

}  // namespace detail

/// Rank counts of the quotient poset against the Narayana row of n+1.
inline SuiteReport verify_narayana_ranks(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto p = build_poset(n);
    t.check(rank_counts(p) == predicted_rank_counts(n) && p.size() == catalan(n + 1),
            [&] { return "n=" + std::to_string(n); });
  }
  return t.report("narayana-ranks", max_n);
}

/// Closed-form fundamental sets against B + p - q membership.
inline SuiteReport verify_fundamental_sets(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto all = enumerate_lpms(n);
    parallel_for(all.size(), [&](std::size_t i) {
      const Lpm& m = all[i];
      for (const auto& b : enumerate_bases(m))
        for (int p = 1; p <= n; ++p) {
          if (b.contains(p)) continue;
          t.check(fundamental_set(m, b, p) == fundamental_set_oracle(m, b, p),
                  [&] { return m.to_short_string() + " B=" + b.to_compact() + " p=" + std::to_string(p); });
        }
    });
  }
  return t.report("fundamental-sets", max_n);
}

/// Basis counting DP and enumeration against the Gale filter of all k-subsets.
inline SuiteReport verify_basis_enumeration(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& m : enumerate_lpms(n)) {
      std::vector<GroundSubset> brute;
      for (const auto& s : k_subsets(n, m.rank()))
        if (gale_leq(m.upper(), s) && gale_leq(s, m.lower())) brute.push_back(s);
      t.check(enumerate_bases(m) == brute && count_bases(m) == brute.size(), [&] { return m.to_short_string(); });
    }
  return t.report("basis-enumeration", max_n);
}

/// Greedy-pairing quotient test against the basis-exchange definition.
inline SuiteReport verify_quotient_oracle(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto all = enumerate_lpms(n);
    std::vector<BasisSet> bs;
    for (const auto& m : all) bs.push_back(bases(m));
    parallel_for(all.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < all.size(); ++j)
        t.check(is_quotient(all[i], all[j]) == is_quotient_oracle(bs[i], bs[j]),
                [&] { return detail::pair_text(all[i], all[j]); });
    });
  }
  return t.report("quotient-oracle", max_n);
}

/// Quotient test against the interval-union criterion on loop- and
/// coloop-free pairs.
inline SuiteReport verify_interval_union(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Lpm> free;
    for (const auto& m : enumerate_lpms(n))
      if (is_loop_and_coloop_free(m)) free.push_back(m);
    parallel_for(free.size(), [&](std::size_t i) {
      for (const auto& m : free)
        t.check(interval_union_condition(free[i], m) == is_quotient(free[i], m),
                [&] { return detail::pair_text(free[i], m); });
    });
  }
  return t.report("interval-union", max_n);
}

/// Column intervals of M != U_{n-1,n} never contain a row interval of a
/// loop- and coloop-free LPM on the same ground set.
inline SuiteReport verify_columns_need_columns(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Lpm> free;
    for (const auto& m : enumerate_lpms(n))
      if (is_loop_and_coloop_free(m)) free.push_back(m);
    for (const auto& m : free) {
      if (m == Lpm::uniform(n - 1, n)) {
        t.skip();
        continue;
      }
      for (const auto& column : column_intervals(m))
        for (const auto& sub : free)
          t.check(columns_need_columns(sub, m, column),
                  [&] { return detail::pair_text(sub, m) + " I=" + column.to_string(); });
    }
  }
  return t.report("columns-need-columns", max_n);
}

/// Distinct LPMs have distinct decorated permutations; loop- and coloop-free
/// LPMs satisfy u_i < l_i and l̄_i < ū_i.
inline SuiteReport verify_decorated_permutations(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::string, std::string> seen;
    for (const auto& m : enumerate_lpms(n)) {
      const auto text = decorated_permutation(m).to_string();
      auto [it, fresh] = seen.emplace(text, m.to_short_string());
      t.check(fresh, [&] { return text + " shared by " + it->second + " and " + m.to_short_string(); });
      if (!is_loop_and_coloop_free(m)) continue;
      bool strict = true;
      for (const auto& r : row_intervals(m)) strict = strict && r.end() < r.start() && r.contains(1) && r.contains(n);
      for (const auto& c : column_intervals(m)) strict = strict && c.start() < c.end();
      t.check(strict, [&] { return "interval endpoints of " + m.to_short_string(); });
    }
  }
  return t.report("decorated-permutations", max_n);
}

/// lpm_to_dyck and dyck_to_lpm are inverse; peaks = corank + 1.
inline SuiteReport verify_dyck_bijection(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::string> paths;
    for (const auto& m : enumerate_lpms(n)) {
      const auto d = lpm_to_dyck(m);
      paths.insert(d.steps());
      t.check(dyck_to_lpm(d, n) == m && d.peaks() == m.corank() + 1 && d.semilength() == n + 1,
              [&] { return m.to_short_string() + " -> " + d.steps(); });
    }
    t.check(paths.size() == catalan(n + 1), [&] { return "image size at n=" + std::to_string(n); });
  }
  return t.report("dyck-bijection", max_n);
}

/// Flag <-> Gale permutation <-> Bruhat permutation round trips.
inline SuiteReport verify_flag_round_trip(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& pi : all_permutations(n)) {
      const auto f = flag_of_perm(pi);
      t.check(gale_perm(f) == pi && flag_of_bruhat_perm(bruhat_perm(f)) == f && FlagOfBases(f.chain()) == f,
              [&] { return pi.to_string(); });
    }
  return t.report("flag-round-trip", max_n);
}

/// B <=_G B' iff τ_B >=_B τ_B', over all pairs of flags.
inline SuiteReport verify_order_reversal(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<FlagOfBases> flags;
    std::vector<Permutation> taus;
    for (const auto& p : perms) {
      flags.push_back(flag_of_perm(p));
      taus.push_back(bruhat_perm(flags.back()));
    }
    parallel_for(perms.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < perms.size(); ++j)
        t.check(flag_gale_leq(flags[i], flags[j]) == bruhat_leq(taus[j], taus[i]),
                [&] { return perms[i].to_string() + " vs " + perms[j].to_string(); });
    });
  }
  return t.report("order-reversal", max_n);
}

/// A Bruhat cover τ' < τ sends flags the other way: flag(τ') >=_G flag(τ).
inline SuiteReport verify_cover_direction(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lo : all_permutations(n))
      for (const auto& hi : bruhat_upper_covers(lo))
        t.check(flag_gale_leq(flag_of_bruhat_perm(hi), flag_of_bruhat_perm(lo)),
                [&] { return lo.to_string() + " < " + hi.to_string(); });
  return t.report("cover-direction", max_n);
}

/// Covers of the Gale order on flags swap two values π(i), π(j), i < j, with
/// no position strictly between them holding a value strictly between them.
inline SuiteReport verify_gale_cover_shape(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<FlagOfBases> flags;
    for (const auto& p : perms) flags.push_back(flag_of_perm(p));
    const std::size_t size = perms.size();
    std::vector<std::vector<char>> leq(size, std::vector<char>(size));
    parallel_for(size, [&](std::size_t a) {
      for (std::size_t b = 0; b < size; ++b) leq[a][b] = flag_gale_leq(flags[a], flags[b]);
    });
    parallel_for(size, [&](std::size_t a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (a == b || !leq[a][b]) continue;
        bool cover = true;
        for (std::size_t c = 0; c < size && cover; ++c)
          if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
        if (!cover) continue;
        const auto& p = perms[a];
        const auto& q = perms[b];
        std::vector<int> diff;
        for (int i = 1; i <= n; ++i)
          if (p(i) != q(i)) diff.push_back(i);
        bool shape = diff.size() == 2 && p(diff[0]) == q(diff[1]) && p(diff[1]) == q(diff[0]);
        if (shape) {
          const int lo = std::min(p(diff[0]), p(diff[1])), hi = std::max(p(diff[0]), p(diff[1]));
          for (int k = diff[0] + 1; k < diff[1]; ++k) shape = shape && !(lo < p(k) && p(k) < hi);
        }
        t.check(shape, [&] { return p.to_string() + " < " + q.to_string(); });
      }
    });
  }
  return t.report("gale-cover-shape", max_n);
}

/// Over Gale-comparable flag pairs: the chain M[B_k, B'_k] is an LPFM iff
/// the standardization test holds in Gale and in Bruhat coordinates. When it
/// is, its flags are exactly the Gale interval and their Bruhat
/// permutations the Bruhat interval.
inline SuiteReport verify_interval_characterization(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<FlagOfBases> flags;
    std::vector<Permutation> taus;
    for (const auto& p : perms) {
      flags.push_back(flag_of_perm(p));
      taus.push_back(bruhat_perm(flags.back()));
    }
    parallel_for(perms.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        if (!flag_gale_leq(flags[i], flags[j])) continue;
        const auto lpfm = lpfm_from_flag_pair(flags[i], flags[j]);
        const bool gale = good_interval_gale(perms[i], perms[j]);
        const bool bruhat = good_interval_bruhat(taus[i], taus[j]);
        bool ok = lpfm.has_value() == gale && gale == bruhat;
        if (ok && lpfm) {
          std::vector<Permutation> from_flags;
          for (const auto& f : flags_of_lpfm(*lpfm)) from_flags.push_back(bruhat_perm(f));
          std::sort(from_flags.begin(), from_flags.end());
          ok = from_flags == bruhat_interval(taus[j], taus[i]);
        }
        t.check(ok, [&] { return perms[i].to_string() + " <= " + perms[j].to_string(); });
      }
    });
  }
  return t.report("interval-characterization", max_n);
}

/// For every LPFM, its flags are the Gale interval between the U- and
/// L-flags, and their Bruhat permutations form the Bruhat interval.
inline SuiteReport verify_lpfm_intervals(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    const auto lpfms = enumerate_lpfms(n);
    std::vector<FlagOfBases> all_flags;
    for (const auto& p : all_permutations(n)) all_flags.push_back(flag_of_perm(p));
    parallel_for(lpfms.size(), [&](std::size_t i) {
      const auto& f = lpfms[i];
      const auto flags = flags_of_lpfm(f);
      const auto up = f.upper_flag(), low = f.lower_flag();
      std::vector<FlagOfBases> brute;
      for (const auto& g : all_flags)
        if (flag_gale_leq(up, g) && flag_gale_leq(g, low)) brute.push_back(g);
      std::vector<Permutation> taus;
      for (const auto& g : flags) taus.push_back(bruhat_perm(g));
      std::sort(taus.begin(), taus.end());
      t.check(flags == brute && taus == bruhat_interval(bruhat_perm(low), bruhat_perm(up)),
              [&] { return f.to_string(); });
    });
  }
  return t.report("lpfm-intervals", max_n);
}

/// Every cube [τ, τ s_{i_1} ... s_{i_m}] with commuting s_i going up is good.
/// Subsets where some s_i goes down are outside the hypothesis and skipped.
inline SuiteReport verify_cube_intervals(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << std::max(0, n - 1)); ++mask) {
      if (mask & (mask >> 1)) continue;
      std::vector<int> idx;
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1) idx.push_back(i);
      subsets.push_back(std::move(idx));
    }
    for (const auto& tau : all_permutations(n))
      for (const auto& idx : subsets) {
        Permutation top = tau;
        for (int i : idx) top = top.swap_positions(i, i + 1);
        if (!bruhat_leq(tau, top)) {
          t.skip();
          continue;
        }
        t.check(cube_interval_check(tau, idx), [&] {
          std::string s = tau.to_string() + " s";
          for (int i : idx) s += std::to_string(i);
          return s;
        });
      }
  }
  return t.report("cube-intervals", max_n);
}

/// parse_lpm(format_lpm(M)) == M, and the digit shorthand parses the same.
inline SuiteReport verify_text_round_trip(int max_n) {
  detail::Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& m : enumerate_lpms(n)) {
      bool ok = parse_lpm(format_lpm(m)) == m;
      if (n <= 9) {
        auto side = [](const GroundSubset& s) { return s.is_empty() ? std::string("-") : s.to_compact(); };
        ok = ok && parse_lpm("M[" + side(m.upper()) + "|" + side(m.lower()) + "]@" + std::to_string(n)) == m;
      }
      t.check(ok, [&] { return m.to_string(); });
    }
  return t.report("text-round-trip", max_n);
}

inline std::vector<SuiteReport> run_all_suites(int max_n) {
  return {verify_narayana_ranks(max_n),          verify_basis_enumeration(max_n),
          verify_fundamental_sets(max_n),        verify_quotient_oracle(max_n),
          verify_interval_union(max_n),          verify_columns_need_columns(max_n),
          verify_decorated_permutations(max_n),  verify_dyck_bijection(max_n),
          verify_flag_round_trip(max_n),         verify_order_reversal(max_n),
          verify_cover_direction(max_n),         verify_gale_cover_shape(max_n),
          verify_interval_characterization(max_n), verify_lpfm_intervals(max_n),
          verify_cube_intervals(max_n),          verify_text_round_trip(max_n)};
}

}  // namespace lpm
