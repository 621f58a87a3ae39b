// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact; the only tolerances are the wall-clock
// limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lpm/lpm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kNarayanaLimitSeconds = 10;
constexpr double kQuotientOracleLimitSeconds = 60;
constexpr double kIntervalUnionLimitSeconds = 120;
constexpr double kOrderReversalLimitSeconds = 30;
constexpr double kCubeLimitSeconds = 10;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

void require_suite(Outcome& out, const lpm::SuiteReport& r) {
  std::string what = r.name + " n<=" + std::to_string(r.max_n) + " cases=" + std::to_string(r.cases) +
                     " mismatches=" + std::to_string(r.mismatches);
  if (r.skipped) what += " skipped=" + std::to_string(r.skipped);
  for (const auto& e : r.examples) what += " [" + e + "]";
  if (r.ok() && r.cases > 0) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
  } else {
    out.require(false, what);
  }
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    out.ok = false;
    out.detail += "; took longer than " + std::to_string(limit_seconds) + " s";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d %-26s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), seconds, out.detail.c_str());
  std::fflush(stdout);
}

lpm::Lpm L(const char* s) { return lpm::parse_lpm(s); }

}  // namespace

int main() {
  using lpm::Lpm;

  criterion(1, "narayana-ranks", kNarayanaLimitSeconds, [] {
    Outcome out;
    for (int n = 1; n <= 7; ++n) {
      const auto p = lpm::build_poset(n);
      out.require(lpm::rank_counts(p) == lpm::predicted_rank_counts(n), "rank counts differ at n=" + std::to_string(n));
      out.require(p.size() == lpm::catalan(n + 1), "node count differs at n=" + std::to_string(n));
    }
    out.require(lpm::build_poset(3).size() == 14, "n=3 node count is not 14");
    if (out.ok) out.detail = "n=1..7 rank rows equal a(n+1, n-k+1), totals Catalan(n+1)";
    return out;
  });

  criterion(2, "quotient-oracle", kQuotientOracleLimitSeconds, [] {
    Outcome out;
    const auto r = lpm::verify_quotient_oracle(5);
    require_suite(out, r);
    std::uint64_t pairs = 0;
    for (int n = 1; n <= 5; ++n) pairs += lpm::catalan(n + 1) * lpm::catalan(n + 1);
    out.require(r.cases == pairs, "expected " + std::to_string(pairs) + " ordered pairs");
    return out;
  });

  criterion(3, "interval-union", kIntervalUnionLimitSeconds, [] {
    Outcome out;
    require_suite(out, lpm::verify_interval_union(6));
    return out;
  });

  criterion(4, "order-reversal", kOrderReversalLimitSeconds, [] {
    Outcome out;
    require_suite(out, lpm::verify_order_reversal(4));
    require_suite(out, lpm::verify_order_reversal(5));
    return out;
  });

  criterion(5, "interval-characterization", 0, [] {
    Outcome out;
    require_suite(out, lpm::verify_interval_characterization(5));
    std::set<std::string> failing;
    for (const auto& lo : lpm::all_permutations(3))
      for (const auto& hi : lpm::all_permutations(3))
        if (lpm::bruhat_leq(lo, hi) &&
            !lpm::lpfm_from_flag_pair(lpm::flag_of_bruhat_perm(hi), lpm::flag_of_bruhat_perm(lo)).has_value())
          failing.insert("[" + lo.to_string() + "," + hi.to_string() + "]");
    out.require(failing == std::set<std::string>{"[132,231]", "[213,312]"}, "S3 failing intervals differ");
    if (out.ok) out.detail += "; S3 failing intervals [132,231] [213,312]";
    return out;
  });

  criterion(6, "cube-intervals", kCubeLimitSeconds, [] {
    Outcome out;
    require_suite(out, lpm::verify_cube_intervals(5));
    return out;
  });

  criterion(7, "pinned-examples", 0, [] {
    Outcome out;
    const auto m = L("M[1357|3578]@8");
    out.require(lpm::fundamental_set(m, lpm::parse_subset("1467", 8), 5) == lpm::parse_subset("46", 8),
                "fundamental set of 1467 at 5");

    const auto d = L("M[13|25]@5");
    out.require(lpm::decorated_permutation(d).to_string() == "2,1,5,3,4", "decorated permutation of M[13,25]");
    std::vector<std::vector<int>> rows, cols;
    for (const auto& c : lpm::row_intervals(d)) rows.push_back(c.members());
    for (const auto& c : lpm::column_intervals(d)) cols.push_back(c.members());
    out.require(rows == std::vector<std::vector<int>>{{2, 3, 4, 5, 1}, {5, 1, 2, 3}}, "row intervals of M[13,25]");
    out.require(cols == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {4, 5}}, "column intervals of M[13,25]");

    const auto ex = lpm::Lpfm::from_middle(3, {Lpm::uniform(1, 3), L("M[13|23]@3")});
    out.require(lpm::polytope_vertices(ex) ==
                    std::vector<lpm::LatticePoint>{{{1, 2, 3}}, {{1, 3, 2}}, {{2, 1, 3}}, {{3, 1, 2}}},
                "vertices of the rank 1 < 2 example");

    const auto six = lpm::Lpfm::from_middle(4, {L("M[1|3]@4"), L("M[14|34]@4"), L("M[124|234]@4")});
    const auto tau_hi = lpm::bruhat_perm(six.upper_flag()), tau_lo = lpm::bruhat_perm(six.lower_flag());
    out.require(tau_lo.to_string() == "1243" && tau_hi.to_string() == "4213", "flag pair Bruhat endpoints");
    out.require(lpm::bruhat_interval(tau_lo, tau_hi).size() == 6, "[1243,4213] size");
    out.require(lpm::flags_of_lpfm(six).size() == 6, "six flags");

    const auto p3 = lpm::build_poset(3);
    out.require(lpm::maximal_chains(p3, Lpm::uniform(1, 3), Lpm::uniform(3, 3)) == 3, "chains of [U13,U33]");
    for (const char* hi : {"M[12|23]@3", "M[13|23]@3"}) {
      const auto& kids = p3.children(p3.id_of(L(hi)));
      for (const char* lo : {"M[1|3]@3", "M[1|2]@3"})
        out.require(std::find(kids.begin(), kids.end(), p3.id_of(L(lo))) != kids.end(),
                    std::string(hi) + " does not cover " + lo);
    }
    if (out.ok) out.detail = "fundamental set, decorated permutation, intervals, vertices, [1243,4213], chains, non-lattice";
    return out;
  });

  criterion(8, "dyck-bijection", 0, [] {
    Outcome out;
    require_suite(out, lpm::verify_dyck_bijection(7));
    return out;
  });

  criterion(9, "higgs-non-closure", 0, [] {
    Outcome out;
    const auto p = lpm::build_poset(8);
    const auto maxima = lpm::weak_maxima_in_interval(p, Lpm::uniform(0, 8), L("M[1246|2568]@8"), 3);
    out.require(maxima.size() == 2, "expected 2 maxima, got " + std::to_string(maxima.size()));
    out.require(maxima == std::vector<Lpm>{L("M[124|268]@8"), L("M[126|568]@8")}, "maxima differ");
    std::string names;
    for (const auto& x : maxima) names += " " + x.to_short_string();
    out.detail += "maxima" + names;
    return out;
  });

  criterion(10, "truncation", 0, [] {
    Outcome out;
    const auto m = L("M[135|246]@6");
    const auto t = lpm::truncation_bases(m, 1);
    out.require(!lpm::recognize_lpm(t).has_value(), "truncation recognized as an LPM");
    out.require(lpm::is_quotient_oracle(t, lpm::bases(m)), "truncation is not a quotient");
    if (out.ok) out.detail = "T(M[135,246]) has " + std::to_string(t.size()) + " bases, not an LPM, quotient";
    return out;
  });

  return failures == 0 ? 0 : 1;
}
