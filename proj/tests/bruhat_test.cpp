#include <gtest/gtest.h>

#include <set>

#include "lpm/bruhat.hpp"

using lpm::parse_permutation;
using lpm::Permutation;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// Cover relation read straight off the transposition definition: v = u(i j),
// i < j, with l(v) = l(u) + 1.
bool cover_by_length(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u.swap_positions(i, j) == v && v.length() == u.length() + 1) return true;
  return false;
}

}  // namespace

TEST(Permutation, ParseAndFormat) {
  EXPECT_EQ(P("2413").to_string(), "2413");
  EXPECT_EQ(P("2,4,1,3"), P("2413"));
  EXPECT_EQ(P("2413").inverse(), P("3142"));
  EXPECT_EQ(P("2413").length(), 3);
  EXPECT_THROW(P("2213"), lpm::ParseError);
  EXPECT_THROW(lpm::Permutation({2, 2, 1, 3}), lpm::ArgumentError);
  EXPECT_THROW(P("2a13"), lpm::ParseError);
  EXPECT_EQ(lpm::all_permutations(4).size(), 24u);
}

TEST(Bruhat, CoverExamples) {
  EXPECT_FALSE(lpm::bruhat_cover(P("1243"), P("4213")));
  EXPECT_TRUE(lpm::bruhat_cover(P("1234"), P("1243")));
  EXPECT_TRUE(lpm::bruhat_cover(P("132"), P("231")));
}

TEST(Bruhat, CoverMatchesLengthDefinition) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = lpm::all_permutations(n);
    for (const auto& u : all) {
      std::set<Permutation> ups;
      for (const auto& v : lpm::bruhat_upper_covers(u)) ups.insert(v);
      for (const auto& v : all) {
        EXPECT_EQ(lpm::bruhat_cover(u, v), cover_by_length(u, v)) << u.to_string() << " " << v.to_string();
        EXPECT_EQ(ups.count(v) == 1, cover_by_length(u, v));
      }
    }
  }
}

TEST(Bruhat, LeqExamples) {
  EXPECT_TRUE(lpm::bruhat_leq(P("1243"), P("4213")));
  EXPECT_TRUE(lpm::bruhat_leq(P("3142"), P("3142")));
  EXPECT_FALSE(lpm::bruhat_leq(P("213"), P("132")));
  EXPECT_FALSE(lpm::bruhat_leq(P("132"), P("213")));
}

TEST(Bruhat, DominanceMatchesCoverClosure) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = lpm::all_permutations(n);
    for (const auto& u : all)
      for (const auto& v : all) ASSERT_EQ(lpm::bruhat_leq(u, v), lpm::bruhat_leq_by_covers(u, v));
  }
}

TEST(Bruhat, Intervals) {
  // enumerated independently and frozen
  const std::vector<Permutation> expected{P("1243"), P("1423"), P("2143"), P("2413"), P("4123"), P("4213")};
  EXPECT_EQ(lpm::bruhat_interval(P("1243"), P("4213")), expected);
  EXPECT_EQ(lpm::bruhat_interval(P("2413"), P("2413")), std::vector<Permutation>{P("2413")});
  EXPECT_EQ(lpm::bruhat_interval(Permutation::identity(3), Permutation::longest(3)).size(), 6u);
  EXPECT_THROW(lpm::bruhat_interval(P("213"), P("132")), lpm::PreconditionError);
}

TEST(Bruhat, IntervalMatchesFilter) {
  const auto all = lpm::all_permutations(4);
  for (const auto& u : all)
    for (const auto& v : all) {
      if (!lpm::bruhat_leq(u, v)) continue;
      std::vector<Permutation> filtered;
      for (const auto& w : all)
        if (lpm::bruhat_leq(u, w) && lpm::bruhat_leq(w, v)) filtered.push_back(w);
      ASSERT_EQ(lpm::bruhat_interval(u, v), filtered);
    }
}
