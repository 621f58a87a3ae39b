#include <gtest/gtest.h>

#include "lpm/subset.hpp"

using lpm::GroundSubset;

namespace {

GroundSubset S(int n, std::initializer_list<int> e) { return GroundSubset(n, e); }

// Componentwise definition, written independently of the library routine.
bool gale_by_counting(const GroundSubset& a, const GroundSubset& b) {
  // a <=_G b iff for every t, |a ∩ [t]| >= |b ∩ [t]|
  for (int t = 1; t <= a.n(); ++t) {
    int ca = 0, cb = 0;
    for (int e : a) ca += e <= t;
    for (int e : b) cb += e <= t;
    if (ca < cb) return false;
  }
  return true;
}

}  // namespace

TEST(GroundSubset, SortsAndValidates) {
  auto s = S(6, {4, 1, 3});
  EXPECT_EQ(s.to_string(), "{1,3,4}");
  EXPECT_EQ(s.nth(2), 3);
  EXPECT_EQ(s.position_of(4), 3);
  EXPECT_EQ(s.position_of(2), 0);
  EXPECT_THROW(S(3, {4}), lpm::ArgumentError);
  EXPECT_THROW(S(3, {1, 1}), lpm::ArgumentError);
  EXPECT_THROW(s.nth(4), lpm::ArgumentError);
}

TEST(GroundSubset, CompactForm) {
  EXPECT_EQ(S(8, {1, 2, 4, 6}).to_compact(), "1246");
  EXPECT_EQ(GroundSubset::empty(3).to_compact(), "-");
  EXPECT_EQ(S(12, {3, 11}).to_compact(), "3,11");
}

TEST(GroundSubset, WithWithout) {
  auto s = S(5, {2, 4});
  EXPECT_EQ(s.with(1), S(5, {1, 2, 4}));
  EXPECT_EQ(s.without(4), S(5, {2}));
  EXPECT_THROW(s.with(2), lpm::ArgumentError);
  EXPECT_THROW(s.without(3), lpm::ArgumentError);
  EXPECT_TRUE(S(5, {2}).is_subset_of(s));
  EXPECT_FALSE(S(5, {3}).is_subset_of(s));
}

TEST(Gale, Examples) {
  EXPECT_TRUE(lpm::gale_leq(S(8, {1, 2, 4, 6}), S(8, {3, 5, 6, 8})));
  auto a = S(6, {2, 3, 5});
  EXPECT_TRUE(lpm::gale_leq(a, a));
  EXPECT_FALSE(lpm::gale_leq(S(6, {2, 5}), S(6, {1, 6})));
  EXPECT_THROW(lpm::gale_leq(S(6, {2}), S(6, {1, 6})), lpm::ArgumentError);
  EXPECT_THROW(lpm::gale_leq(S(6, {2}), S(5, {1})), lpm::ArgumentError);
}

TEST(Gale, AgreesWithPrefixCounts) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto all = lpm::k_subsets(n, k);
      for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(lpm::gale_leq(a, b), gale_by_counting(a, b));
    }
}

TEST(Gale, MeetAndJoinAreBounds) {
  for (int k = 0; k <= 5; ++k) {
    const auto all = lpm::k_subsets(5, k);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto m = lpm::gale_meet(a, b), j = lpm::gale_join(a, b);
        EXPECT_TRUE(lpm::gale_leq(m, a) && lpm::gale_leq(m, b));
        EXPECT_TRUE(lpm::gale_leq(a, j) && lpm::gale_leq(b, j));
        for (const auto& c : all) {
          if (lpm::gale_leq(c, a) && lpm::gale_leq(c, b)) { EXPECT_TRUE(lpm::gale_leq(c, m)); }
          if (lpm::gale_leq(a, c) && lpm::gale_leq(b, c)) { EXPECT_TRUE(lpm::gale_leq(j, c)); }
        }
      }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(lpm::complement(S(8, {3, 5, 6, 8})), S(8, {1, 2, 4, 7}));
  EXPECT_EQ(lpm::complement(GroundSubset::empty(4)), GroundSubset::full(4));
  for (const auto& a : lpm::k_subsets(6, 3)) EXPECT_EQ(lpm::complement(lpm::complement(a)), a);
}

TEST(Standardize, Examples) {
  EXPECT_EQ(lpm::standardize(S(4, {2, 4, 1}), 1), 1);
  EXPECT_EQ(lpm::standardize(S(4, {2, 3, 4}), 2), 1);
  EXPECT_EQ(lpm::standardize(S(4, {3}), 3), 1);
  EXPECT_EQ(lpm::standardize(S(9, {2, 5, 9}), 9), 3);
  EXPECT_THROW(lpm::standardize(S(4, {2, 3}), 1), lpm::ArgumentError);
}

TEST(KSubsets, CountsAndOrder) {
  EXPECT_EQ(lpm::k_subsets(8, 4).size(), 70u);
  EXPECT_EQ(lpm::k_subsets(5, 0).size(), 1u);
  const auto s = lpm::k_subsets(4, 2);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(s.front(), S(4, {1, 2}));
  EXPECT_EQ(s.back(), S(4, {3, 4}));
}

TEST(GroundSubset, MaskRoundTrip) {
  for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(GroundSubset::from_mask(6, m).mask(), m);
}
