#include <gtest/gtest.h>

#include "lpm/poset.hpp"
#include "lpm/serialize.hpp"
#include "lpm/text.hpp"

using lpm::GroundSubset;
using lpm::Lpm;
using lpm::parse_lpm;

namespace {

std::size_t parse_error_position(const std::string& s) {
  try {
    parse_lpm(s);
  } catch (const lpm::ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << s;
  return std::string::npos;
}

}  // namespace

TEST(Parse, Forms) {
  const Lpm staircase(8, GroundSubset(8, {1, 2, 4, 6}), GroundSubset(8, {3, 5, 6, 8}));
  EXPECT_EQ(parse_lpm("M[1,2,4,6|3,5,6,8]@8"), staircase);
  EXPECT_EQ(parse_lpm("M[1246|3568]@8"), staircase);
  EXPECT_EQ(parse_lpm("  M[1246|3568]@8\n"), staircase);
  EXPECT_EQ(parse_lpm("M[-|-]@4"), Lpm::uniform(0, 4));
  EXPECT_EQ(parse_lpm("M[3|5]@12"), Lpm(12, GroundSubset(12, {3}), GroundSubset(12, {5})));
  EXPECT_EQ(parse_lpm("M[1,10|9,12]@12"), Lpm(12, GroundSubset(12, {1, 10}), GroundSubset(12, {9, 12})));
}

TEST(Parse, GrammarErrorsCarryPosition) {
  EXPECT_EQ(parse_error_position("X[1|2]@3"), 0u);
  EXPECT_EQ(parse_error_position("M[1|2]3"), 6u);
  EXPECT_EQ(parse_error_position("M[1|2]@"), 7u);
  EXPECT_EQ(parse_error_position("M[1|2]@3x"), 8u);
  EXPECT_EQ(parse_error_position("M[1,|2,3]@3"), 4u);
  EXPECT_EQ(parse_error_position("M[|]@3"), 2u);
  EXPECT_EQ(parse_error_position("M[4|4]@3"), 2u);
  EXPECT_EQ(parse_error_position("M[11|12]@3"), 2u);
  EXPECT_EQ(parse_error_position("M[1|2]@65"), 7u);
  EXPECT_THROW(parse_lpm("M[1,2"), lpm::ParseError);
}

TEST(Parse, SemanticErrors) {
  EXPECT_THROW(parse_lpm("M[1,3|1,2]@4"), lpm::ConstructionError);
  EXPECT_THROW(parse_lpm("M[1,3|2]@4"), lpm::ConstructionError);
}

TEST(Parse, Subsets) {
  EXPECT_EQ(lpm::parse_subset("-", 4), GroundSubset::empty(4));
  EXPECT_EQ(lpm::parse_subset("2357", 8), GroundSubset(8, {2, 3, 5, 7}));
  EXPECT_EQ(lpm::parse_subset("2,11", 12), GroundSubset(12, {2, 11}));
  EXPECT_THROW(lpm::parse_subset("9", 8), lpm::ParseError);
}

TEST(Format, RoundTrip) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& m : lpm::enumerate_lpms(n)) {
      ASSERT_EQ(parse_lpm(lpm::format_lpm(m)), m);
    }
}

TEST(Json, Lpm) {
  const auto j = lpm::lpm_json(parse_lpm("M[12|68]@8"));
  EXPECT_EQ(j["text"], "M[1,2|6,8]@8");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["U"], lpm::Json({1, 2}));
  EXPECT_EQ(j["L"], lpm::Json({6, 8}));
}

TEST(Json, Verdicts) {
  const auto sub = parse_lpm("M[12|68]@8"), m = parse_lpm("M[124|268]@8");
  const auto good = lpm::verdict_json(sub, m, lpm::explain_quotient(sub, m));
  EXPECT_EQ(good["quotient"], true);
  EXPECT_EQ(good["pairing"], lpm::Json::parse("[[2,4]]"));
  EXPECT_TRUE(good["failing_pair"].is_null());
  const auto bad_sub = parse_lpm("M[135|578]@8"), bad_m = parse_lpm("M[1357|3578]@8");
  const auto bad = lpm::verdict_json(bad_sub, bad_m, lpm::explain_quotient(bad_sub, bad_m));
  EXPECT_EQ(bad["quotient"], false);
  EXPECT_EQ(bad["failing_pair"], lpm::Json({3, 7}));
}

TEST(Json, Flag) {
  const auto j = lpm::flag_json(lpm::flag_of_perm(lpm::parse_permutation("3412")));
  EXPECT_EQ(j["gale"], "3,4,1,2");
  EXPECT_EQ(j["bruhat"], "2,1,4,3");
  EXPECT_EQ(j["chain"].size(), 5u);
  EXPECT_EQ(j["chain"][2], lpm::Json({3, 4}));
}
