#include <gtest/gtest.h>

#include "lpm/verify.hpp"

TEST(Verify, AllSuitesPassThroughFour) {
  const auto reports = lpm::run_all_suites(4);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.name << " mismatches=" << r.mismatches;
    EXPECT_GT(r.cases, 0u) << r.name;
    EXPECT_EQ(r.max_n, 4) << r.name;
  }
}
