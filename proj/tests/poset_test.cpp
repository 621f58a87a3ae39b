#include <gtest/gtest.h>

#include <set>

#include "lpm/poset.hpp"
#include "lpm/serialize.hpp"
#include "lpm/text.hpp"

using lpm::DyckPath;
using lpm::Lpm;
using lpm::parse_lpm;

TEST(Enumerate, CatalanMany) {
  for (int n = 0; n <= 7; ++n) {
    const auto all = lpm::enumerate_lpms(n);
    EXPECT_EQ(all.size(), lpm::catalan(n + 1)) << n;
    EXPECT_EQ(std::set<Lpm>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Numbers, NarayanaAndCatalan) {
  EXPECT_EQ(lpm::narayana(4, 2), 6u);
  EXPECT_EQ(lpm::narayana(9, 5), 1764u);
  EXPECT_EQ(lpm::catalan(4), 14u);
  EXPECT_EQ(lpm::catalan(9), 4862u);
  EXPECT_EQ(lpm::predicted_rank_counts(3), (std::vector<std::uint64_t>{1, 6, 6, 1}));
  EXPECT_THROW(lpm::narayana(3, 4), lpm::ArgumentError);
  EXPECT_THROW(lpm::narayana(0, 0), lpm::ArgumentError);
}

TEST(Poset, SmallCounts) {
  const auto p3 = lpm::build_poset(3);
  EXPECT_EQ(p3.size(), 14u);
  EXPECT_EQ(lpm::rank_counts(p3), (std::vector<std::uint64_t>{1, 6, 6, 1}));
  EXPECT_EQ(lpm::build_poset(4).size(), 42u);
}

TEST(Poset, NarayanaRanks) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(lpm::rank_counts(lpm::build_poset(n)), lpm::predicted_rank_counts(n)) << n;
}

TEST(Poset, CoversMatchQuotientTest) {
  for (int n = 1; n <= 4; ++n) {
    const auto p = lpm::build_poset(n);
    std::set<std::pair<std::size_t, std::size_t>> covers(p.covers().begin(), p.covers().end());
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        const bool cover = p.rank(a) == p.rank(b) + 1 && lpm::is_quotient(p.node(b), p.node(a));
        EXPECT_EQ(covers.count({a, b}) == 1, cover) << p.node(a).to_string() << " " << p.node(b).to_string();
      }
  }
}

TEST(Poset, GradedBetweenUniformExtremes) {
  const auto p = lpm::build_poset(4);
  for (std::size_t id = 0; id < p.size(); ++id) {
    const auto& m = p.node(id);
    EXPECT_TRUE(lpm::is_quotient(Lpm::uniform(0, 4), m));
    EXPECT_TRUE(lpm::is_quotient(m, Lpm::uniform(4, 4)));
    if (m.rank() > 0) { EXPECT_FALSE(p.children(id).empty()); }
  }
}

TEST(Poset, NotALattice) {
  const auto p = lpm::build_poset(3);
  const auto lo1 = p.id_of(parse_lpm("M[1|3]@3"));
  const auto lo2 = p.id_of(parse_lpm("M[1|2]@3"));
  for (const char* hi : {"M[12|23]@3", "M[13|23]@3"}) {
    const auto& kids = p.children(p.id_of(parse_lpm(hi)));
    EXPECT_NE(std::find(kids.begin(), kids.end(), lo1), kids.end()) << hi;
    EXPECT_NE(std::find(kids.begin(), kids.end(), lo2), kids.end()) << hi;
  }
}

TEST(Poset, Lookup) {
  const auto p = lpm::build_poset(2);
  EXPECT_FALSE(p.find(parse_lpm("M[1|1]@3")).has_value());
  EXPECT_THROW(p.id_of(parse_lpm("M[1|1]@3")), lpm::ArgumentError);
}

TEST(Dyck, Validation) {
  EXPECT_THROW(DyckPath("NEE"), lpm::ArgumentError);
  EXPECT_THROW(DyckPath("ENNE"), lpm::ArgumentError);
  EXPECT_THROW(DyckPath("NXEN"), lpm::ArgumentError);
  EXPECT_THROW(DyckPath("NNNE"), lpm::ArgumentError);
  EXPECT_EQ(DyckPath("NENNEE").peaks(), 2);
  EXPECT_EQ(DyckPath("NENNEE").valleys(), (std::vector<std::pair<int, int>>{{1, 1}}));
}

TEST(Dyck, GreedyPairingValleys) {
  const auto d = lpm::lpm_to_dyck(parse_lpm("M[1246|3568]@8"));
  EXPECT_EQ(d.semilength(), 9);
  EXPECT_EQ(d.valleys(), (std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {4, 7}, {7, 8}}));
  EXPECT_EQ(d.peaks(), 5);
  EXPECT_EQ(lpm::dyck_to_lpm(d, 8), parse_lpm("M[1246|3568]@8"));
}

TEST(Dyck, Uniform) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(lpm::lpm_to_dyck(Lpm::uniform(n, n)).peaks(), 1);
    EXPECT_EQ(lpm::lpm_to_dyck(Lpm::uniform(0, n)).peaks(), n + 1);
  }
  EXPECT_EQ(lpm::dyck_to_lpm(DyckPath("NNNENEEE"), 3), parse_lpm("M[1,2|2,3]@3"));
  EXPECT_THROW(lpm::dyck_to_lpm(DyckPath("NE"), 3), lpm::ArgumentError);
}

TEST(Dyck, BijectionRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> seen;
    for (const auto& m : lpm::enumerate_lpms(n)) {
      const auto d = lpm::lpm_to_dyck(m);
      ASSERT_EQ(d.peaks(), m.corank() + 1);
      ASSERT_EQ(lpm::dyck_to_lpm(d, n), m);
      seen.insert(d.steps());
    }
    EXPECT_EQ(seen.size(), lpm::catalan(n + 1));
  }
}

TEST(WeakOrder, Examples) {
  EXPECT_TRUE(lpm::weak_leq(parse_lpm("M[12|58]@8"), parse_lpm("M[12|68]@8")));
  EXPECT_FALSE(lpm::weak_leq(parse_lpm("M[12|68]@8"), parse_lpm("M[12|58]@8")));
  EXPECT_TRUE(lpm::weak_leq(parse_lpm("M[24|35]@5"), Lpm::uniform(2, 5)));
  EXPECT_THROW(lpm::weak_leq(parse_lpm("M[1|2]@3"), parse_lpm("M[12|23]@3")), lpm::ArgumentError);
}

TEST(Chains, Counts) {
  const auto p3 = lpm::build_poset(3);
  EXPECT_EQ(lpm::maximal_chains(p3, Lpm::uniform(1, 3), Lpm::uniform(3, 3)), 3u);
  EXPECT_EQ(lpm::maximal_chains(p3, Lpm::uniform(0, 3), Lpm::uniform(3, 3)), 17u);
  EXPECT_EQ(lpm::list_maximal_chains(p3, Lpm::uniform(1, 3), Lpm::uniform(3, 3)).size(), 3u);
  const auto m = parse_lpm("M[12|23]@3");
  EXPECT_EQ(lpm::maximal_chains(p3, m, m), 1u);
  EXPECT_EQ(lpm::maximal_chains(lpm::build_poset(4), Lpm::uniform(0, 4), Lpm::uniform(4, 4)), 152u);
  EXPECT_THROW(lpm::maximal_chains(p3, Lpm::uniform(3, 3), Lpm::uniform(1, 3)), lpm::PreconditionError);
}

TEST(Chains, ListedChainsAreCoverChains) {
  const auto p = lpm::build_poset(3);
  const auto chains = lpm::list_maximal_chains(p, Lpm::uniform(0, 3), Lpm::uniform(3, 3));
  ASSERT_EQ(chains.size(), 17u);
  for (const auto& c : chains) {
    ASSERT_EQ(c.size(), 4u);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_TRUE(lpm::is_quotient(c[i], c[i + 1]));
  }
}

TEST(Interval, NodesAndRanks) {
  const auto p = lpm::build_poset(3);
  EXPECT_EQ(lpm::interval_rank_counts(p, Lpm::uniform(1, 3), Lpm::uniform(3, 3)),
            (std::vector<std::uint64_t>{1, 3, 1}));
  EXPECT_EQ(lpm::interval_nodes(p, Lpm::uniform(0, 3), Lpm::uniform(3, 3)).size(), 14u);
}

TEST(WeakMaxima, HiggsNonClosure) {
  const auto p = lpm::build_poset(8);
  const auto maxima = lpm::weak_maxima_in_interval(p, Lpm::uniform(0, 8), parse_lpm("M[1246|2568]@8"), 3);
  EXPECT_EQ(maxima, (std::vector<Lpm>{parse_lpm("M[124|268]@8"), parse_lpm("M[126|568]@8")}));
}

TEST(WeakMaxima, UniformHasUniqueMaximum) {
  const auto p = lpm::build_poset(4);
  for (int r = 0; r <= 4; ++r)
    EXPECT_EQ(lpm::weak_maxima_in_interval(p, Lpm::uniform(0, 4), Lpm::uniform(4, 4), r),
              (std::vector<Lpm>{Lpm::uniform(r, 4)}));
  EXPECT_THROW(lpm::weak_maxima_in_interval(p, Lpm::uniform(1, 4), Lpm::uniform(3, 4), 0), lpm::ArgumentError);
}

TEST(Export, DotAndJson) {
  const auto p = lpm::build_poset(2);
  const auto dot = lpm::to_dot(p);
  EXPECT_EQ(dot.rfind("digraph P2 {", 0), 0u);
  EXPECT_NE(dot.find("M[1,2|1,2]@2"), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
  const auto j = lpm::poset_json(p);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["nodes"].size(), 5u);
  EXPECT_EQ(j["covers"].size(), p.covers().size());
  EXPECT_EQ(j["nodes"][0]["rank"], 0);
}
