#include <gtest/gtest.h>

#include "support.hpp"

using namespace aqp;
using aqp::testing::text;

namespace {

// max b' >= a'-1 with d(T[a,b], T[a',b']) <= k, or -1.
std::ptrdiff_t brute_p(const Text& t, std::size_t a, std::size_t b, std::size_t a2, Cost k, const PenaltyMatrix& p) {
  std::ptrdiff_t best = -1;
  for (auto b2 = static_cast<std::ptrdiff_t>(a2) - 1; b2 < static_cast<std::ptrdiff_t>(t.size()); ++b2) {
    if (edit_distance(t.factor(a, static_cast<std::ptrdiff_t>(b)), t.factor(a2, b2), p) <= k) best = b2;
  }
  return best;
}

}  // namespace

TEST(PLevTable, Examples) {
  Text t = text("abc");
  auto p1 = p_lev_table(t, 1);
  EXPECT_EQ(p1(0, 1, 1), 1);
  auto q = p_lev_table(text("aab"), 1);
  EXPECT_EQ(q(0, 1, 2), -1);
  auto p0 = p_lev_table(text("abcab"), 0);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a; b < 5; ++b) EXPECT_EQ(p0(a, b, a), static_cast<std::ptrdiff_t>(b));
  }
  EXPECT_THROW(p_lev_table(text("a?"), 1), std::invalid_argument);
}

TEST(PLevTable, MatchesFullDp) {
  std::mt19937_64 rng(40);
  auto unit = PenaltyMatrix::unit(3);
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 12);
    Text t = aqp::testing::random_text(rng, n, aqp::testing::uniform(rng, 1, 3));
    Text t3(t.symbols(), 3);
    std::size_t k = aqp::testing::uniform(rng, 0, 3);
    auto table = p_lev_table(t, k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t a2 = 0; a2 < n; ++a2) {
          ASSERT_EQ(table(a, b, a2), brute_p(t3, a, b, a2, static_cast<Cost>(k), unit)) << a << " " << b << " " << a2;
        }
      }
    }
  }
}

TEST(Pareto, Examples) {
  std::vector<Cost> row{3, 2, 2, 4};
  EXPECT_EQ(pareto_list_build(row, 0), (ParetoList{{2, 2}, {4, 3}}));
  std::vector<Cost> down{5, 4, 3, 1};
  EXPECT_EQ(pareto_list_build(down, 0), (ParetoList{{1, 3}}));
  std::vector<Cost> up{1, 2, 3};
  EXPECT_EQ(pareto_list_build(up, -1).size(), 3u);
  auto list = pareto_list_build(row, 0);
  EXPECT_FALSE(pareto_predecessor(list, 1));
  EXPECT_EQ(pareto_predecessor(list, 3)->end, 2);
  EXPECT_EQ(pareto_predecessor(list, 9)->end, 3);
  EXPECT_FALSE(pareto_predecessor(ParetoList{}, 9));
}

TEST(Pareto, NoStoredPairIsDominated) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Cost> row(aqp::testing::uniform(rng, 0, 12));
    for (auto& v : row) v = static_cast<Cost>(aqp::testing::uniform(rng, 0, 6));
    auto list = pareto_list_build(row, 0);
    for (std::size_t x = 1; x < list.size(); ++x) {
      EXPECT_LT(list[x - 1].cost, list[x].cost);
      EXPECT_LT(list[x - 1].end, list[x].end);
    }
    for (const auto& e : list) {
      for (std::size_t j = static_cast<std::size_t>(e.end) + 1; j < row.size(); ++j) EXPECT_GT(row[j], e.cost);
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto it = std::find_if(list.begin(), list.end(), [&](const ParetoEntry& e) { return e.end >= static_cast<std::ptrdiff_t>(j); });
      ASSERT_NE(it, list.end());
      EXPECT_LE(it->cost, row[j]);
    }
  }
}

TEST(SpecialPointIndex, BlockSizeAndCells) {
  EXPECT_EQ(SpecialPointIndex::default_block_size(0), 1u);
  EXPECT_EQ(SpecialPointIndex::default_block_size(2), 1u);
  EXPECT_EQ(SpecialPointIndex::default_block_size(64), 3u);
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 10);
    Text t = aqp::testing::random_text(rng, n, 3, 0.1);
    auto p = aqp::testing::random_metric(rng, 3);
    SpecialPointIndex idx(t, p, 1 + rep % 4);
    const std::size_t m = idx.block_size();
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t a2 = 0; a2 <= n; ++a2) {
        for (std::size_t r = 0; r < m && a + r <= n; ++r) {
          for (std::size_t c = 0; c < m && a2 + c <= n; ++c) {
            auto b = static_cast<std::ptrdiff_t>(a + r) - 1, b2 = static_cast<std::ptrdiff_t>(a2 + c) - 1;
            EXPECT_EQ(idx.block(a, a2, b, b2), edit_distance(t.factor(a, b), t.factor(a2, b2), p));
          }
        }
      }
    }
    std::size_t pairs = 0;
    for (std::size_t c = 0; c <= n; ++c) {
      for (std::size_t c2 = 0; c2 <= n; ++c2) pairs += idx.is_special(c) || idx.is_special(c2);
    }
    EXPECT_EQ(idx.stored_pairs(), pairs);
  }
}

TEST(SpecialPointIndex, ListsHoldParetoRows) {
  Text t = text("abcab");
  auto unit = PenaltyMatrix::unit(3);
  SpecialPointIndex idx(t, unit, 2);
  EXPECT_THROW(idx.list(1, 1, 2), std::logic_error);
  DTable d(t, 2, 1, unit);
  EXPECT_EQ(idx.list(2, 1, 3), pareto_list_build(d.row(3), 0));
  EXPECT_TRUE(idx.list(2, 1, 0).empty());
  // c' = n: only deletions of T[c..b] remain, ending at b' = n - 1.
  EXPECT_EQ(idx.list(2, 5, 3), (ParetoList{{2, 4}}));
}

TEST(PEdEntry, UnitCostsMatchLevenshteinTable) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 12; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 12);
    Text t = aqp::testing::random_text(rng, n, 2);
    std::size_t k = aqp::testing::uniform(rng, 0, 3);
    SpecialPointIndex idx(t, PenaltyMatrix::unit(2), 1 + rep % 4);
    auto lev = p_lev_table(t, k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t a2 = 0; a2 < n; ++a2) ASSERT_EQ(p_ed_entry(idx, a, b, a2, static_cast<Cost>(k)), lev(a, b, a2));
      }
    }
  }
}

TEST(PEdEntry, RandomMetricsMatchBruteScan) {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 12; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 10);
    Text t = aqp::testing::random_text(rng, n, 3, rep % 3 ? 0.0 : 0.15);
    auto p = aqp::testing::random_metric(rng, 3);
    SpecialPointIndex idx(t, p, 1 + rep % 4);
    Cost k = static_cast<Cost>(aqp::testing::uniform(rng, 0, static_cast<std::size_t>(2 * p.max_operation_cost())));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t a2 = 0; a2 < n; ++a2) {
          auto got = p_ed_entry(t, p, idx, a, b, a2, k);
          ASSERT_EQ(got, brute_p(t, a, b, a2, k, p)) << a << " " << b << " " << a2 << " k=" << k;
        }
      }
    }
  }
}

TEST(PEdEntry, IndexMismatchAndIdentity) {
  Text t = text("abcab");
  auto unit = PenaltyMatrix::unit(3);
  SpecialPointIndex idx(t, unit);
  EXPECT_THROW(p_ed_entry(text("abcac"), unit, idx, 0, 0, 0, 0), std::invalid_argument);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a; b < 5; ++b) EXPECT_EQ(p_ed_entry(idx, a, b, a, 0), static_cast<std::ptrdiff_t>(b));
  }
}

TEST(FactorCoverage, EditExamples) {
  Text t = text("abab");
  EXPECT_EQ(factor_coverage(t, Metric::levenshtein, 1)(0, 1), 4u);
  auto unit = PenaltyMatrix::unit(2);
  EXPECT_EQ(factor_coverage(t, Metric::edit, 1, &unit)(0, 1), 4u);
  EXPECT_EQ(factor_coverage(t, Metric::levenshtein, 2)(0, 3), 4u);
  EXPECT_THROW(factor_coverage(t, Metric::edit, 1), std::invalid_argument);
  EXPECT_THROW(factor_coverage(t, Metric::hamming, -1), std::invalid_argument);
}

TEST(FactorCoverage, AllMetricsMatchOracle) {
  std::mt19937_64 rng(45);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 9);
    Text t = aqp::testing::random_text(rng, n, 2, rep % 4 ? 0.0 : 0.2);
    auto p = aqp::testing::random_metric(rng, 2);
    Cost k = static_cast<Cost>(aqp::testing::uniform(rng, 0, 3));
    auto lev = factor_coverage(t, Metric::levenshtein, k, nullptr, 2);
    auto unit = PenaltyMatrix::unit(2);
    auto unit_ed = factor_coverage(t, Metric::edit, k, &unit);
    auto ed = factor_coverage(t, Metric::edit, k, &p);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        Text s = t.factor(a, static_cast<std::ptrdiff_t>(b));
        EXPECT_EQ(lev(a, b), oracle::brute_coverage(s, t, Metric::levenshtein, k));
        EXPECT_EQ(unit_ed(a, b), lev(a, b));
        EXPECT_EQ(ed(a, b), oracle::brute_coverage(s, t, Metric::edit, k, &p));
      }
    }
    if (!t.has_wildcard()) {
      EXPECT_EQ(factor_coverage(t, Metric::edit, 0, &p)(0, 0), factor_coverage(t, Metric::hamming, 0)(0, 0));
    }
  }
}
