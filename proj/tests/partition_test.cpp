#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "crankparity/crank_series.hpp"
#include "crankparity/distinct.hpp"
#include "crankparity/partition.hpp"

using namespace crankparity;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

// p(n) and the distinct-part count by dynamic programming over part sizes
std::vector<std::int64_t> counts(int n, bool distinct) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    if (distinct) {
      for (int m = n; m >= k; --m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
    } else {
      for (int m = k; m <= n; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
    }
  }
  return c;
}

}  // namespace

TEST(Crank, Examples) {
  EXPECT_EQ(crank(P({4})), 4);
  EXPECT_EQ(crank(P({2, 1, 1})), -2);
  EXPECT_EQ(crank(P({3, 2, 1})), 1);
  EXPECT_EQ(crank(P({1})), -1);
  EXPECT_EQ(crank(P({1, 1, 1, 1})), -4);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(P({1})), 0);
  EXPECT_EQ(rank(P({5, 1})), 3);
  EXPECT_EQ(rank(P({3, 3, 3})), 0);
}

TEST(Statistics, EmptyPartitionIsUndefined) {
  for (auto f : {+[](const Partition& p) { return crank(p); }, +[](const Partition& p) { return rank(p); },
                 +[](const Partition& p) { return weight_omega(p); }}) {
    try {
      f(Partition{});
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::undefined_statistic);
    }
  }
}

TEST(DistinctCrank, SixExample) {
  EXPECT_EQ(distinct_crank(P({6})), 6);
  EXPECT_EQ(distinct_crank(P({5, 1})), 0);
  EXPECT_EQ(distinct_crank(P({4, 2})), 4);
  EXPECT_EQ(distinct_crank(P({3, 2, 1})), 1);
  try {
    distinct_crank(P({2, 2}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_distinct);
  }
}

TEST(Enumeration, SmallCases) {
  EXPECT_EQ(count_partitions(4, false), 5);
  std::vector<Partition> six;
  for_each_partition(6, true, [&](const Partition& p) { six.push_back(p); });
  const std::vector<Partition> expected = {P({6}), P({5, 1}), P({4, 2}), P({3, 2, 1})};
  EXPECT_EQ(six, expected);
  std::vector<Partition> zero;
  for_each_partition(0, false, [&](const Partition& p) { zero.push_back(p); });
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  EXPECT_THROW(PartitionStream(-1, false), Error);
}

TEST(Enumeration, CountsMatchIndependentRecurrence) {
  const auto all = counts(45, false);
  const auto dist = counts(60, true);
  for (int n = 0; n <= 45; ++n) EXPECT_EQ(count_partitions(n, false), all[static_cast<std::size_t>(n)]) << n;
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(count_partitions(n, true), dist[static_cast<std::size_t>(n)]) << n;
}

TEST(Enumeration, EachPartitionOnceAndWellFormed) {
  for (bool distinct : {false, true}) {
    std::set<std::vector<int>> seen;
    for_each_partition(18, distinct, [&](const Partition& p) {
      EXPECT_EQ(p.total(), 18);
      for (std::size_t i = 1; i < p.parts.size(); ++i) {
        if (distinct)
          EXPECT_GT(p.parts[i - 1], p.parts[i]);
        else
          EXPECT_GE(p.parts[i - 1], p.parts[i]);
      }
      EXPECT_GE(p.parts.back(), 1);
      EXPECT_TRUE(seen.insert(p.parts).second);
    });
  }
}

TEST(Enumeration, MatchesPartitionFunctionSeries) {
  const int T = 61;
  const Series p = series_div(Series::one(T), euler_factor(1, 1, T));
  for (int n : {10, 30, 50, 60}) EXPECT_EQ(p.coeff(n), count_partitions(n, false)) << n;
}

TEST(Weights, ExamplesForFour) {
  EXPECT_EQ(weight_omega(P({3, 1})), -3);
  EXPECT_EQ(weight_omega(P({2, 1, 1})), 5);
  EXPECT_EQ(weight_omega(P({2, 2})), 1);
  EXPECT_EQ(weighted_count(4), 5);
}

TEST(Weights, OmegaOneExamples) {
  EXPECT_EQ(weight_omega1(P({4})), 1);
  EXPECT_EQ(weight_omega1(P({2, 1, 1})), 5);
  EXPECT_EQ(weight_omega1(P({1})), -3);
  EXPECT_EQ(initial_run_length(P({7, 7, 5, 3, 3, 3, 3, 2, 1, 1})), 3);
  EXPECT_EQ(initial_run_length(P({6, 6, 5, 2, 2, 2, 2})), 0);
}

TEST(Weights, OmegaEqualsOmegaOneExhaustively) {
  for (int n = 1; n <= 25; ++n)
    for_each_partition(n, false, [&](const Partition& p) { ASSERT_EQ(weight_omega(p), weight_omega1(p)); });
}

TEST(Oracles, CrankParity) {
  EXPECT_EQ(crank_parity_oracle(4), 5);
  EXPECT_EQ(crank_parity_oracle(2), 2);
  EXPECT_EQ(crank_parity_oracle(1), -1);
  EXPECT_THROW(crank_parity_oracle(0), Error);
  const ParityCount c = parity_count(6, true, Statistic::distinct_crank);
  EXPECT_EQ(c.even, 3);
  EXPECT_EQ(c.odd, 1);
  EXPECT_EQ(c.total(), 4);
}

TEST(Oracles, RankParityMatchesMockTheta) {
  const Series f = f_series(61);
  EXPECT_EQ(f.coeff(0), 1);
  EXPECT_EQ(f.coeff(1), 1);
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(f.coeff(n), rank_parity_oracle(n)) << n;
}

TEST(Oracles, DistinctParitiesMatchSeries) {
  const Series dc = distinct_crank_series(61);
  const Series dr = distinct_rank_series(61);
  for (int n = 1; n <= 60; ++n) {
    EXPECT_EQ(dc.coeff(n), distinct_crank_parity_oracle(n)) << n;
    EXPECT_EQ(dr.coeff(n), distinct_rank_parity_oracle(n)) << n;
  }
}
