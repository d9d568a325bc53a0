#include <gtest/gtest.h>

#include "oracles.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/families.hpp"
#include "walkspec/walks.hpp"

using namespace walkspec;

namespace {

std::vector<long> totals(const Graph& g, int horizon) {
  const WalkTable w(g, horizon);
  std::vector<long> out;
  for (int k = 1; k <= horizon; ++k) out.push_back(w.total(k).get_si());
  return out;
}

}  // namespace

TEST(WalkTable, KnownTotals) {
  EXPECT_EQ(totals(path_graph(3), 5), (std::vector<long>{3, 4, 6, 8, 12}));
  EXPECT_EQ(totals(cycle_graph(4), 4), (std::vector<long>{4, 8, 16, 32}));
  EXPECT_EQ(WalkTable(complete_multipartite({2, 3}), 4).total(4), 72);
  EXPECT_EQ(totals(empty_graph(3), 3), (std::vector<long>{3, 0, 0}));
}

TEST(WalkTable, RecurrenceAndExtension) {
  const Graph g = petersen_graph();
  WalkTable w(g, 2);
  w.extend(7);
  EXPECT_EQ(w.horizon(), 7);
  for (int k = 1; k < 7; ++k) {
    BigInt sum = 0;
    for (int u = 1; u <= g.order(); ++u) {
      BigInt next = 0;
      for (int v : g.neighbors(u)) next += w.at(k, v);
      EXPECT_EQ(w.at(k + 1, u), next);
      sum += w.at(k, u);
    }
    EXPECT_EQ(w.total(k), sum);
  }
  EXPECT_THROW(w.at(8, 1), Error);
  EXPECT_THROW(WalkTable(g, 0), Error);
}

TEST(WalkTable, SecondAndThirdTotals) {
  for (const Graph& g : enumerate_corpus(6, false)) {
    const WalkTable w(g, 3);
    long d2 = 0;
    for (int d : g.degrees()) d2 += static_cast<long>(d) * d;
    EXPECT_EQ(w.total(2), 2 * g.size());
    EXPECT_EQ(w.total(3), d2);
  }
}

TEST(WalkTable, MatchesSequenceEnumeration) {
  for (const Graph& g : enumerate_corpus(5, true)) {
    const WalkTable w(g, 6);
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(w.total(k), oracle::walks_total_naive(g, k));
      const auto per = oracle::walks_from(g, k);
      for (int u = 1; u <= g.order(); ++u) EXPECT_EQ(w.at(k, u), per[u - 1]);
    }
  }
}

TEST(WalkTable, LargeCountsStayExact) {
  const Graph g = complete_graph(8);
  const WalkTable w(g, 40);
  BigInt expected = 8;
  for (int k = 1; k < 40; ++k) expected *= 7;
  EXPECT_EQ(w.total(40), expected);
}

TEST(PairCounts, SmallCases) {
  const Graph p3 = path_graph(3);
  const IntMatrix one = walk_pair_counts(p3, 1);
  const IntMatrix two = walk_pair_counts(p3, 2);
  const IntMatrix three = walk_pair_counts(p3, 3);
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) {
      EXPECT_EQ(one(u, v), u == v ? 1 : 0);
      EXPECT_EQ(two(u, v), p3.adjacent(u, v) ? 1 : 0);
    }
  EXPECT_EQ(three(1, 1), 1);
  EXPECT_EQ(three(2, 2), 2);
  EXPECT_EQ(three(3, 3), 1);
  EXPECT_EQ(three(1, 3), 1);
  EXPECT_THROW(walk_pair_counts(p3, 0), Error);
}

TEST(PairCounts, AgreeWithMatrixPowersAndRows) {
  for (const Graph& g : enumerate_corpus(5, false)) {
    const WalkTable w(g, 5);
    for (int r = 1; r <= 5; ++r) {
      const IntMatrix m = walk_pair_counts(g, r);
      const auto ref = oracle::power(g, r - 1);
      for (int u = 1; u <= g.order(); ++u) {
        EXPECT_EQ(m.row_sum(u), w.at(r, u));
        for (int v = 1; v <= g.order(); ++v) {
          EXPECT_EQ(m(u, v), ref[u - 1][v - 1]);
          EXPECT_EQ(m(u, v), m(v, u));
        }
      }
      EXPECT_EQ(m.total(), w.total(r));
    }
  }
}

TEST(ClosedWalks, KnownValues) {
  EXPECT_EQ(closed_walks(complete_graph(3), 3), 6);
  for (const Graph& g : enumerate_corpus(5, false)) {
    EXPECT_EQ(closed_walks(g, 1), 0);
    EXPECT_EQ(closed_walks(g, 2), 2 * g.size());
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(closed_walks(g, k), walk_pair_counts(g, k + 1).trace());
  }
}

TEST(Identities, WorkedExamples) {
  const auto c4 = check_walk_identities(cycle_graph(4), 2, 2, 2);
  bool seen = false;
  for (const auto& c : c4.checks) {
    if (c.name == "edge_degree_products") {
      EXPECT_EQ(c.lhs, 32);
      EXPECT_EQ(c.rhs, 32);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  for (const auto& c : check_walk_identities(path_graph(3), 2, 2, 2).checks) {
    if (c.name == "sum_squares" && c.p == 2) EXPECT_EQ(c.lhs, 6);
  }
  for (const auto& c : check_walk_identities(petersen_graph(), 1, 1, 1).checks) {
    if (c.name == "sum_products" && c.p == 1 && c.q == 1) EXPECT_EQ(c.lhs, 10);
  }
}

TEST(Identities, HoldOnCorpus) {
  for (const Graph& g : enumerate_corpus(6, false)) {
    const auto rep = check_walk_identities(g, 4, 4, 4);
    EXPECT_TRUE(rep.all_equal()) << rep.failures() << " failures";
    EXPECT_FALSE(rep.checks.empty());
  }
}
