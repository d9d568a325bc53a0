#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/families.hpp"
#include "walkspec/regularity.hpp"

using namespace walkspec;

TEST(Profile, FourCycle) {
  const RegularityProfile p = profile(cycle_graph(4));
  EXPECT_TRUE(p.is_regular);
  EXPECT_TRUE(p.is_bipartite);
  EXPECT_TRUE(p.is_semiregular);
  EXPECT_EQ(p.is_pseudo_regular, true);
  EXPECT_EQ(p.is_pseudo_semiregular, true);
  EXPECT_TRUE(p.is_complete_multipartite);
  EXPECT_EQ(p.parts, (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
}

TEST(Profile, Star) {
  const RegularityProfile p = profile(star_graph(3));
  EXPECT_FALSE(p.is_regular);
  EXPECT_TRUE(p.is_semiregular);
  EXPECT_EQ(p.is_pseudo_semiregular, true);
  EXPECT_EQ(p.is_pseudo_regular, false);
}

TEST(Profile, K221AverageDegrees) {
  const Graph g = complete_multipartite({2, 2, 1});
  const RegularityProfile p = profile(g);
  EXPECT_FALSE(p.is_regular);
  EXPECT_FALSE(p.is_bipartite);
  EXPECT_TRUE(p.is_complete_multipartite);
  EXPECT_EQ(p.is_pseudo_regular, false);
  for (int u = 1; u <= 5; ++u) {
    EXPECT_EQ(p.average_degrees[u - 1], g.degree(u) == 4 ? Rational(3) : Rational(10, 3));
  }
  EXPECT_EQ(*p.min_average_degree, Rational(3));
  EXPECT_EQ(*p.max_average_degree, Rational(10, 3));
}

TEST(Profile, IsolatedVertexLeavesFlagsUndefined) {
  const RegularityProfile p = profile(disjoint_union(cycle_graph(4), complete_graph(1)));
  EXPECT_FALSE(p.is_pseudo_regular.has_value());
  EXPECT_FALSE(p.is_pseudo_semiregular.has_value());
  EXPECT_TRUE(p.average_degrees.empty());
  EXPECT_EQ(p.components.size(), 2u);
}

TEST(Profile, PathOnFiveIsPseudoSemiregular) {
  // Average degrees 2, 3/2, 2, 3/2, 2 split exactly by the bipartition.
  EXPECT_EQ(is_pseudo_semiregular(path_graph(5)), true);
  EXPECT_EQ(is_pseudo_semiregular(path_graph(4)), false);
}

TEST(Predicates, AgreeWithDirectScansOnCorpus) {
  for (const Graph& g : enumerate_corpus(7, false)) {
    const RegularityProfile p = profile(g);
    const auto d = g.degrees();
    EXPECT_EQ(p.is_regular, std::set<int>(d.begin(), d.end()).size() == 1);
    const auto colour = oracle::two_coloring(g);
    EXPECT_EQ(p.is_bipartite, colour.has_value());
    if (!g.has_isolated_vertex()) {
      bool pseudo = true;
      for (int u = 1; u <= g.order(); ++u)
        for (int v = 1; v <= g.order(); ++v) pseudo = pseudo && oracle::same_average_degree(g, u, v);
      EXPECT_EQ(p.is_pseudo_regular, pseudo);
    }
    if (p.is_regular && p.is_pseudo_regular) EXPECT_TRUE(*p.is_pseudo_regular);
    if (p.is_semiregular && p.is_pseudo_semiregular) EXPECT_TRUE(*p.is_pseudo_semiregular);
    if (g.connected() && colour && g.order() > 1) {
      // Connected: the bipartition is unique, so compare side by side.
      std::set<int> side_degrees[2];
      for (int u = 1; u <= g.order(); ++u) side_degrees[(*colour)[u - 1]].insert(g.degree(u));
      EXPECT_EQ(p.is_semiregular, side_degrees[0].size() == 1 && side_degrees[1].size() == 1);
      bool pss = true;
      for (int u = 1; u <= g.order(); ++u)
        for (int v = 1; v <= g.order(); ++v)
          if ((*colour)[u - 1] == (*colour)[v - 1]) pss = pss && oracle::same_average_degree(g, u, v);
      EXPECT_EQ(p.is_pseudo_semiregular, pss);
    }
    if (p.is_complete_multipartite) {
      std::vector<int> part_of(g.order() + 1, -1);
      for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i]) part_of[v] = static_cast<int>(i);
      for (int u = 1; u <= g.order(); ++u) {
        ASSERT_GE(part_of[u], 0);
        for (int v = u + 1; v <= g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), part_of[u] != part_of[v]);
      }
    }
  }
}

TEST(Components, SplitAndRadii) {
  const auto parts = component_split(disjoint_union(cycle_graph(4), complete_graph(1)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(parts[0].mu.contains(2.0));
  EXPECT_EQ(parts[1].mu.hi, 0.0);
  const auto triangles = component_split(disjoint_union(complete_graph(3), complete_graph(3)));
  ASSERT_EQ(triangles.size(), 2u);
  for (const auto& c : triangles) EXPECT_TRUE(c.mu.contains(2.0));
  EXPECT_EQ(triangles[1].vertices, (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(component_split(petersen_graph()).size(), 1u);
}

TEST(Orthogonality, WorkedExamples) {
  const auto c6 = orthogonality_characterization(cycle_graph(6), eigen_decompose(cycle_graph(6)));
  EXPECT_TRUE(c6.projection_zero);
  EXPECT_TRUE(c6.consistent);
  const auto star = orthogonality_characterization(star_graph(3), eigen_decompose(star_graph(3)));
  EXPECT_TRUE(star.projection_zero);
  EXPECT_TRUE(star.consistent);
  const auto p4 = orthogonality_characterization(path_graph(4), eigen_decompose(path_graph(4)));
  EXPECT_FALSE(p4.projection_zero);
  EXPECT_GT(p4.projection_mass, 1e-3);
  EXPECT_TRUE(p4.consistent);
}

TEST(Orthogonality, ConsistentOnCorpus) {
  for (const Graph& g : enumerate_corpus(7, false)) {
    const auto v = orthogonality_characterization(g, eigen_decompose(g));
    EXPECT_TRUE(v.consistent);
  }
}
