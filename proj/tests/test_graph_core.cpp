#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/families.hpp"
#include "walkspec/graph.hpp"
#include "walkspec/graph_io.hpp"

using namespace walkspec;

TEST(Graph, BuildsPathWithDegrees) {
  const Graph g = Graph::from_edges(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.degrees(), (std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(Graph, CollapsesDuplicateEdges) {
  const Graph g = Graph::from_edges(2, {{1, 2}, {2, 1}});
  EXPECT_EQ(g.size(), 1);
}

TEST(Graph, RejectsSelfLoopAndBadIds) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 4}}), GraphError);
  EXPECT_THROW(Graph::from_edges(0, {}), GraphError);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(1 + i % 9, 0.4, rng);
    int sum = 0;
    for (int d : g.degrees()) sum += d;
    EXPECT_EQ(sum, 2 * g.size());
    for (int u = 1; u <= g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (int v = 1; v <= g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Graph, ComponentsAndUnion) {
  const Graph g = disjoint_union(cycle_graph(4), complete_graph(1));
  EXPECT_EQ(g.order(), 5);
  EXPECT_FALSE(g.connected());
  EXPECT_TRUE(g.has_isolated_vertex());
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(comps[1], (std::vector<int>{5}));
}

TEST(Families, CompleteMultipartite) {
  const Graph p3 = complete_multipartite({1, 2});
  EXPECT_EQ(p3.size(), 2);
  const Graph k221 = complete_multipartite({2, 2, 1});
  EXPECT_EQ(k221.size(), 8);
  std::vector<int> d = k221.degrees();
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<int>{3, 3, 3, 3, 4}));
  EXPECT_EQ(complete_multipartite({4, 4, 1}).size(), 24);
  EXPECT_THROW(complete_multipartite(std::span<const int>()), Error);
  EXPECT_THROW(complete_multipartite({2, 0}), Error);
}

TEST(Families, NamedGraphs) {
  EXPECT_EQ(petersen_graph().size(), 15);
  for (int d : petersen_graph().degrees()) EXPECT_EQ(d, 3);
  EXPECT_EQ(oracle::clique_number(petersen_graph()), 2);
  EXPECT_EQ(paw_graph().size(), 4);
  EXPECT_EQ(star_graph(3).size(), 3);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(path_graph(4).size(), 3);
  EXPECT_EQ(complete_graph(5).size(), 10);
  EXPECT_EQ(empty_graph(3).size(), 0);
}

TEST(Families, ParseSpec) {
  EXPECT_EQ(GraphFamily::parse("kmp:2,2,1").build(), complete_multipartite({2, 2, 1}));
  EXPECT_EQ(GraphFamily::parse("C:5").build(), cycle_graph(5));
  EXPECT_EQ(GraphFamily::parse("petersen").build(), petersen_graph());
  EXPECT_THROW(GraphFamily::parse("nonsense"), Error);
  EXPECT_THROW(GraphFamily::parse("C:x"), Error);
}

TEST(EdgeList, ParsesHeaderAndComments) {
  const Graph g = parse_edgelist("n 3\n# path\n1 2\n\n2 3\n");
  EXPECT_EQ(g, path_graph(3));
  EXPECT_EQ(parse_edgelist("1 2\n2 3").order(), 3);
  EXPECT_EQ(parse_edgelist("n 5\n1 2").order(), 5);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edgelist("1 x"), ParseError);
  EXPECT_THROW(parse_edgelist("1 2 3"), ParseError);
  EXPECT_THROW(parse_edgelist("n 2\n1 3"), Error);
  EXPECT_THROW(parse_edgelist("1 2\nn 3"), ParseError);
  EXPECT_THROW(parse_edgelist("2 2"), Error);
  EXPECT_THROW(parse_edgelist(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = petersen_graph();
  EXPECT_EQ(parse_edgelist(emit_edgelist(g)), g);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(emit_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(emit_graph6(complete_graph(1)), "@");
  EXPECT_EQ(emit_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), complete_graph(2));
}

TEST(Graph6, RejectsBadInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);
  EXPECT_THROW(parse_graph6("A\x20"), ParseError);
  EXPECT_THROW(parse_graph6("A_?"), ParseError);
  EXPECT_THROW(parse_graph6("A`"), ParseError);  // nonzero padding bit
}

TEST(Graph6, RoundTripOnCorpus) {
  for (const Graph& g : enumerate_corpus(6, false)) {
    const std::string line = emit_graph6(g);
    EXPECT_EQ(parse_graph6(line), g) << line;
    EXPECT_EQ(emit_graph6(parse_graph6(line)), line);
  }
  EXPECT_EQ(parse_graph6(emit_graph6(cycle_graph(4))), cycle_graph(4));
}

TEST(Graph6, LargeOrderUsesLongForm) {
  const Graph g = cycle_graph(70);
  const std::string line = emit_graph6(g);
  EXPECT_EQ(line[0], '~');
  EXPECT_EQ(parse_graph6(line), g);
}

TEST(Graph6, StreamReportsLineNumbers) {
  std::istringstream in("A_\n\nBw\nzz\n");
  try {
    parse_graph6_stream(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Enumerate, KnownCounts) {
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  const int all[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(n, true).size(), static_cast<std::size_t>(connected[n - 1])) << n;
    EXPECT_EQ(enumerate_graphs(n, false).size(), static_cast<std::size_t>(all[n - 1])) << n;
  }
  EXPECT_THROW(enumerate_graphs(0, true), Error);
  EXPECT_THROW(enumerate_graphs(9, true), Error);
}

TEST(Enumerate, SmallCasesByHand) {
  const auto three = enumerate_graphs(3, true);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(oracle::permutation_code(three[0]), oracle::permutation_code(path_graph(3)));
  EXPECT_EQ(oracle::permutation_code(three[1]), oracle::permutation_code(complete_graph(3)));
}

TEST(Enumerate, NoDuplicatesAndFullCoverageUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : enumerate_graphs(n, false)) {
      EXPECT_TRUE(codes.insert(oracle::permutation_code(g)).second) << emit_graph6(g);
    }
    // Every labeled graph on n vertices lands in exactly one class.
    const int pairs = n * (n - 1) / 2;
    if (pairs <= 15 && n <= 5) {
      std::set<std::uint64_t> seen;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int j = 2; j <= n; ++j)
          for (int i = 1; i < j; ++i, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
        seen.insert(oracle::permutation_code(Graph::from_edges(n, edges)));
      }
      EXPECT_EQ(seen, codes) << n;
    }
  }
}

TEST(Enumerate, RandomGraphsMatchOneRepresentative) {
  std::mt19937_64 rng(11);
  std::map<int, std::map<std::uint64_t, int>> index;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) ++index[n][oracle::permutation_code(g)];
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + i % 6, 0.5, rng);
    EXPECT_EQ(index[g.order()][oracle::permutation_code(g)], 1);
  }
}

TEST(Enumerate, CanonicalFormIsLabelInvariant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(2 + i % 7, 0.45, rng);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g).code, canonical_form(g.relabeled(perm)).code);
  }
}

TEST(Enumerate, DeterministicOrder) {
  const auto a = enumerate_graphs(6, true);
  const auto b = enumerate_graphs(6, true);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].size(), a[i].size());
}
