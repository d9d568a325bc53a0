#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "walkspec/bounds.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/families.hpp"

using namespace walkspec;

namespace {

BoundReport walk_ratio(const Graph& g, int q, int r) {
  BoundContext ctx(g);
  return lower_walk_ratio(ctx, q, r);
}

}  // namespace

TEST(WalkRatio, WorkedExamples) {
  const BoundReport p3 = walk_ratio(path_graph(3), 1, 2);
  EXPECT_EQ(*p3.exact, Rational(2));
  EXPECT_EQ(p3.verdict, Verdict::equality);
  EXPECT_EQ(p3.label, "Hofmeister");
  const BoundReport k23 = walk_ratio(complete_multipartite({2, 3}), 3, 2);
  EXPECT_LE(to_double_nearest(*k23.exact), 6.0);
  EXPECT_NE(k23.verdict, Verdict::violated);
  const BoundReport c4 = walk_ratio(cycle_graph(4), 1, 1);
  EXPECT_EQ(*c4.exact, Rational(2));
  EXPECT_EQ(c4.verdict, Verdict::equality);
}

TEST(WalkRatio, Inapplicable) {
  EXPECT_EQ(walk_ratio(path_graph(3), 2, 1).verdict, Verdict::inapplicable);
  EXPECT_EQ(walk_ratio(empty_graph(3), 1, 1).verdict, Verdict::inapplicable);
  EXPECT_EQ(walk_ratio(complete_graph(1), 3, 1).verdict, Verdict::inapplicable);
  BoundContext ctx(path_graph(3));
  EXPECT_THROW(lower_walk_ratio(ctx, 0, 1), Error);
  EXPECT_THROW(lower_walk_ratio(ctx, 1, 0), Error);
}

TEST(WalkRatio, DisconnectedWithIsolatedVertexIsStrict) {
  const BoundReport rep = walk_ratio(disjoint_union(cycle_graph(4), complete_graph(1)), 1, 1);
  EXPECT_EQ(*rep.exact, Rational(8, 5));
  EXPECT_EQ(rep.verdict, Verdict::holds);
}

TEST(CliqueWalk, WorkedExamples) {
  BoundContext k3(complete_graph(3));
  const BoundReport a = upper_clique_walk(k3, 1);
  EXPECT_EQ(*a.exact, Rational(2));
  EXPECT_EQ(a.verdict, Verdict::equality);
  BoundContext p3(path_graph(3));
  EXPECT_EQ(upper_clique_walk(p3, 2).verdict, Verdict::equality);
  BoundContext pet(petersen_graph());
  const BoundReport c = upper_clique_walk(pet, 1);
  EXPECT_EQ(*c.exact, Rational(5));
  EXPECT_EQ(c.verdict, Verdict::holds);
  BoundContext edgeless(empty_graph(3));
  EXPECT_EQ(*upper_clique_walk(edgeless, 1).exact, Rational(0));
  EXPECT_NE(upper_clique_walk(edgeless, 1).verdict, Verdict::violated);
}

TEST(Lemma, WorkedExamples) {
  BoundContext k3(complete_graph(3));
  EXPECT_EQ(lemma_w2r_check(k3, 1).verdict, Verdict::equality);
  BoundContext p3(path_graph(3));
  EXPECT_EQ(lemma_w2r_check(p3, 2).verdict, Verdict::equality);
  BoundContext pet(petersen_graph());
  const BoundReport rep = lemma_w2r_check(pet, 1);
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_EQ(*rep.compared, Rational(60));  // omega * w_2
  EXPECT_EQ(*rep.exact, Rational(100));    // (omega - 1) * w_1^2
  for (int k = 1; k <= 3; ++k) EXPECT_NE(lemma_w2r_iterated(pet, 1, k).verdict, Verdict::violated);
}

TEST(Fms, WorkedExamples) {
  BoundContext c4(cycle_graph(4));
  EXPECT_EQ(*lower_fms1(c4, 2, 1).exact, Rational(2));
  EXPECT_EQ(lower_fms1(c4, 2, 1).verdict, Verdict::equality);
  EXPECT_EQ(*lower_fms2(c4, 2, 1).exact, Rational(2));
  BoundContext p3(path_graph(3));
  EXPECT_NEAR(*lower_fms1(p3, 2, 1).value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(lower_fms1(p3, 2, 1).verdict, Verdict::equality);
  EXPECT_NEAR(*lower_fms2(p3, 2, 1).value, std::sqrt(2.0), 1e-12);
  BoundContext star(star_graph(3));
  EXPECT_NEAR(*lower_fms2(star, 2, 1).value, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(lower_fms2(star, 2, 1).verdict, Verdict::equality);
  BoundContext edgeless(empty_graph(2));
  EXPECT_EQ(lower_fms1(edgeless, 2, 1).verdict, Verdict::inapplicable);
}

TEST(Fms, ReducesToWalkRatioAtPOne) {
  for (const Graph& g : enumerate_corpus(6, true)) {
    if (g.size() == 0) continue;
    BoundContext ctx(g);
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(*lower_fms1(ctx, 1, r).exact, *lower_walk_ratio(ctx, 1, r).exact);
  }
}

TEST(Fms, RayleighVectorGivesWalkRatio) {
  // x_i = w_p(i) / sqrt(w_{2p-1}) has unit norm; x^T A^r x = w_{2p+r-1}/w_{2p-1}.
  for (const Graph& g : enumerate_corpus(6, true)) {
    if (g.size() == 0) continue;
    BoundContext ctx(g);
    for (int p = 1; p <= 3; ++p) {
      const WalkTable& w = ctx.walks(2 * p + 3);
      const auto ar = oracle::power(g, 2);
      double quad = 0.0;
      for (int u = 1; u <= g.order(); ++u)
        for (int v = 1; v <= g.order(); ++v) quad += ar[u - 1][v - 1] * w.at(p, u).get_d() * w.at(p, v).get_d();
      quad /= w.total(2 * p - 1).get_d();
      const double ratio = to_double_nearest(*lower_walk_ratio(ctx, 2 * p - 1, 2).exact);
      EXPECT_NEAR(quad, ratio, 1e-9 * std::max(1.0, ratio));
    }
  }
}

TEST(RowRatio, WorkedExamples) {
  BoundContext p3(path_graph(3));
  const BoundReport lin0 = upper_row_ratio(p3, 1, 2);
  EXPECT_EQ(*lin0.exact, Rational(2));
  EXPECT_EQ(lin0.verdict, Verdict::equality);
  const BoundReport lin1 = upper_row_ratio(p3, 2, 1);
  EXPECT_EQ(*lin1.exact, Rational(2));
  EXPECT_EQ(lin1.verdict, Verdict::holds);
  BoundContext pet(petersen_graph());
  for (int p = 1; p <= 3; ++p)
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(*upper_row_ratio(pet, p, r).exact, Rational(static_cast<long>(std::pow(3, r))));
  BoundContext iso(disjoint_union(cycle_graph(4), complete_graph(1)));
  EXPECT_EQ(upper_row_ratio(iso, 2, 1).verdict, Verdict::inapplicable);
  EXPECT_NE(upper_row_ratio(iso, 1, 1).verdict, Verdict::inapplicable);
}

TEST(EdgeBounds, WorkedExamples) {
  BoundContext p3(path_graph(3));
  auto a = upper_edge_bounds(p3);
  EXPECT_NEAR(*a[0].value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(a[0].verdict, Verdict::equality);
  BoundContext k23(complete_multipartite({2, 3}));
  auto b = upper_edge_bounds(k23);
  EXPECT_NEAR(*b[0].value, std::sqrt(6.0), 1e-12);
  EXPECT_EQ(b[0].verdict, Verdict::equality);
  BoundContext k4e(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  auto c = upper_edge_bounds(k4e);
  EXPECT_EQ(*c[0].exact, Rational(3));
  EXPECT_EQ(c[0].verdict, Verdict::holds);
  BoundContext edgeless(empty_graph(3));
  EXPECT_EQ(upper_edge_bounds(edgeless)[0].verdict, Verdict::inapplicable);
}

TEST(Catalog, RegularGraphIsAllEqualOrHolds) {
  BoundContext ctx(cycle_graph(4));
  const Catalog cat = evaluate_all(ctx, {1, 3}, {1, 2}, {1, 2});
  EXPECT_EQ(cat.count(Verdict::violated), 0u);
  for (const auto& rep : cat.reports) {
    EXPECT_TRUE(rep.verdict == Verdict::equality || rep.verdict == Verdict::holds) << to_string(rep.id);
  }
  for (const auto& s : cat.sandwiches) EXPECT_TRUE(s.consistent);
}

TEST(Catalog, CompleteBipartiteSweep) {
  BoundContext ctx(complete_multipartite({2, 3}));
  const Catalog cat = evaluate_all(ctx, {1, 3, 5}, {1, 2, 3, 4}, {1, 2, 3});
  for (const auto& rep : cat.reports) {
    if (rep.verdict == Verdict::inapplicable || rep.side == Side::internal) continue;
    const double mu_r = std::pow(6.0, rep.r / 2.0);
    if (rep.side == Side::lower) EXPECT_LE(*rep.value, mu_r * (1 + 1e-9));
    if (rep.side == Side::upper) EXPECT_GE(*rep.value, mu_r * (1 - 1e-9));
  }
}

TEST(Catalog, EdgelessGraph) {
  BoundContext ctx(empty_graph(3));
  const Catalog cat = evaluate_all(ctx, {1, 3}, {1, 2}, {1});
  for (const auto& rep : cat.reports) {
    if (rep.id == BoundId::walk_ratio_lower) EXPECT_EQ(rep.verdict, Verdict::inapplicable);
    if (rep.id == BoundId::clique_walk_upper) EXPECT_EQ(*rep.exact, Rational(0));
  }
  EXPECT_EQ(cat.count(Verdict::violated), 0u);
  EXPECT_THROW(evaluate_all(ctx, {}, {1}, {1}), Error);
}

TEST(Catalog, BitIdenticalReruns) {
  const Graph g = paw_graph();
  BoundContext a(g), b(g);
  const Catalog x = evaluate_all(a, {1, 3}, {1, 2, 3}, {1, 2});
  const Catalog y = evaluate_all(b, {1, 3}, {1, 2, 3}, {1, 2});
  ASSERT_EQ(x.reports.size(), y.reports.size());
  for (std::size_t i = 0; i < x.reports.size(); ++i) {
    EXPECT_EQ(x.reports[i].exact, y.reports[i].exact);
    EXPECT_EQ(x.reports[i].value, y.reports[i].value);
    EXPECT_EQ(x.reports[i].verdict, y.reports[i].verdict);
  }
}

TEST(Classify, WorkedExamples) {
  BoundContext p3(path_graph(3));
  const auto eq = classify_equality(p3, lower_walk_ratio(p3, 1, 2));
  EXPECT_EQ(eq.status, Characterization::consistent);
  BoundContext k4(complete_graph(4));
  EXPECT_EQ(classify_equality(k4, upper_clique_walk(k4, 1)).status, Characterization::consistent);
  BoundContext iso(disjoint_union(cycle_graph(4), complete_graph(1)));
  EXPECT_THROW(classify_equality(iso, lower_walk_ratio(iso, 1, 1)), Error);
}

TEST(Classify, HofNotCharacterizedWithIsolatedVertex) {
  BoundContext ctx(disjoint_union(complete_graph(2), complete_graph(1)));
  const BoundReport hof = lower_fms1(ctx, 2, 1);
  ASSERT_EQ(hof.verdict, Verdict::equality);
  BoundReport named = hof;
  named.id = BoundId::hof1;
  EXPECT_EQ(classify_equality(ctx, named).status, Characterization::not_characterized);
}

TEST(Names, RoundTrip) {
  for (auto id : {BoundId::walk_ratio_lower, BoundId::lin3, BoundId::lemma_w2r, BoundId::hof2})
    EXPECT_EQ(parse_bound_id(to_string(id)), id);
  EXPECT_THROW(parse_bound_id("bogus"), Error);
  EXPECT_EQ(parse_verdict("equality"), Verdict::equality);
  EXPECT_EQ(parse_side("internal"), Side::internal);
}
