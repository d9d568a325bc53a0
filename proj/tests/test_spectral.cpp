#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/families.hpp"
#include "walkspec/spectral.hpp"
#include "walkspec/walks.hpp"

using namespace walkspec;

TEST(Jacobi, PathOnThree) {
  const Spectrum s = eigen_decompose(path_graph(3));
  const double r2 = std::sqrt(2.0);
  ASSERT_EQ(s.eigenvalues.size(), 3u);
  EXPECT_NEAR(s.eigenvalues[0], r2, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[2], -r2, 1e-12);
  EXPECT_NEAR(s.coefficients[0], 1.5 + r2, 1e-10);
  EXPECT_NEAR(s.coefficients[1], 0.0, 1e-10);
  EXPECT_NEAR(s.coefficients[2], 1.5 - r2, 1e-10);
  // sqrt(2) (c_1 - c_3) = w_2.
  EXPECT_NEAR(r2 * (s.coefficients[0] - s.coefficients[2]), 4.0, 1e-10);
}

TEST(Jacobi, CompleteAndCycle) {
  const Spectrum k5 = eigen_decompose(complete_graph(5));
  EXPECT_NEAR(k5.eigenvalues[0], 4.0, 1e-12);
  for (int i = 1; i < 5; ++i) EXPECT_NEAR(k5.eigenvalues[i], -1.0, 1e-12);
  EXPECT_NEAR(k5.coefficients[0], 5.0, 1e-10);
  const Spectrum c4 = eigen_decompose(cycle_graph(4));
  const double expected[] = {2, 0, 0, -2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(c4.eigenvalues[i], expected[i], 1e-12);
}

TEST(Jacobi, InvariantsOnCorpus) {
  for (const Graph& g : enumerate_corpus(6, false)) {
    const Spectrum s = eigen_decompose(g);
    const int n = g.order();
    double trace = 0.0, csum = 0.0;
    for (int i = 0; i < n; ++i) {
      trace += s.eigenvalues[i];
      csum += s.coefficients[i];
      if (i) EXPECT_GE(s.eigenvalues[i - 1], s.eigenvalues[i]);
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += s.eigenvectors[i][k] * s.eigenvectors[j][k];
        EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-10);
      }
    }
    EXPECT_NEAR(trace, 0.0, 1e-10);
    EXPECT_NEAR(csum, n, 1e-8 * n);
    EXPECT_LE(s.residual, 1e-10);
  }
}

TEST(Jacobi, BipartiteSpectrumIsSymmetric) {
  for (const Graph& g : enumerate_corpus(6, true)) {
    if (!oracle::two_coloring(g)) continue;
    const Spectrum s = eigen_decompose(g);
    const int n = g.order();
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s.eigenvalues[i], -s.eigenvalues[n - 1 - i], 1e-9);
  }
}

TEST(WalkFormula, MatchesExactCounts) {
  EXPECT_LE(spectral_walk_check(complete_multipartite({2, 3}), eigen_decompose(complete_multipartite({2, 3})), 4),
            1e-9);
  for (const Graph& g : enumerate_corpus(6, true)) {
    const Spectrum s = eigen_decompose(g);
    EXPECT_LE(spectral_walk_check(g, s, 8), 1e-8);
    for (int k = 1; k <= 8; ++k) {
      const double exact = closed_walks(g, k).get_d();
      EXPECT_NEAR(spectral_power_sum(s, k), exact, 1e-8 * std::max(1.0, exact));
    }
  }
}

TEST(Certified, RegularAndKnownRadii) {
  const CertifiedInterval k4 = spectral_radius_certified(complete_graph(4));
  EXPECT_TRUE(k4.contains(3.0));
  EXPECT_LE(k4.width(), 1e-12);
  const CertifiedInterval k23 = spectral_radius_certified(complete_multipartite({2, 3}));
  EXPECT_TRUE(k23.contains(std::sqrt(6.0)));
  EXPECT_LE(k23.width(), 1e-11);
  const CertifiedInterval single = spectral_radius_certified(complete_graph(1));
  EXPECT_EQ(single.lo, 0.0);
  EXPECT_EQ(single.hi, 0.0);
  const CertifiedInterval edgeless = spectral_radius_certified(empty_graph(3));
  EXPECT_EQ(edgeless.hi, 0.0);
}

TEST(Certified, BracketsJacobiOnCorpus) {
  for (const Graph& g : enumerate_corpus(7, false)) {
    const CertifiedInterval iv = spectral_radius_certified(g);
    const double mu = eigen_decompose(g).spectral_radius();
    EXPECT_LE(iv.lo, iv.hi);
    EXPECT_LE(iv.lo, mu + 1e-12);
    EXPECT_GE(iv.hi, mu - 1e-12);
    EXPECT_LE(iv.width(), 1e-10 * std::max(1.0, mu));
  }
}

TEST(Certified, PowerRoundsOutward) {
  const CertifiedInterval iv = spectral_radius_certified(complete_multipartite({1, 2}));
  const CertifiedInterval sq = iv.power(2);
  EXPECT_LE(sq.lo, 2.0);
  EXPECT_GE(sq.hi, 2.0);
  EXPECT_LE(sq.width(), 1e-11);
}

TEST(Projection, GroupsAndNorms) {
  const auto p3 = eigenspace_ones_projection(eigen_decompose(path_graph(3)));
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_NEAR(p3[1].value, 0.0, 1e-12);
  EXPECT_NEAR(p3[1].ones_projection, 0.0, 1e-12);
  const auto k4 = eigenspace_ones_projection(eigen_decompose(complete_graph(4)));
  ASSERT_EQ(k4.size(), 2u);
  EXPECT_NEAR(k4[0].ones_projection, 4.0, 1e-10);
  EXPECT_EQ(k4[1].multiplicity, 3);
  for (const auto& grp : eigenspace_ones_projection(eigen_decompose(cycle_graph(6)))) {
    if (std::abs(grp.value) > 1e-9 && std::abs(grp.value) < 2 - 1e-9) EXPECT_NEAR(grp.ones_projection, 0.0, 1e-10);
  }
}
