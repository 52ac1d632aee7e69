#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "curalg/lie_algebra.hpp"
#include "curalg/root_data.hpp"
#include "support.hpp"

using namespace curalg;
namespace ct = curalg::testing;

namespace {

std::vector<Weight> small_weights(int rank, int bound) {
  std::vector<Weight> out;
  std::vector<int> c(static_cast<std::size_t>(rank), -bound);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST(RootData, CartanIsFiniteType) {
  for (int n = 1; n <= 5; ++n) {
    RootDatum d = RootDatum::build('A', n);
    const auto& a = d.cartan();
    ASSERT_EQ(static_cast<int>(a.size()), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) EXPECT_EQ(a[i][j], 2);
        else EXPECT_LE(a[i][j], 0);
        EXPECT_EQ(a[i][j] == 0, a[j][i] == 0);
      }
    // Symmetric here, so positive leading minors give positive definiteness.
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = a[i][j];
      Rational det = 1;
      for (int c = 0; c < k; ++c) {
        det *= m[c][c];
        ASSERT_NE(m[c][c], 0);
        for (int r = c + 1; r < k; ++r) {
          Rational f = m[r][c] / m[c][c];
          for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
      }
      EXPECT_EQ(det, k + 1);
    }
  }
}

TEST(RootData, RejectsUnsupported) {
  EXPECT_THROW(RootDatum::build('B', 2), std::invalid_argument);
  EXPECT_THROW(RootDatum::build('A', 0), std::invalid_argument);
}

TEST(RootData, MinusW0IsDiagramFlip) {
  for (int n = 1; n <= 4; ++n) {
    RootDatum d = RootDatum::build('A', n);
    for (int i = 0; i < n; ++i) EXPECT_EQ(d.minus_w0_permutation()[i], n - 1 - i);
  }
  RootDatum a2 = RootDatum::build('A', 2);
  EXPECT_EQ(a2.minus_w0(Weight({2, 1})), Weight({1, 2}));
}

TEST(RootData, PositiveRootsAndRho) {
  RootDatum a2 = RootDatum::build('A', 2);
  ASSERT_EQ(a2.positive_roots().size(), 3u);
  EXPECT_EQ(a2.positive_roots()[0], Weight({-1, 2}));
  EXPECT_EQ(a2.positive_roots()[1], Weight({2, -1}));
  EXPECT_EQ(a2.positive_roots()[2], Weight({1, 1}));
  EXPECT_EQ(a2.rho(), Weight({1, 1}));
  EXPECT_EQ(a2.height(a2.rho()), 4);
  EXPECT_TRUE(a2.in_root_lattice(Weight({1, 1})));
  EXPECT_FALSE(a2.in_root_lattice(Weight({1, 0})));
}

TEST(RootData, OrbitOfOmega1InA2) {
  RootDatum d = RootDatum::build('A', 2);
  auto orbit = weyl_orbit(d, Weight({1, 0}));
  std::set<Weight> got(orbit.begin(), orbit.end());
  std::set<Weight> want{Weight({1, 0}), Weight({-1, 1}), Weight({0, -1})};
  EXPECT_EQ(got, want);
}

TEST(RootData, OrbitInvariance) {
  for (int n = 1; n <= 3; ++n) {
    RootDatum d = RootDatum::build('A', n);
    for (const auto& w : small_weights(n, 2)) {
      Weight dom = d.dominant_representative(w);
      EXPECT_TRUE(d.is_dominant(dom));
      for (const auto& v : weyl_orbit(d, dom)) EXPECT_EQ(d.dominant_representative(v), dom);
      for (int i = 0; i < n; ++i) EXPECT_EQ(d.reflect(d.reflect(w, i), i), w);
    }
  }
}

TEST(RootData, DominanceIsPartialOrder) {
  for (int n = 1; n <= 2; ++n) {
    RootDatum d = RootDatum::build('A', n);
    auto ws = small_weights(n, 2);
    for (const auto& a : ws) {
      EXPECT_TRUE(dominance_leq(d, a, a));
      for (const auto& b : ws) {
        if (dominance_leq(d, a, b) && dominance_leq(d, b, a)) EXPECT_EQ(a, b);
        if (!dominance_leq(d, a, b)) continue;
        for (const auto& c : ws)
          if (dominance_leq(d, b, c)) EXPECT_TRUE(dominance_leq(d, a, c));
      }
    }
  }
}

TEST(RootData, HullMatchesDominanceOnACoset) {
  for (int n = 1; n <= 3; ++n) {
    RootDatum d = RootDatum::build('A', n);
    std::vector<Weight> dom;
    for (const auto& w : small_weights(n, 3))
      if (d.is_dominant(w)) dom.push_back(w);
    for (const auto& lam : dom)
      for (const auto& mu : dom) {
        if (!d.in_root_lattice(lam - mu)) continue;
        EXPECT_EQ(in_hull(d, mu, lam), dominance_leq(d, mu, lam)) << to_string(mu) << " " << to_string(lam);
      }
  }
}

TEST(RootData, HullMonotonicity) {
  RootDatum d = RootDatum::build('A', 2);
  std::vector<Weight> dom;
  for (const auto& w : small_weights(2, 3))
    if (d.is_dominant(w)) dom.push_back(w);
  for (const auto& lam : dom)
    for (const auto& mu : dom) {
      if (!in_hull(d, mu, lam)) continue;
      for (const auto& nu : small_weights(2, 3))
        if (in_hull(d, nu, mu)) EXPECT_TRUE(in_hull(d, nu, lam));
    }
}

TEST(RootData, HullExamples) {
  RootDatum a1 = RootDatum::build('A', 1);
  EXPECT_TRUE(in_hull(a1, Weight({0}), Weight({2})));
  EXPECT_FALSE(in_hull(a1, Weight({3}), Weight({2})));
  RootDatum a2 = RootDatum::build('A', 2);
  EXPECT_TRUE(in_hull(a2, Weight({0, 0}), Weight({1, 1})));
  EXPECT_TRUE(in_hull(a2, Weight({1, 0}), Weight({1, 1})));
  EXPECT_FALSE(in_hull(a2, Weight({2, 0}), Weight({1, 1})));
}

TEST(RootData, FreudenthalAgainstWeylDimension) {
  for (int n = 1; n <= 3; ++n) {
    RootDatum d = RootDatum::build('A', n);
    for (const auto& w : small_weights(n, 3)) {
      if (!d.is_dominant(w)) continue;
      GradedCharacter c = freudenthal_character(d, w);
      EXPECT_EQ(Rational(c.total_dim()), weyl_dimension(d, w)) << to_string(w);
      // Constant on Weyl orbits.
      for (const auto& [key, m] : c.entries())
        for (int i = 0; i < n; ++i) EXPECT_EQ(c.coefficient(d.reflect(key.weight, i), 0), m);
    }
  }
}

TEST(RootData, GoldenFacts) {
  ct::Facts facts;
  RootDatum a2 = RootDatum::build('A', 2);
  EXPECT_EQ(weyl_dimension(a2, Weight({1, 1})), facts.integer("weyl_dimension A2 [1,1]"));
  EXPECT_EQ(freudenthal_character(a2, Weight({1, 1})).coefficient(Weight({0, 0}), 0),
            facts.integer("weight_multiplicity A2 [1,1] [0,0]"));
}

TEST(RootData, DominantWeightEnumerations) {
  RootDatum a2 = RootDatum::build('A', 2);
  auto below = dominant_weights_below(a2, Weight({2, 2}));
  std::set<Weight> got(below.begin(), below.end());
  EXPECT_EQ(got, (std::set<Weight>{Weight({2, 2}), Weight({3, 0}), Weight({0, 3}), Weight({1, 1}), Weight({0, 0})}));
  EXPECT_EQ(below.front(), Weight({2, 2}));
  auto by_height = dominant_weights_by_height(a2, 4);
  ASSERT_FALSE(by_height.empty());
  EXPECT_EQ(by_height.front(), Weight({0, 0}));
  for (std::size_t i = 1; i < by_height.size(); ++i)
    EXPECT_LE(a2.height(by_height[i - 1]), a2.height(by_height[i]));
}

TEST(LieAlgebra, BracketsAndGrading) {
  auto g = LieAlgebra::make('A', 2);
  EXPECT_EQ(g->dim(), 8);
  for (int x = 0; x < g->dim(); ++x)
    for (int y = 0; y < g->dim(); ++y) {
      // antisymmetry and weight additivity
      auto a = g->bracket(x, y), b = g->bracket(y, x);
      std::map<int, int> sum;
      for (auto [z, c] : a) sum[z] += c;
      for (auto [z, c] : b) sum[z] += c;
      for (auto [z, c] : sum) EXPECT_EQ(c, 0);
      for (auto [z, c] : a) EXPECT_EQ(g->weight(z), g->weight(x) + g->weight(y));
    }
  for (int i = 0; i < g->rank(); ++i) {
    EXPECT_EQ(g->weight(g->e(i)), g->root_data().simple_root(i));
    auto hf = g->bracket(g->e(i), g->f(i));
    ASSERT_EQ(hf.size(), 1u);
    EXPECT_EQ(hf[0].first, g->h(i));
  }
}
