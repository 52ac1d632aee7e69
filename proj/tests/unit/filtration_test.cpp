#include <gtest/gtest.h>

#include <random>

#include "curalg/bgg.hpp"
#include "curalg/character_families.hpp"
#include "curalg/cones.hpp"
#include "curalg/homological.hpp"
#include "curalg/irreducible.hpp"
#include "curalg/multiplicity.hpp"
#include "curalg/presentation.hpp"
#include "support.hpp"

using namespace curalg;
namespace ct = curalg::testing;

namespace {

GradedCharacter sample_character(const RootDatum& d) {
  GradedCharacter c = delta_character(d, d.rank() == 1 ? Weight({4}) : Weight({2, 1}), 0);
  c = c + delta_character(d, Weight::zero(d.rank()), 1).scaled(2);
  c = c + simple_graded_character(d, d.rank() == 1 ? Weight({2}) : Weight({1, 1}), -1);
  return c;
}

// Peels simples or deltas, choosing uniformly among the dominance-maximal
// remaining dominant weights.
MultiplicityTable random_peel(const RootDatum& d, GradedCharacter chi, Family f, std::mt19937_64& rng) {
  MultiplicityTable t;
  while (!chi.empty()) {
    std::set<Weight> support;
    for (const auto& [k, v] : chi.entries())
      if (d.is_dominant(k.weight)) support.insert(k.weight);
    std::vector<Weight> maximal;
    for (const auto& w : support) {
      bool top = true;
      for (const auto& u : support)
        if (u != w && dominance_leq(d, w, u)) top = false;
      if (top) maximal.push_back(w);
    }
    if (maximal.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
    const Weight lam = maximal[pick(rng)];
    std::vector<std::pair<int, std::int64_t>> lines;
    for (const auto& [k, v] : chi.entries())
      if (k.weight == lam) lines.emplace_back(k.grade, v);
    for (const auto& [r, m] : lines) {
      t.add(lam, r, m);
      GradedCharacter piece = f == Family::Simple ? simple_graded_character(d, lam, r) : delta_character(d, lam, r);
      chi = chi - piece.scaled(m);
    }
  }
  return t;
}

}  // namespace

TEST(Multiplicity, RoundTrips) {
  for (int rank = 1; rank <= 2; ++rank) {
    RootDatum d = RootDatum::build('A', rank);
    GradedCharacter chi = sample_character(d);
    EXPECT_EQ(recombine(d, Family::Simple, decompose_into_simples(d, chi)), chi);
    EXPECT_EQ(recombine(d, Family::Delta, decompose_into_deltas(d, chi)), chi);
    GradedCharacter nab = nabla_character(d, Weight::zero(rank), 0, -4) +
                          nabla_character(d, rank == 1 ? Weight({2}) : Weight({1, 1}), -1, -4).scaled(3);
    MultiplicityTable t = decompose_into_nablas(d, nab, -4);
    EXPECT_EQ(t.get(Weight::zero(rank), 0), 1);
    EXPECT_EQ(t.get(rank == 1 ? Weight({2}) : Weight({1, 1}), -1), 3);
    EXPECT_EQ(recombine(d, Family::Nabla, t, -4).restricted_to(-4), nab.restricted_to(-4));
  }
}

TEST(Multiplicity, PeelOrderIndependence) {
  std::mt19937_64 rng(7);
  for (int rank = 1; rank <= 2; ++rank) {
    RootDatum d = RootDatum::build('A', rank);
    GradedCharacter chi = sample_character(d) + delta_character(d, rank == 1 ? Weight({2}) : Weight({0, 3}), 2);
    MultiplicityTable simples = decompose_into_simples(d, chi), deltas = decompose_into_deltas(d, chi);
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_EQ(random_peel(d, chi, Family::Simple, rng).entries, simples.entries);
      EXPECT_EQ(random_peel(d, chi, Family::Delta, rng).entries, deltas.entries);
    }
  }
}

TEST(Multiplicity, Goldens) {
  RootDatum a1 = RootDatum::build('A', 1);
  EXPECT_EQ(decompose_into_simples(a1, delta_character(a1, Weight({2}), 0)).entries,
            ct::golden_table("simples_delta_A1_2_0.txt").entries);
  EXPECT_EQ(decompose_into_simples(a1, delta_character(a1, Weight({4}), 1)).entries,
            ct::golden_table("simples_delta_A1_4_1.txt").entries);
}

TEST(Multiplicity, NablaPeelNeedsFloor) {
  RootDatum a1 = RootDatum::build('A', 1);
  GradedCharacter nab = nabla_character(a1, Weight({2}), 0, -3);
  EXPECT_THROW(decompose_into_nablas(a1, nab, -5), WindowError);
}

TEST(Cones, ClosureAndPredicates) {
  RootDatum a1 = RootDatum::build('A', 1), a2 = RootDatum::build('A', 2);
  ConeSet c = ConeSet::closure(a1, {Weight({4})});
  EXPECT_EQ(c.members(), (std::vector<Weight>{Weight({0}), Weight({2}), Weight({4})}));
  EXPECT_TRUE(c.allows(a1, Weight({-4})));
  EXPECT_FALSE(c.allows(a1, Weight({1})));
  EXPECT_THROW(ConeSet::exactly(a1, {Weight({2})}), std::invalid_argument);
  ConeSet c2 = ConeSet::closure(a2, {Weight({2, 0})});
  EXPECT_TRUE(c2.contains(Weight({0, 1})));
  EXPECT_EQ(c2.dual(a2).members(), ConeSet::closure(a2, {Weight({0, 2})}).members());
  for (const auto& lam : c2.members())
    for (const auto& mu : dominant_weights_by_height(a2, 6))
      if (dominance_leq(a2, mu, lam)) EXPECT_TRUE(c2.contains(mu));
}

TEST(Cones, FixedPointAndInjectiveGoldens) {
  RootDatum a1 = RootDatum::build('A', 1);
  auto g = lie_algebra('A', 1);
  ConeSet zero = ConeSet::exactly(a1, {Weight({0})});
  EXPECT_EQ(max_submodule_in_cones(projective_slice(g, Weight({0}), 0, 2), zero.predicate(a1)).module.character().entries(),
            ct::golden_character("fixedpoint_P_A1_0_0_top2_gamma0.txt").entries());
  TruncatedModule inj = injective_slice(a1, Weight({0}), 0, zero, -2);
  EXPECT_EQ(inj.character().entries(), ct::golden_character("injective_A1_0_0_gamma0_floor_m2.txt").entries());
  EXPECT_EQ(injective_slice_via_dual(a1, Weight({0}), 0, zero, -2).character(), inj.character());
  EXPECT_EQ(socle(*delta_module(a1, Weight({2}), 0)).entries, ct::golden_table("socle_delta_A1_2_0.txt").entries);
}

TEST(Cones, InjectiveSocleIsSimple) {
  RootDatum a1 = RootDatum::build('A', 1);
  ConeSet gamma = ConeSet::closure(a1, {Weight({2})});
  TruncatedModule inj = injective_slice(a1, Weight({2}), 0, gamma, -4);
  MultiplicityTable soc = socle(inj);
  EXPECT_EQ(soc.entries.size(), 1u);
  EXPECT_EQ(soc.get(Weight({2}), 0), 1);
}

TEST(CanonicalFiltration, ChainsAreMaximal) {
  RootDatum a1 = RootDatum::build('A', 1);
  auto g = lie_algebra('A', 1);
  std::vector<TruncatedModule> mods{*delta_module(a1, Weight({2}), 0), nabla_slice(g, Weight({2}), 0, -4),
                                    direct_sum(irreducible_module(g, Weight({2}), 0), irreducible_module(g, Weight({0}), 1))};
  for (const auto& m : mods) {
    FiltrationReport rep = canonical_filtration(a1, m);
    GradedCharacter sum;
    std::vector<Weight> seen;
    for (const auto& step : rep.chain) {
      sum = sum + step.quotient;
      EXPECT_TRUE(step.previous_misses_lambda);
      seen.push_back(step.lambda);
      auto allowed = [&](const Weight& w) {
        for (const auto& l : seen)
          if (in_hull(a1, w, l)) return true;
        return false;
      };
      SubmoduleResult sub = max_submodule_in_cones(m, allowed);
      EXPECT_EQ(sub.module.dim(), step.dim);
      // Nothing allowed survives in the quotient, so the submodule is maximal.
      std::vector<SparseVector> cols(sub.inclusion.columns.begin(), sub.inclusion.columns.end());
      QuotientResult q = quotient_module(m, cols);
      EXPECT_EQ(max_submodule_in_cones(q.module, allowed).module.dim(), 0u);
    }
    EXPECT_EQ(sum.entries(), m.character().entries());
    EXPECT_TRUE(rep.inequality_holds);
  }
  EXPECT_FALSE(canonical_filtration(a1, mods[0]).equality);
  EXPECT_TRUE(canonical_filtration(a1, mods[1]).equality);
  EXPECT_FALSE(canonical_filtration(a1, mods[2]).equality);
}

TEST(Ext, DeltaNablaVanishing) {
  auto g = lie_algebra('A', 1);
  for (int lam = 0; lam <= 2; ++lam)
    for (int mu = 0; mu <= 3; ++mu)
      for (int s = -1; s <= 1; ++s) {
        TruncatedModule n = nabla_slice(g, Weight({mu}), s, -5);
        for (int r = -2; r <= 1; ++r) EXPECT_EQ(ext1_from_delta(Weight({lam}), r, n).dimension, 0u);
      }
  auto g2 = lie_algebra('A', 2);
  TruncatedModule n2 = nabla_slice(g2, Weight({1, 1}), 0, -3);
  for (const auto& lam : {Weight({0, 0}), Weight({1, 1}), Weight({1, 0})})
    EXPECT_EQ(ext1_from_delta(lam, -1, n2).dimension, 0u);
}

TEST(Bgg, ExampleAgreement) {
  RootDatum a1 = RootDatum::build('A', 1);
  ConeSet gamma = ConeSet::exactly(a1, {Weight({0}), Weight({2})});
  BggReport rep = bgg_check(a1, Weight({0}), 0, gamma, -6);
  EXPECT_TRUE(rep.passed);
  bool saw00 = false, saw2m1 = false;
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.agree());
    if (e.mu == Weight({0}) && e.s == 0) saw00 = e.hom_dim == 1;
    if (e.mu == Weight({2}) && e.s == -1) saw2m1 = e.hom_dim == 1;
  }
  EXPECT_TRUE(saw00);
  EXPECT_TRUE(saw2m1);
  // lambda maximal in Gamma: only nabla(lambda, r) itself.
  BggReport top = bgg_check(a1, Weight({2}), 0, gamma, -6);
  for (const auto& e : top.entries)
    if (e.mu == Weight({2})) EXPECT_EQ(e.nabla_multiplicity, e.s == 0 ? 1 : 0);
  EXPECT_THROW(bgg_check(a1, Weight({0}), 0, gamma, 0), WindowError);
  EXPECT_LE(bgg_required_floor(a1, 0, gamma), -1);
}

TEST(Bgg, RankTwo) {
  RootDatum a2 = RootDatum::build('A', 2);
  ConeSet gamma = ConeSet::exactly(a2, {Weight({0, 0}), Weight({1, 1})});
  int floor = bgg_required_floor(a2, 0, gamma);
  EXPECT_TRUE(bgg_check(a2, Weight({0, 0}), 0, gamma, floor).passed);
}
