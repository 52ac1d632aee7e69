#include "curalg/bgg.hpp"

#include <algorithm>
#include <numeric>

#include "curalg/character_families.hpp"
#include "curalg/homological.hpp"

namespace curalg {

int bgg_required_floor(const RootDatum& d, int r, const ConeSet& gamma) {
  int spread = 0;
  for (const auto& mu : gamma.members()) spread = std::max(spread, delta_spread(d, mu));
  return r - spread;
}

BggReport bgg_check(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma, int floor) {
  int need = bgg_required_floor(d, r, gamma);
  if (floor > need)
    throw WindowError("bgg_check: floor " + std::to_string(floor) + " too high, need floor <= " + std::to_string(need));
  BggReport rep;
  rep.lambda = lambda;
  rep.r = r;
  rep.floor = floor;
  TruncatedModule inj = injective_slice(d, lambda, r, gamma, floor);
  MultiplicityTable peel = decompose_into_nablas(d, inj.character(), floor);
  for (const auto& mu : gamma.members())
    for (int s = r; s >= floor; --s) {
      BggEntry e;
      e.mu = mu;
      e.s = s;
      e.nabla_multiplicity = peel.get(mu, s);
      e.jordan_holder = decompose_into_simples(d, delta_character(d, mu, s)).get(lambda, r);
      e.hom_dim = static_cast<std::int64_t>(delta_hom_dim(mu, s, inj));
      rep.passed = rep.passed && e.agree();
      rep.entries.push_back(e);
    }
  // Peel entries outside Gamma or above r would break the reciprocity as well.
  for (const auto& [key, m] : peel.entries)
    if (!gamma.contains(key.first) || key.second > r) rep.passed = false;
  return rep;
}

int ext_gap_bound(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  int sum = std::accumulate(lambda.c.begin(), lambda.c.end(), 0);
  return delta_spread(d, mu) + 1 + sum;
}

}  // namespace curalg
