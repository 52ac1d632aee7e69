#pragma once

#include <string>
#include <vector>

#include "curalg/cones.hpp"
#include "curalg/multiplicity.hpp"

namespace curalg {

struct BggEntry {
  Weight mu;
  int s = 0;
  std::int64_t nabla_multiplicity = 0;  // [I : nabla(mu, s)]
  std::int64_t jordan_holder = 0;       // [Delta(mu, s) : V(lambda, r)]
  std::int64_t hom_dim = 0;             // dim Hom(Delta(mu, s), I)
  bool agree() const { return nabla_multiplicity == jordan_holder && jordan_holder == hom_dim; }
};

struct BggReport {
  Weight lambda;
  int r = 0;
  int floor = 0;
  std::vector<BggEntry> entries;
  bool passed = true;
};

// Minimal floor for which every mu in Gamma with [Delta(mu, s) : V(lambda, r)]
// possibly nonzero has s inside the window.
int bgg_required_floor(const RootDatum& d, int r, const ConeSet& gamma);

// Compares the three multiplicities over mu in Gamma and floor <= s <= r.
// Throws WindowError when floor is too high to cover the nonzero range.
BggReport bgg_check(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma, int floor);

// Grade-gap bound: Ext^1(Delta(lambda, r), Delta(mu, s)) != 0 implies |r - s| <= bound.
int ext_gap_bound(const RootDatum& d, const Weight& lambda, const Weight& mu);

}  // namespace curalg
