#pragma once

#include <stdexcept>

#include "curalg/env_element.hpp"
#include "curalg/truncated_module.hpp"

namespace curalg {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// P_{i,0} = 1, P_{i,s} = -(1/s) sum_{r=1}^{s} (h_i (x) t^r) P_{i,s-r}, in normal form.
EnvElement garland_element(const LieAlgebra& g, int i, int s);
// (x_i^+ (x) t)^s (x_i^-)^s as a word.
EnvElement garland_product(const LieAlgebra& g, int i, int s);
// pr((x_i^+ (x) t)^s (x_i^-)^s) == (-1)^s (s!)^2 P_{i,s} by rewriting in U(g[t]).
bool garland_identity_in_algebra(const LieAlgebra& g, int i, int s);
// Compares (x_i^+ (x) t)^s (x_i^-)^s m with (-1)^s (s!)^2 P_{i,s} m in M.
// Throws PreconditionError unless n^+[t] m = 0 and the window holds grade(m) + s.
bool check_garland(int i, int s, const TruncatedModule& m, const SparseVector& v);

}  // namespace curalg
