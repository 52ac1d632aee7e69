#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curalg/graded_character.hpp"
#include "curalg/multiplicity.hpp"
#include "curalg/root_data.hpp"
#include "curalg/truncated_module.hpp"

namespace curalg {

// A set of dominant weights closed under dominance (mu <= lambda in Gamma
// implies mu in Gamma). Weights allowed by the set are those in the convex
// hull of some W-orbit W lambda, lambda in Gamma.
class ConeSet {
 public:
  ConeSet() = default;
  static ConeSet closure(const RootDatum& d, const std::vector<Weight>& generators);
  // Throws unless the given weights are dominant and already closed.
  static ConeSet exactly(const RootDatum& d, const std::vector<Weight>& members);

  const std::vector<Weight>& members() const { return members_; }
  bool contains(const Weight& lambda) const;
  bool allows(const RootDatum& d, const Weight& mu) const;
  std::function<bool(const Weight&)> predicate(const RootDatum& d) const;
  // The set -w0 Gamma.
  ConeSet dual(const RootDatum& d) const;

 private:
  std::vector<Weight> members_;  // sorted
};

// Largest submodule whose weights are all allowed.
SubmoduleResult max_submodule_in_cones(const TruncatedModule& m, const std::function<bool(const Weight&)>& allowed);

// Slice I_Gamma(lambda, r)_{>= floor} of the injective hull of V(lambda, r)
// in the category cut out by Gamma. Requires lambda in Gamma.
TruncatedModule injective_slice(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma, int floor);
// Same slice via the Gamma-part of the dual of an unrestricted projective slice.
TruncatedModule injective_slice_via_dual(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma,
                                         int floor);

// Socle multiplicities [soc M : V(lambda, r)].
MultiplicityTable socle(const TruncatedModule& m);

struct FiltrationStep {
  Weight lambda;
  std::size_t dim = 0;             // dim M_s
  GradedCharacter quotient;        // ch M_s / M_{s-1}
  bool previous_misses_lambda = true;  // (M_{s-1})_{lambda_s} == 0
};

struct FiltrationReport {
  std::vector<FiltrationStep> chain;
  MultiplicityTable hom_dims;      // dim Hom(Delta(lambda_s, r), M)
  GradedCharacter lhs;             // ch M
  GradedCharacter rhs;             // sum of hom dims times nabla characters
  int compare_floor = 0;           // both sides exact at grades >= compare_floor
  bool inequality_holds = false;
  bool equality = false;
  std::vector<std::string> violations;
};

// Enumeration of dominant weights used for the canonical chain: height
// ascending, then lexicographic.
std::vector<Weight> cone_enumeration(const RootDatum& d, int max_height);

FiltrationReport canonical_filtration(const RootDatum& d, const TruncatedModule& m);

}  // namespace curalg
