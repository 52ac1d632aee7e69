#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curalg/multiplicity.hpp"
#include "curalg/root_data.hpp"
#include "curalg/truncated_module.hpp"

namespace curalg {

// Offsets for the weights lambda_0, ..., lambda_k below lambda_k (in
// enumeration order). offsets[k] = 0 and offsets[s] grows as s decreases so
// that the grade supports of Delta(lambda_s, offsets[s]) are disjoint.
struct GradeOffsets {
  std::size_t k = 0;
  std::vector<Weight> lambdas;
  std::vector<int> offsets;
  std::vector<int> spreads;
  int top = 0;  // highest grade met by any Delta(lambda_s, offsets[s])

  // Label with eta value n: s = k - n mod (k+1), l = n div (k+1).
  std::pair<Weight, int> label(std::size_t n) const;
  std::size_t eta(std::size_t s, int l) const { return k - s + (k + 1) * static_cast<std::size_t>(l); }
  // Last eta value whose standard module reaches grade >= floor.
  std::size_t last_eta(int floor) const;
};

// Dominant weights mu <= lambda (dominance), ordered by height then lexicographically.
std::vector<Weight> cone_prefix(const RootDatum& d, const Weight& lambda);
GradeOffsets choose_grade_offsets(const RootDatum& d, const Weight& lambda);

struct FittingResult {
  SubmoduleResult summand;            // the component holding the line
  std::vector<SparseVector> complement;  // spans a complementary submodule (ambient coordinates)
  SparseMatrix projection;            // ambient -> summand coordinates, along the complement
  std::size_t splits = 0;
  bool certified = false;             // both parts invariant and U = S + C directly
};

// Splits U by Fitting decompositions of pseudo-random degree-zero
// endomorphisms until the component containing the 1-dimensional block
// (grade, weight) resists `budget` consecutive attempts.
FittingResult fitting_summand(const TruncatedModule& u, int grade, const Weight& weight, std::uint64_t seed = 0x5eedULL,
                              int budget = 4);

struct TowerStep {
  std::size_t eta = 0;
  Weight mu;
  int p = 0;
  std::size_t ext_dim = 0;
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  bool non_split = true;
  bool summand_certified = true;
  std::size_t fitting_splits = 0;
};

struct TiltingOptions {
  std::uint64_t seed = 0x5eedULL;
  int fitting_budget = 4;
  // Skips the extension at this label; used to corrupt a build on purpose.
  std::optional<std::pair<Weight, int>> skip;
};

struct TiltingBuild {
  Weight lambda;
  int floor = 0;
  GradeOffsets offsets;
  TruncatedModule module;   // the finite module M_s after the last step
  TruncatedModule window;   // its slice at grades >= floor, equal to T(lambda, 0) there
  MultiplicityTable ledger; // (mu_s, p_s) -> d_s, with d_0 = 1
  std::vector<TowerStep> steps;
};

TiltingBuild build_tilting(const RootDatum& d, const Weight& lambda, int floor, const TiltingOptions& opt = {});

struct TiltingCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
};

struct TiltingReport {
  std::vector<TiltingCheck> checks;  // ext, delta, hull, nabla
  MultiplicityTable delta_peel;
  MultiplicityTable nabla_peel;
  std::vector<std::pair<Weight, int>> ext_failures;
  bool passed() const;
};

// window must be a slice (exact_floor set) of a module with top grade 0.
TiltingReport verify_tilting(const TruncatedModule& window, const RootDatum& d, const Weight& lambda);

}  // namespace curalg
