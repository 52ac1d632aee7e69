#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "curalg/env_element.hpp"
#include "curalg/truncated_module.hpp"

namespace curalg {

// Cyclic module U(g[t]) w / relations. The generator spans V(lambda) at
// grade r, so the degree-zero relations of P(lambda, r) are built in.
struct ModulePresentation {
  enum class Kind { Projective, GlobalWeyl, LocalWeyl, Custom };

  Kind kind = Kind::Projective;
  Weight lambda;
  int grade = 0;
  // Further relations applied to the highest weight generator. Each must be
  // homogeneous of positive grade.
  std::vector<EnvElement> extra_relations;

  static ModulePresentation projective(const Weight& lambda, int r);
  static ModulePresentation global_weyl(const Weight& lambda, int r);
  static ModulePresentation local_weyl(const Weight& lambda, int r);

  // Relations of U-grade k >= 1 (including the built-in family relations).
  std::vector<EnvElement> relations_of_degree(const LieAlgebra& g, int k) const;
  void validate(const LieAlgebra& g) const;
};

struct EngineOptions {
  // Last grade computed; the result is M / M_{> top}.
  std::optional<int> top;
  // Stop at the first grade that vanishes; since U(t g[t]) is generated in
  // degree one, all higher grades vanish too and the module is finite.
  bool stop_at_zero_grade = false;
  // Weights outside this set are killed together with the submodule they generate.
  std::function<bool(const Weight&)> allowed;
  int grade_limit = 128;
};

struct EngineStats {
  std::vector<std::size_t> symbols_per_grade;
  std::vector<std::size_t> dims_per_grade;
};

TruncatedModule close_presentation(const std::shared_ptr<const LieAlgebra>& g, const ModulePresentation& p,
                                   const EngineOptions& opt, EngineStats* stats = nullptr);

// P(lambda, r) / P_{> top}.
TruncatedModule projective_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int top);
// Quotient of P(lambda, r)/P_{> top} by the submodule generated by weights
// outside the given allowed set.
TruncatedModule projective_cone_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r,
                                      int top, const std::function<bool(const Weight&)>& allowed);
// Local Weyl module, finite.
TruncatedModule local_weyl_module(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r);
// W(lambda, r) / W_{> top}.
TruncatedModule global_weyl_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int top);
// The slice nabla(lambda, r)_{>= floor} = (W(-w0 lambda, -r) / W_{> -floor})^*.
TruncatedModule nabla_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int floor);

// Index of the highest weight line at (grade, lambda); throws if it is not one-dimensional.
std::size_t highest_weight_index(const TruncatedModule& m, int grade, const Weight& lambda);

}  // namespace curalg
