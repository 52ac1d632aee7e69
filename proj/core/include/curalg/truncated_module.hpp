#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curalg/graded_character.hpp"
#include "curalg/lie_algebra.hpp"
#include "curalg/sparse.hpp"

namespace curalg {

struct BasisLabel {
  int grade;
  Weight weight;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Explicit graded g[t]-module on a finite grade window. Basis vectors are
// grouped in blocks of fixed (grade, weight), ordered by grade then weight.
// The action of x (x) t^k is stored for 0 <= k <= max_degree; higher degrees
// act by zero on the window.
//
// exact_floor set: the module is the slice M_{>= floor} of an intended module.
// exact_top set: the module is the quotient M / M_{> top}.
class TruncatedModule {
 public:
  struct Block {
    int grade;
    Weight weight;
    std::size_t offset;
    std::size_t dim;
  };

  TruncatedModule() = default;
  // Labels must already be sorted; all actions start at zero.
  TruncatedModule(std::shared_ptr<const LieAlgebra> g, std::vector<BasisLabel> labels, int max_degree);

  // Builds a module from labels in arbitrary order; the returned permutation
  // maps input index to basis index. Action columns are given in input indices.
  static TruncatedModule from_unsorted(std::shared_ptr<const LieAlgebra> g, const std::vector<BasisLabel>& labels,
                                       int max_degree, std::vector<std::size_t>* permutation = nullptr);

  const LieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const BasisLabel& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_index_of(std::size_t vec) const { return vec_block_[vec]; }
  std::optional<std::size_t> find_block(int grade, const Weight& w) const;
  std::size_t local_index(std::size_t vec) const { return vec - blocks_[vec_block_[vec]].offset; }
  std::optional<int> min_grade() const;
  std::optional<int> max_grade() const;
  std::vector<std::size_t> grade_indices(int grade) const;

  int max_degree() const { return max_degree_; }
  const SparseMatrix& action(int x, int k) const;
  SparseMatrix& mutable_action(int x, int k);
  SparseVector apply(int x, int k, const SparseVector& v) const { return action(x, k).apply(v); }

  std::optional<int> exact_floor;
  std::optional<int> exact_top;

  GradedCharacter character() const;
  // Checks [a(x)t^j, b(x)t^k] = [a,b](x)t^{j+k} and weight/grade compatibility.
  bool check_relations(std::string* why = nullptr) const;

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::vector<BasisLabel> labels_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> vec_block_;
  std::map<std::pair<int, Weight>, std::size_t> block_lookup_;
  int max_degree_ = 0;
  std::vector<SparseMatrix> actions_;
  SparseMatrix zero_;
};

TruncatedModule dual(const TruncatedModule& m);
TruncatedModule shifted(const TruncatedModule& m, int r);
TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b);

struct SubmoduleResult {
  TruncatedModule module;
  SparseMatrix inclusion;  // columns: submodule basis in ambient coordinates
};
struct QuotientResult {
  TruncatedModule module;
  SparseMatrix projection;  // ambient basis -> quotient coordinates
};

// Submodule generated by the given vectors (closed under every x (x) t^k).
SubmoduleResult generate_submodule(const TruncatedModule& m, const std::vector<SparseVector>& generators);
// Submodule spanned by vectors already known to be invariant.
SubmoduleResult span_submodule(const TruncatedModule& m, const std::vector<SparseVector>& spanning);
// Submodule on an invariant span with the given basis, each vector lying in a
// single block. Within a block the basis keeps the order given.
SubmoduleResult submodule_with_basis(const TruncatedModule& m, const std::vector<SparseVector>& basis);
QuotientResult quotient_module(const TruncatedModule& m, const std::vector<SparseVector>& submodule_spanning);
// The slice M_{>= f} as a submodule.
SubmoduleResult grade_slice(const TruncatedModule& m, int floor_grade);
// The quotient M / M_{> top}.
QuotientResult grade_quotient(const TruncatedModule& m, int top_grade);
// Restriction to the grade range [lo, hi] of a slice that is a subquotient.
TruncatedModule grade_subquotient(const TruncatedModule& m, int lo, int hi);

// Versioned text dump, byte-stable. Vectors are labelled (grade, weight, local index).
std::string dump_module(const TruncatedModule& m, std::optional<int> from_grade = std::nullopt);
// Reads a full dump back. Throws std::invalid_argument on malformed input.
TruncatedModule parse_module_dump(const std::string& text);

}  // namespace curalg
