#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "curalg/root_data.hpp"

namespace curalg {

// sl_{n+1} with basis ordered as negative root vectors, Cartan elements h_i,
// positive root vectors. Root vectors are the matrix units E_ab.
class LieAlgebra {
 public:
  enum class Part { Lower, Cartan, Upper };
  using Combination = std::vector<std::pair<int, int>>;  // (basis index, integer coefficient)

  explicit LieAlgebra(RootDatum datum);
  static std::shared_ptr<const LieAlgebra> make(char type, int rank);

  const RootDatum& root_data() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int dim() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(int x) const { return weights_[static_cast<std::size_t>(x)]; }
  Part part(int x) const;
  int e(int i) const { return e_[static_cast<std::size_t>(i)]; }
  int f(int i) const { return f_[static_cast<std::size_t>(i)]; }
  int h(int i) const { return dim_lower_ + i; }
  const Combination& bracket(int x, int y) const {
    return brackets_[static_cast<std::size_t>(x * dim() + y)];
  }
  // Natural representation: basis element x is sum of coeff * E_{row,col}.
  struct MatrixEntry {
    int row, col, coeff;
  };
  const std::vector<MatrixEntry>& natural(int x) const { return natural_[static_cast<std::size_t>(x)]; }
  // Basis index of the root vector E_ab (a != b).
  int root_vector(int a, int b) const;
  std::string name(int x) const;
  // Index of a positive root in root_data().positive_roots() for upper/lower basis elements.
  int root_index(int x) const;

 private:
  RootDatum datum_;
  int dim_lower_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::pair<int, int>> units_;  // (a,b) for root vectors, (-1,i) for h_i
  std::vector<std::vector<MatrixEntry>> natural_;
  std::vector<Combination> brackets_;
  std::vector<int> e_, f_;
  std::vector<int> root_index_;
};

}  // namespace curalg
