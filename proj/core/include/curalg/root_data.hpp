#pragma once

#include <vector>

#include "curalg/graded_character.hpp"
#include "curalg/sparse.hpp"
#include "curalg/weight.hpp"

namespace curalg {

class RootDatum {
 public:
  // Throws std::invalid_argument for unsupported type or rank.
  static RootDatum build(char lie_type, int rank);

  char lie_type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  Weight fundamental(int i) const;
  Weight rho() const;
  // Permutation p with -w0(omega_i) = omega_{p[i]}.
  const std::vector<int>& minus_w0_permutation() const { return minus_w0_; }
  Weight minus_w0(const Weight& w) const;

  // Positive roots in fundamental coordinates, sorted by height then lexicographically.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  std::vector<Rational> root_coordinates(const Weight& w) const;
  Rational inner(const Weight& a, const Weight& b) const;

  Weight reflect(const Weight& w, int i) const;
  Weight dominant_representative(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  // True iff w lies in the root lattice Q.
  bool in_root_lattice(const Weight& w) const;
  // <w, 2 rho^vee> as a rational (integral on P).
  Rational height(const Weight& w) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<int> minus_w0_;
};

// mu below lambda in dominance order: lambda - mu in Q+.
bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda);
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda);
// mu in conv(W lambda), lambda dominant.
bool in_hull(const RootDatum& d, const Weight& mu, const Weight& lambda);
// Weights of V(lambda) with multiplicities, placed at grade 0.
GradedCharacter freudenthal_character(const RootDatum& d, const Weight& lambda);
Rational weyl_dimension(const RootDatum& d, const Weight& lambda);
// Dominant mu with mu <= lambda, sorted by height descending then lexicographic.
std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda);
// Dominant weights ordered by height ascending then lexicographically, up to the given height.
std::vector<Weight> dominant_weights_by_height(const RootDatum& d, int max_height);

}  // namespace curalg
