#pragma once

#include <compare>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "curalg/lie_algebra.hpp"
#include "curalg/sparse.hpp"

namespace curalg {

class TruncatedModule;

// The generator x (x) t^k of g[t]. Letters compare by basis index, then
// degree; the basis order lists n^-, then h, then n^+, so ordered words are
// PBW monomials for U(n^-[t]) (x) U(h[t]) (x) U(n^+[t]).
struct Letter {
  int x;
  int degree;
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Element of U(g[t]) as a Q-combination of words. Products are evaluated
// right to left on modules.
class EnvElement {
 public:
  using Terms = std::map<Word, Rational>;

  EnvElement() = default;
  static EnvElement one();
  static EnvElement letter(int x, int degree);
  static EnvElement word(const Word& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Rational& c);

  EnvElement operator+(const EnvElement& o) const;
  EnvElement operator-(const EnvElement& o) const;
  EnvElement operator*(const EnvElement& o) const;  // concatenation, not normalised
  EnvElement scaled(const Rational& c) const;
  friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.terms_ == b.terms_; }

  // Homogeneity data; throws if the element is not homogeneous.
  int grade() const;
  Weight weight(const LieAlgebra& g) const;
  bool homogeneous(const LieAlgebra& g) const;

  std::string to_string(const LieAlgebra& g) const;

 private:
  Terms terms_;
};

bool is_pbw_ordered(const Word& w);
// Rewrites to PBW normal form by resolving the leftmost descent first.
EnvElement normal_form(const LieAlgebra& g, const EnvElement& e);
// Same, but resolving a random descent at each step.
EnvElement normal_form_random(const LieAlgebra& g, const EnvElement& e, std::mt19937_64& rng);
EnvElement multiply_normal(const LieAlgebra& g, const EnvElement& a, const EnvElement& b);
// Projection onto U(h[t]) along n^-[t]U + U n^+[t], applied to a normal form.
EnvElement cartan_projection(const LieAlgebra& g, const EnvElement& normal);

// Right-to-left action on a module vector; degrees beyond the stored range act by zero.
SparseVector apply(const TruncatedModule& m, const EnvElement& e, const SparseVector& v);

}  // namespace curalg
