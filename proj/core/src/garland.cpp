#include "curalg/garland.hpp"

namespace curalg {

EnvElement garland_element(const LieAlgebra& g, int i, int s) {
  if (s < 0) throw std::invalid_argument("garland_element: s must be nonnegative");
  std::vector<EnvElement> p{EnvElement::one()};
  for (int n = 1; n <= s; ++n) {
    EnvElement acc;
    for (int r = 1; r <= n; ++r) acc = acc + EnvElement::letter(g.h(i), r) * p[static_cast<std::size_t>(n - r)];
    p.push_back(normal_form(g, acc.scaled(Rational(-1, n))));
  }
  return p.back();
}

EnvElement garland_product(const LieAlgebra& g, int i, int s) {
  Word w;
  for (int k = 0; k < s; ++k) w.push_back(Letter{g.e(i), 1});
  for (int k = 0; k < s; ++k) w.push_back(Letter{g.f(i), 0});
  return EnvElement::word(w);
}

namespace {

Rational garland_scalar(int s) {
  Rational f = 1;
  for (int k = 2; k <= s; ++k) f *= k;
  return (s % 2 ? -1 : 1) * f * f;
}

}  // namespace

bool garland_identity_in_algebra(const LieAlgebra& g, int i, int s) {
  EnvElement lhs = cartan_projection(g, normal_form(g, garland_product(g, i, s)));
  EnvElement rhs = garland_element(g, i, s).scaled(garland_scalar(s));
  return lhs == rhs;
}

bool check_garland(int i, int s, const TruncatedModule& m, const SparseVector& v) {
  const LieAlgebra& g = m.algebra();
  if (i < 0 || i >= g.rank()) throw PreconditionError("check_garland: index out of range");
  if (s < 0) throw PreconditionError("check_garland: s must be nonnegative");
  if (v.empty()) throw PreconditionError("check_garland: zero vector");
  int grade = m.label(v.entries().front().first).grade;
  for (const auto& [idx, c] : v.entries())
    if (m.label(idx).grade != grade) throw PreconditionError("check_garland: vector is not grade-homogeneous");
  if (m.exact_top && grade + s > *m.exact_top)
    throw PreconditionError("check_garland: window ends at grade " + std::to_string(*m.exact_top) +
                            "; required top >= " + std::to_string(grade + s));
  for (int x = 0; x < g.dim(); ++x) {
    if (g.part(x) != LieAlgebra::Part::Upper) continue;
    for (int k = 0; k <= m.max_degree(); ++k)
      if (!m.apply(x, k, v).empty()) throw PreconditionError("check_garland: n+[t] does not annihilate the vector");
  }
  SparseVector lhs = apply(m, garland_product(g, i, s), v);
  SparseVector rhs = apply(m, garland_element(g, i, s).scaled(garland_scalar(s)), v);
  return lhs == rhs;
}

}  // namespace curalg
