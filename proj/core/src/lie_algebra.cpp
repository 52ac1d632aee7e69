#include "curalg/lie_algebra.hpp"

#include <map>
#include <stdexcept>

namespace curalg {

LieAlgebra::LieAlgebra(RootDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank();
  const auto& roots = datum_.positive_roots();
  // Positive root alpha_i + ... + alpha_{j-1} corresponds to E_{i,j}.
  std::vector<std::pair<int, int>> pos;
  for (const Weight& r : roots) {
    auto c = datum_.root_coordinates(r);
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k)
      if (c[static_cast<std::size_t>(k)] != 0) {
        if (i < 0) i = k;
        j = k + 1;
      }
    pos.emplace_back(i, j);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    units_.emplace_back(pos[k].second, pos[k].first);
    weights_.push_back(-roots[k]);
    root_index_.push_back(static_cast<int>(k));
  }
  dim_lower_ = static_cast<int>(units_.size());
  for (int i = 0; i < n; ++i) {
    units_.emplace_back(-1, i);
    weights_.push_back(Weight::zero(n));
    root_index_.push_back(-1);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    units_.push_back(pos[k]);
    weights_.push_back(roots[k]);
    root_index_.push_back(static_cast<int>(k));
  }
  const int d = dim();
  natural_.resize(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    auto [a, b] = units_[static_cast<std::size_t>(x)];
    if (a < 0)
      natural_[static_cast<std::size_t>(x)] = {{b, b, 1}, {b + 1, b + 1, -1}};
    else
      natural_[static_cast<std::size_t>(x)] = {{a, b, 1}};
  }
  e_.resize(static_cast<std::size_t>(n));
  f_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    e_[static_cast<std::size_t>(i)] = root_vector(i, i + 1);
    f_[static_cast<std::size_t>(i)] = root_vector(i + 1, i);
  }
  // Brackets via matrix commutators, decomposed back into the basis.
  brackets_.resize(static_cast<std::size_t>(d * d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      std::map<std::pair<int, int>, int> m;
      for (const auto& p : natural(x))
        for (const auto& q : natural(y)) {
          if (p.col == q.row) m[{p.row, q.col}] += p.coeff * q.coeff;
          if (q.col == p.row) m[{q.row, p.col}] -= p.coeff * q.coeff;
        }
      std::map<int, int> comb;
      std::vector<int> diag(static_cast<std::size_t>(n + 1), 0);
      for (const auto& [rc, v] : m) {
        if (v == 0) continue;
        if (rc.first == rc.second)
          diag[static_cast<std::size_t>(rc.first)] += v;
        else
          comb[root_vector(rc.first, rc.second)] += v;
      }
      // Traceless diagonal: sum_k d_k E_kk = sum_i (d_0 + ... + d_i) h_i.
      int run = 0;
      for (int i = 0; i < n; ++i) {
        run += diag[static_cast<std::size_t>(i)];
        if (run != 0) comb[h(i)] += run;
      }
      if (run + diag[static_cast<std::size_t>(n)] != 0) throw std::logic_error("commutator is not traceless");
      auto& out = brackets_[static_cast<std::size_t>(x * d + y)];
      for (const auto& [k, v] : comb)
        if (v != 0) out.emplace_back(k, v);
    }
}

std::shared_ptr<const LieAlgebra> LieAlgebra::make(char type, int rank) {
  return std::make_shared<const LieAlgebra>(RootDatum::build(type, rank));
}

LieAlgebra::Part LieAlgebra::part(int x) const {
  if (x < dim_lower_) return Part::Lower;
  if (x < dim_lower_ + rank()) return Part::Cartan;
  return Part::Upper;
}

int LieAlgebra::root_vector(int a, int b) const {
  for (std::size_t k = 0; k < units_.size(); ++k)
    if (units_[k].first == a && units_[k].second == b) return static_cast<int>(k);
  throw std::out_of_range("no root vector E_" + std::to_string(a) + std::to_string(b));
}

int LieAlgebra::root_index(int x) const { return root_index_[static_cast<std::size_t>(x)]; }

std::string LieAlgebra::name(int x) const {
  auto [a, b] = units_[static_cast<std::size_t>(x)];
  if (a < 0) return "h" + std::to_string(b + 1);
  return "E" + std::to_string(a + 1) + std::to_string(b + 1);
}

}  // namespace curalg
