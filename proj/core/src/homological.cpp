#include "curalg/homological.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "curalg/presentation.hpp"

namespace curalg {

namespace {

// Unknown entries of graded linear maps A -> B shifting grade by delta and
// weight by omega; the entries for a basis vector a of A fill the target block.
struct MapLayout {
  std::size_t base = 0;
  std::vector<std::size_t> offset;        // per a
  std::vector<std::size_t> count;         // per a
  std::vector<std::size_t> target;        // first B index of the target block
  std::size_t total = 0;

  MapLayout(const TruncatedModule& a, const TruncatedModule& b, int delta, const Weight& omega, std::size_t start)
      : base(start) {
    offset.resize(a.dim());
    count.resize(a.dim());
    target.resize(a.dim());
    std::size_t next = start;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      offset[i] = next;
      auto blk = b.find_block(a.label(i).grade + delta, a.label(i).weight + omega);
      if (blk) {
        count[i] = b.blocks()[*blk].dim;
        target[i] = b.blocks()[*blk].offset;
      }
      next += count[i];
    }
    total = next - start;
  }

  // Adds coeff * phi(a) into the equation map indexed by B coordinates.
  void add_value(std::map<std::size_t, SparseAccumulator>& eq, std::size_t a, const Rational& coeff) const {
    for (std::size_t n = 0; n < count[a]; ++n) eq[target[a] + n].add(offset[a] + n, coeff);
  }

  // Adds coeff * y_B(phi(a)).
  void add_left(std::map<std::size_t, SparseAccumulator>& eq, const SparseMatrix& yb, std::size_t a,
                const Rational& coeff) const {
    for (std::size_t n = 0; n < count[a]; ++n)
      for (const auto& [row, v] : yb.columns[target[a] + n].entries()) eq[row].add(offset[a] + n, coeff * v);
  }

  // Adds coeff * phi(y_A a).
  void add_right(std::map<std::size_t, SparseAccumulator>& eq, const SparseMatrix& ya, std::size_t a,
                 const Rational& coeff) const {
    for (const auto& [a2, v] : ya.columns[a].entries()) add_value(eq, a2, coeff * v);
  }

  SparseMatrix to_matrix(const SparseVector& sol, std::size_t rows, std::size_t cols) const {
    SparseMatrix m(rows, cols);
    std::vector<SparseAccumulator> acc(cols);
    for (const auto& [u, v] : sol.entries()) {
      if (u < base || u >= base + total) continue;
      // Locate the basis vector a owning unknown u.
      auto it = std::upper_bound(offset.begin(), offset.end(), u);
      std::size_t a = static_cast<std::size_t>(it - offset.begin()) - 1;
      while (count[a] == 0 || u >= offset[a] + count[a]) --a;
      acc[a].add(target[a] + (u - offset[a]), v);
    }
    for (std::size_t a = 0; a < cols; ++a) m.columns[a] = acc[a].take();
    return m;
  }
};

void flush(Echelon& sys, std::map<std::size_t, SparseAccumulator>& eq) {
  for (auto& [row, acc] : eq) sys.insert(acc.take());
  eq.clear();
}

using EquationSink = std::function<void(const SparseVector&)>;

void flush(const EquationSink& sink, std::map<std::size_t, SparseAccumulator>& eq) {
  for (auto& [row, acc] : eq) sink(acc.take());
  eq.clear();
}

std::vector<std::pair<int, int>> chevalley(const LieAlgebra& g) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < g.rank(); ++i) {
    gens.emplace_back(g.e(i), 0);
    gens.emplace_back(g.f(i), 0);
  }
  return gens;
}

std::vector<SparseMatrix> solve_hom(const TruncatedModule& m, const TruncatedModule& n,
                                    const std::vector<std::pair<int, int>>& gens) {
  MapLayout lay(m, n, 0, Weight::zero(m.algebra().rank()), 0);
  Echelon sys(lay.total);
  std::map<std::size_t, SparseAccumulator> eq;
  for (const auto& [y, k] : gens)
    for (std::size_t a = 0; a < m.dim(); ++a) {
      lay.add_right(eq, m.action(y, k), a, 1);
      lay.add_left(eq, n.action(y, k), a, -1);
      flush(sys, eq);
    }
  std::vector<SparseMatrix> out;
  for (const auto& v : sys.kernel_basis()) out.push_back(lay.to_matrix(v, n.dim(), m.dim()));
  return out;
}

}  // namespace

std::vector<SparseMatrix> hom_space(const TruncatedModule& m, const TruncatedModule& n, bool check_windows) {
  if (check_windows && m.dim() > 0) {
    const int lo = *m.min_grade(), hi = *m.max_grade();
    if (n.exact_floor && lo < *n.exact_floor)
      throw WindowMismatch("hom_space: target slice starts at grade " + std::to_string(*n.exact_floor) +
                           "; required floor <= " + std::to_string(lo));
    if (n.exact_top && hi > *n.exact_top)
      throw WindowMismatch("hom_space: target quotient ends at grade " + std::to_string(*n.exact_top) +
                           "; required top >= " + std::to_string(hi));
    if (m.exact_top && n.max_grade() && *n.max_grade() > *m.exact_top)
      throw WindowMismatch("hom_space: source quotient ends at grade " + std::to_string(*m.exact_top) +
                           "; required top >= " + std::to_string(*n.max_grade()));
    if (m.exact_floor && n.min_grade() && *n.min_grade() < *m.exact_floor)
      throw WindowMismatch("hom_space: source slice starts at grade " + std::to_string(*m.exact_floor) +
                           "; required floor <= " + std::to_string(*n.min_grade()));
  }
  const LieAlgebra& g = m.algebra();
  auto gens = chevalley(g);
  // g and g (x) t generate g[t], so commuting with them suffices.
  for (int x = 0; x < g.dim(); ++x) gens.emplace_back(x, 1);
  return solve_hom(m, n, gens);
}

std::vector<SparseMatrix> g_hom_space(const TruncatedModule& m, const TruncatedModule& n) {
  return solve_hom(m, n, chevalley(m.algebra()));
}

std::vector<SparseVector> delta_hom_vectors(const Weight& lambda, int r, const TruncatedModule& m) {
  const LieAlgebra& g = m.algebra();
  if (m.exact_floor && r < *m.exact_floor)
    throw WindowMismatch("delta_hom_dim: module slice starts at grade " + std::to_string(*m.exact_floor) +
                         "; required floor <= " + std::to_string(r));
  if (m.exact_top)
    throw WindowMismatch("delta_hom_dim: module is truncated above grade " + std::to_string(*m.exact_top) +
                         "; a full or slice module is required");
  auto blk = m.find_block(r, lambda);
  if (!blk) return {};
  const auto& b = m.blocks()[*blk];
  Echelon sys(b.dim);
  auto add_map = [&](const std::function<SparseVector(const SparseVector&)>& f) {
    std::map<std::size_t, SparseAccumulator> rows;
    for (std::size_t j = 0; j < b.dim; ++j) {
      const SparseVector img = f(SparseVector::unit(b.offset + j));
      for (const auto& [row, c] : img.entries()) rows[row].add(j, c);
    }
    for (auto& [row, acc] : rows) sys.insert(acc.take());
  };
  for (int x = 0; x < g.dim(); ++x)
    for (int k = 0; k <= m.max_degree(); ++k) {
      const bool upper = g.part(x) == LieAlgebra::Part::Upper;
      const bool cartan_positive = g.part(x) == LieAlgebra::Part::Cartan && k >= 1;
      if (upper || cartan_positive) add_map([&](const SparseVector& v) { return m.apply(x, k, v); });
    }
  for (int i = 0; i < g.rank(); ++i)
    add_map([&](const SparseVector& v) {
      SparseVector cur = v;
      for (int p = 0; p <= lambda[i] && !cur.empty(); ++p) cur = m.apply(g.f(i), 0, cur);
      return cur;
    });
  std::vector<SparseVector> out;
  for (const auto& v : sys.kernel_basis()) {
    SparseVector s;
    for (const auto& [j, c] : v.entries()) s.push_back(b.offset + j, c);
    out.push_back(s);
  }
  return out;
}

std::size_t delta_hom_dim(const Weight& lambda, int r, const TruncatedModule& m) {
  return delta_hom_vectors(lambda, r, m).size();
}

namespace {

struct CocycleLayout {
  int max_degree = 0;
  int dim_g = 0;
  std::vector<MapLayout> maps;  // (k-1) * dim_g + x
  std::size_t total = 0;

  CocycleLayout(const TruncatedModule& d, const TruncatedModule& n) {
    const LieAlgebra& g = d.algebra();
    dim_g = g.dim();
    if (d.dim() && n.dim()) max_degree = std::max(0, *n.max_grade() - *d.min_grade());
    std::size_t next = 0;
    for (int k = 1; k <= max_degree; ++k)
      for (int x = 0; x < dim_g; ++x) {
        maps.emplace_back(d, n, k, g.weight(x), next);
        next += maps.back().total;
      }
    total = next;
  }
  const MapLayout* at(int x, int k) const {
    if (k < 1 || k > max_degree) return nullptr;
    return &maps[static_cast<std::size_t>((k - 1) * dim_g + x)];
  }
};

// Lowest root vector; its g-orbit spans g, so pairs (f_theta, b) generate g (x) g.
int lowest_root_vector(const LieAlgebra& g) {
  const Weight theta = g.root_data().positive_roots().back();
  for (int x = 0; x < g.dim(); ++x)
    if (g.weight(x) == -theta) return x;
  throw std::logic_error("lowest root vector not found");
}

void cocycle_equations(const TruncatedModule& d, const TruncatedModule& n, const CocycleLayout& lay,
                       const EquationSink& sys) {
  const LieAlgebra& g = d.algebra();
  std::map<std::size_t, SparseAccumulator> eq;
  // g-equivariance: c([y,x]_k) = y c(x_k) - c(x_k) y.
  for (const auto& [y, zero] : chevalley(g))
    for (int k = 1; k <= lay.max_degree; ++k)
      for (int x = 0; x < g.dim(); ++x) {
        const MapLayout* cx = lay.at(x, k);
        for (std::size_t a = 0; a < d.dim(); ++a) {
          for (const auto& [z, s] : g.bracket(y, x)) lay.at(z, k)->add_value(eq, a, s);
          cx->add_left(eq, n.action(y, 0), a, -1);
          cx->add_right(eq, d.action(y, 0), a, 1);
          flush(sys, eq);
        }
      }
  // c([a,b]_{j+k}) = a_j c(b_k) - c(b_k) a_j - b_k c(a_j) + c(a_j) b_k.
  const int a = lowest_root_vector(g);
  for (int j = 1; j <= lay.max_degree; ++j)
    for (int k = j; j + k <= lay.max_degree; ++k)
      for (int b = 0; b < g.dim(); ++b) {
        const MapLayout* ca = lay.at(a, j);
        const MapLayout* cb = lay.at(b, k);
        for (std::size_t v = 0; v < d.dim(); ++v) {
          for (const auto& [z, s] : g.bracket(a, b)) lay.at(z, j + k)->add_value(eq, v, s);
          cb->add_left(eq, n.action(a, j), v, -1);
          cb->add_right(eq, d.action(a, j), v, 1);
          ca->add_left(eq, n.action(b, k), v, 1);
          ca->add_right(eq, d.action(b, k), v, -1);
          flush(sys, eq);
        }
      }
}

Cocycle to_cocycle(const CocycleLayout& lay, const SparseVector& sol, const TruncatedModule& d,
                   const TruncatedModule& n) {
  Cocycle c;
  c.max_degree = lay.max_degree;
  for (const auto& m : lay.maps) c.values.push_back(m.to_matrix(sol, n.dim(), d.dim()));
  return c;
}

SparseVector from_cocycle(const CocycleLayout& lay, const Cocycle& c, const TruncatedModule& d,
                          const TruncatedModule& n) {
  SparseAccumulator acc;
  for (int k = 1; k <= lay.max_degree; ++k)
    for (int x = 0; x < lay.dim_g; ++x) {
      const MapLayout* m = lay.at(x, k);
      if (k > c.max_degree) continue;
      const SparseMatrix& mat = c.at(x, k, lay.dim_g);
      for (std::size_t a = 0; a < d.dim(); ++a)
        for (const auto& [row, v] : mat.columns[a].entries()) {
          if (row < m->target[a] || row >= m->target[a] + m->count[a])
            throw std::invalid_argument("cocycle value breaks grading");
          acc.add(m->offset[a] + (row - m->target[a]), v);
        }
    }
  (void)n;
  return acc.take();
}

}  // namespace

ExtResult ext1(const std::shared_ptr<const TruncatedModule>& dp, const TruncatedModule& n) {
  const TruncatedModule& d = *dp;
  if (n.exact_top)
    throw WindowMismatch("ext1: target is truncated above grade " + std::to_string(*n.exact_top) +
                         "; a full or slice module is required");
  if (n.exact_floor && d.dim() && *d.min_grade() < *n.exact_floor)
    throw WindowMismatch("ext1: target slice starts at grade " + std::to_string(*n.exact_floor) +
                         "; required floor <= " + std::to_string(*d.min_grade()));
  ExtResult res;
  res.source = dp;
  CocycleLayout lay(d, n);
  if (lay.total == 0) return res;
  Echelon sys(lay.total);
  cocycle_equations(d, n, lay, [&](const SparseVector& row) { sys.insert(row); });
  std::vector<SparseVector> z = sys.kernel_basis();
  res.cocycle_space_dim = z.size();
  if (z.empty()) return res;
  // Coboundaries of g-equivariant degree-zero maps.
  Echelon span(lay.total);
  for (const auto& beta : g_hom_space(d, n)) {
    SparseAccumulator acc;
    for (int k = 1; k <= lay.max_degree; ++k)
      for (int x = 0; x < lay.dim_g; ++x) {
        const MapLayout* m = lay.at(x, k);
        SparseMatrix val = n.action(x, k).multiply(beta);
        val.add(beta.multiply(d.action(x, k)), -1);
        for (std::size_t a = 0; a < d.dim(); ++a)
          for (const auto& [row, v] : val.columns[a].entries()) acc.add(m->offset[a] + (row - m->target[a]), v);
      }
    span.insert(acc.take());
  }
  res.coboundary_dim = span.rank();
  for (const auto& v : z)
    if (span.insert(v)) res.cocycles.push_back(to_cocycle(lay, v, d, n));
  res.dimension = res.cocycles.size();
  return res;
}

ExtResult ext1_from_delta(const Weight& lambda, int r, const TruncatedModule& n) {
  auto d = std::make_shared<const TruncatedModule>(local_weyl_module(n.algebra_ptr(), lambda, r));
  return ext1(d, n);
}

bool is_cocycle(const TruncatedModule& d, const TruncatedModule& n, const Cocycle& c) {
  CocycleLayout lay(d, n);
  SparseVector v;
  try {
    v = from_cocycle(lay, c, d, n);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (int k = lay.max_degree + 1; k <= c.max_degree; ++k)
    for (int x = 0; x < lay.dim_g; ++x)
      if (!c.at(x, k, lay.dim_g).is_zero()) return false;
  if (lay.total == 0) return true;
  bool ok = true;
  cocycle_equations(d, n, lay, [&](const SparseVector& row) {
    if (!ok) return;
    Rational s = 0;
    auto it = v.entries().begin();
    for (const auto& [i, c2] : row.entries()) {
      while (it != v.entries().end() && it->first < i) ++it;
      if (it != v.entries().end() && it->first == i) s += c2 * it->second;
    }
    ok = s == 0;
  });
  return ok;
}

Extension realize_extension(const TruncatedModule& d, const TruncatedModule& n, const std::vector<Cocycle>& cocycles) {
  for (const auto& c : cocycles)
    if (!is_cocycle(d, n, c)) throw std::invalid_argument("realize_extension: input is not a cocycle");
  const std::size_t copies = cocycles.size();
  const LieAlgebra& g = n.algebra();
  std::vector<BasisLabel> labels = n.labels();
  for (std::size_t i = 0; i < copies; ++i) labels.insert(labels.end(), d.labels().begin(), d.labels().end());
  int lo = n.min_grade().value_or(0), hi = n.max_grade().value_or(0);
  if (copies && d.dim()) {
    lo = std::min(lo, *d.min_grade());
    hi = std::max(hi, *d.max_grade());
  }
  std::vector<std::size_t> perm;
  Extension ext{TruncatedModule::from_unsorted(n.algebra_ptr(), labels, hi - lo, &perm),
                SparseMatrix(labels.size(), n.dim()), SparseMatrix(copies * d.dim(), labels.size())};
  TruncatedModule& e = ext.module;
  auto copy_index = [&](std::size_t i, std::size_t a) { return n.dim() + i * d.dim() + a; };
  for (int x = 0; x < g.dim(); ++x)
    for (int k = 0; k <= e.max_degree(); ++k) {
      std::vector<SparseAccumulator> cols(e.dim());
      for (std::size_t c = 0; c < n.dim(); ++c)
        for (const auto& [row, v] : n.action(x, k).columns[c].entries()) cols[perm[c]].add(perm[row], v);
      for (std::size_t i = 0; i < copies; ++i)
        for (std::size_t a = 0; a < d.dim(); ++a) {
          auto& col = cols[perm[copy_index(i, a)]];
          for (const auto& [row, v] : d.action(x, k).columns[a].entries()) col.add(perm[copy_index(i, row)], v);
          if (k >= 1 && k <= cocycles[i].max_degree)
            for (const auto& [row, v] : cocycles[i].at(x, k, g.dim()).columns[a].entries()) col.add(perm[row], v);
        }
      SparseMatrix& act = e.mutable_action(x, k);
      for (std::size_t c = 0; c < e.dim(); ++c) act.columns[c] = cols[c].take();
    }
  for (std::size_t c = 0; c < n.dim(); ++c) ext.inclusion.columns[c] = SparseVector::unit(perm[c]);
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t a = 0; a < d.dim(); ++a)
      ext.projection.columns[perm[copy_index(i, a)]] = SparseVector::unit(i * d.dim() + a);
  e.exact_floor = n.exact_floor;
  return ext;
}

bool extension_splits(const Extension& e, const TruncatedModule& d, std::size_t copy) {
  // Maps s: D -> E with pi_copy s = id form an affine space; solve pi_copy s = id
  // inside the linear span of Hom(D, E).
  auto homs = hom_space(d, e.module, false);
  const std::size_t rows = d.dim() * d.dim();
  Echelon sys(homs.size() + 1);
  // Equation per entry (i, a): sum_h c_h (pi s_h)_{i,a} - delta_{ia} * c_last = 0, c_last = 1.
  std::vector<SparseAccumulator> eq(rows);
  for (std::size_t h = 0; h < homs.size(); ++h) {
    SparseMatrix ps = e.projection.multiply(homs[h]);
    for (std::size_t a = 0; a < d.dim(); ++a)
      for (const auto& [row, v] : ps.columns[a].entries()) {
        if (row < copy * d.dim() || row >= (copy + 1) * d.dim()) continue;
        eq[(row - copy * d.dim()) * d.dim() + a].add(h, v);
      }
  }
  for (std::size_t i = 0; i < d.dim(); ++i) eq[i * d.dim() + i].add(homs.size(), -1);
  for (auto& q : eq) sys.insert(q.take());
  // Consistent iff some kernel vector has a nonzero last coordinate.
  for (const auto& v : sys.kernel_basis())
    if (v.coeff(homs.size()) != 0) return true;
  return false;
}

}  // namespace curalg
