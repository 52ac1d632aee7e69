#include "curalg/cones.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "curalg/character_families.hpp"
#include "curalg/homological.hpp"
#include "curalg/presentation.hpp"

namespace curalg {

namespace {

using EquationMap = std::map<std::pair<std::size_t, std::size_t>, SparseAccumulator>;

void add_equations(EquationMap& eqs, std::size_t op, std::size_t j, const SparseVector& image) {
  for (const auto& [c, v] : image.entries()) eqs[{op, c}].add(j, v);
}

}  // namespace

ConeSet ConeSet::closure(const RootDatum& d, const std::vector<Weight>& generators) {
  std::set<Weight> all;
  for (const auto& g : generators) {
    if (!d.is_dominant(g)) throw std::invalid_argument("cone generator " + to_string(g) + " is not dominant");
    for (const auto& mu : dominant_weights_below(d, g)) all.insert(mu);
  }
  ConeSet c;
  c.members_.assign(all.begin(), all.end());
  return c;
}

ConeSet ConeSet::exactly(const RootDatum& d, const std::vector<Weight>& members) {
  ConeSet c = closure(d, members);
  std::set<Weight> given(members.begin(), members.end());
  if (given.size() != c.members_.size())
    for (const auto& mu : c.members_)
      if (!given.count(mu))
        throw std::invalid_argument("weight set is not closed under dominance: missing " + to_string(mu));
  return c;
}

bool ConeSet::contains(const Weight& lambda) const {
  return std::binary_search(members_.begin(), members_.end(), lambda);
}

bool ConeSet::allows(const RootDatum& d, const Weight& mu) const {
  Weight dom = d.dominant_representative(mu);
  return contains(dom);
}

std::function<bool(const Weight&)> ConeSet::predicate(const RootDatum& d) const {
  return [this, &d](const Weight& mu) { return allows(d, mu); };
}

ConeSet ConeSet::dual(const RootDatum& d) const {
  ConeSet c;
  for (const auto& w : members_) c.members_.push_back(d.minus_w0(w));
  std::sort(c.members_.begin(), c.members_.end());
  return c;
}

SubmoduleResult max_submodule_in_cones(const TruncatedModule& m, const std::function<bool(const Weight&)>& allowed) {
  const LieAlgebra& g = m.algebra();
  const RootDatum& d = g.root_data();
  Echelon sub(m.dim());
  auto top = m.max_grade();
  if (!top) return span_submodule(m, {});
  std::vector<SparseVector> spanning;

  for (int grade = *top; grade >= *m.min_grade(); --grade) {
    std::deque<SparseVector> queue;
    for (const auto& b : m.blocks()) {
      if (b.grade != grade || !d.is_dominant(b.weight) || !allowed(b.weight)) continue;
      // Rows: one linear condition per (operator, coordinate).
      EquationMap eqs;
      std::size_t op = 0;
      for (std::size_t j = 0; j < b.dim; ++j) {
        op = 0;
        SparseVector unit = SparseVector::unit(b.offset + j);
        for (int i = 0; i < d.rank(); ++i, ++op)
          add_equations(eqs, op, j, m.apply(g.e(i), 0, unit));
        for (int k = 1; k <= m.max_degree() && grade + k <= *top; ++k)
          for (int x = 0; x < g.dim(); ++x, ++op)
            add_equations(eqs, op, j, sub.reduce(m.apply(x, k, unit)));
      }
      Echelon local(b.dim);
      for (auto& [key, acc] : eqs) local.insert(acc.take());
      for (const auto& sol : local.kernel_basis()) {
        SparseVector v;
        for (const auto& [j, c] : sol.entries()) v.push_back(b.offset + j, c);
        queue.push_back(std::move(v));
      }
    }
    // g-span of the highest weight vectors found at this grade.
    while (!queue.empty()) {
      SparseVector v = std::move(queue.front());
      queue.pop_front();
      if (!sub.insert(v)) continue;
      spanning.push_back(v);
      for (int i = 0; i < d.rank(); ++i) {
        SparseVector w = m.apply(g.f(i), 0, v);
        if (!w.empty()) queue.push_back(std::move(w));
      }
    }
  }
  return span_submodule(m, spanning);
}

TruncatedModule injective_slice(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma, int floor) {
  if (!gamma.contains(lambda))
    throw std::invalid_argument("injective_slice: " + to_string(lambda) + " is not in the cone set");
  if (floor > r) throw WindowError("injective_slice: floor above the socle grade");
  auto g = lie_algebra('A', d.rank());
  ConeSet dual_gamma = gamma.dual(d);
  const RootDatum& gd = g->root_data();
  TruncatedModule p =
      projective_cone_slice(g, d.minus_w0(lambda), -r, -floor, [&](const Weight& mu) { return dual_gamma.allows(gd, mu); });
  return dual(p);
}

TruncatedModule injective_slice_via_dual(const RootDatum& d, const Weight& lambda, int r, const ConeSet& gamma,
                                         int floor) {
  if (!gamma.contains(lambda))
    throw std::invalid_argument("injective_slice: " + to_string(lambda) + " is not in the cone set");
  auto g = lie_algebra('A', d.rank());
  TruncatedModule full = dual(projective_slice(g, d.minus_w0(lambda), -r, -floor));
  return max_submodule_in_cones(full, gamma.predicate(g->root_data())).module;
}

MultiplicityTable socle(const TruncatedModule& m) {
  if (m.exact_top) throw WindowError("socle: module is truncated from above at grade " + std::to_string(*m.exact_top));
  const LieAlgebra& g = m.algebra();
  const RootDatum& d = g.root_data();
  MultiplicityTable t;
  t.valid_floor = m.exact_floor;
  for (const auto& b : m.blocks()) {
    if (!d.is_dominant(b.weight)) continue;
    EquationMap eqs;
    for (std::size_t j = 0; j < b.dim; ++j) {
      SparseVector unit = SparseVector::unit(b.offset + j);
      std::size_t op = 0;
      for (int i = 0; i < d.rank(); ++i, ++op)
        add_equations(eqs, op, j, m.apply(g.e(i), 0, unit));
      for (int k = 1; k <= m.max_degree(); ++k)
        for (int x = 0; x < g.dim(); ++x, ++op)
          add_equations(eqs, op, j, m.apply(x, k, unit));
    }
    Echelon local(b.dim);
    for (auto& [key, acc] : eqs) local.insert(acc.take());
    t.add(b.weight, b.grade, static_cast<std::int64_t>(b.dim - local.rank()));
  }
  return t;
}

std::vector<Weight> cone_enumeration(const RootDatum& d, int max_height) {
  std::vector<Weight> out = dominant_weights_by_height(d, max_height);
  return out;
}

FiltrationReport canonical_filtration(const RootDatum& d, const TruncatedModule& m) {
  if (m.exact_top)
    throw WindowError("canonical_filtration: module is truncated from above at grade " + std::to_string(*m.exact_top));
  FiltrationReport rep;
  rep.lhs = m.character();

  // Enumerate far enough that every weight of M lies in some cone.
  Rational hmax = 0;
  std::set<Weight> dominant_support;
  for (const auto& b : m.blocks()) {
    Weight dom = d.dominant_representative(b.weight);
    dominant_support.insert(dom);
    hmax = std::max(hmax, d.height(dom));
  }
  int hbound = static_cast<int>(hmax.get_num().get_si() / std::max<long>(1, hmax.get_den().get_si())) + 1;
  std::vector<Weight> order = cone_enumeration(d, hbound);
  std::size_t last = 0;
  for (const auto& w : dominant_support) {
    auto it = std::find(order.begin(), order.end(), w);
    if (it == order.end()) throw std::logic_error("canonical_filtration: enumeration too short");
    last = std::max(last, static_cast<std::size_t>(it - order.begin()));
  }

  ConeSet gamma;
  GradedCharacter prev;
  std::vector<Weight> members;
  for (std::size_t s = 0; s <= last; ++s) {
    members.push_back(order[s]);
    std::vector<Weight> sorted_members = members;
    std::sort(sorted_members.begin(), sorted_members.end());
    auto allowed = [&](const Weight& mu) {
      Weight dom = d.dominant_representative(mu);
      return std::binary_search(sorted_members.begin(), sorted_members.end(), dom);
    };
    SubmoduleResult ms = max_submodule_in_cones(m, allowed);
    GradedCharacter ch = ms.module.character();
    FiltrationStep step;
    step.lambda = order[s];
    step.dim = ms.module.dim();
    step.quotient = ch - prev;
    for (const auto& [k, v] : prev.entries())
      if (k.weight == order[s] && v != 0) step.previous_misses_lambda = false;
    if (!step.previous_misses_lambda)
      rep.violations.push_back("M_" + std::to_string(s) + " predecessor has weight " + to_string(order[s]));
    prev = ch;
    rep.chain.push_back(std::move(step));
  }

  // Right-hand side on a window reaching below the support of M.
  int floor = m.exact_floor ? *m.exact_floor : m.min_grade().value_or(0) - 2;
  rep.compare_floor = floor;
  GradedCharacter rhs;
  rhs.set_floor(floor);
  for (std::size_t s = 0; s <= last; ++s) {
    const Weight& lambda = order[s];
    for (const auto& b : m.blocks()) {
      if (b.weight != lambda) continue;
      if (m.exact_floor && b.grade < *m.exact_floor) continue;
      std::size_t h = delta_hom_dim(lambda, b.grade, m);
      if (h == 0) continue;
      rep.hom_dims.add(lambda, b.grade, static_cast<std::int64_t>(h));
      rhs = rhs + nabla_character(d, lambda, b.grade, floor).scaled(static_cast<std::int64_t>(h));
    }
  }
  rep.hom_dims.valid_floor = floor;
  rep.rhs = rhs;
  GradedCharacter lhs = rep.lhs;
  if (!m.exact_floor) lhs.set_floor(floor);
  GradedCharacter diff = rhs - lhs;
  rep.inequality_holds = diff.nonnegative();
  rep.equality = diff.empty();
  for (const auto& [k, v] : diff.entries())
    if (v < 0)
      rep.violations.push_back("inequality fails at grade " + std::to_string(k.grade) + " weight " + to_string(k.weight));
  return rep;
}

}  // namespace curalg
