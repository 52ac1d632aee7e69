#include "curalg/tilting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "curalg/character_families.hpp"
#include "curalg/cones.hpp"
#include "curalg/homological.hpp"

namespace curalg {

std::pair<Weight, int> GradeOffsets::label(std::size_t n) const {
  std::size_t s = k - n % (k + 1);
  int l = static_cast<int>(n / (k + 1));
  return {lambdas[s], offsets[s] - l};
}

std::size_t GradeOffsets::last_eta(int floor) const {
  std::size_t last = 0;
  for (std::size_t s = 0; s <= k; ++s) {
    int l = offsets[s] + spreads[s] - floor;
    if (l >= 0) last = std::max(last, eta(s, l));
  }
  return last;
}

std::vector<Weight> cone_prefix(const RootDatum& d, const Weight& lambda) {
  std::vector<Weight> out = dominant_weights_below(d, lambda);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = d.height(a), hb = d.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

GradeOffsets choose_grade_offsets(const RootDatum& d, const Weight& lambda) {
  if (!d.is_dominant(lambda)) throw std::invalid_argument("choose_grade_offsets: weight is not dominant");
  GradeOffsets g;
  g.lambdas = cone_prefix(d, lambda);
  g.k = g.lambdas.size() - 1;
  g.offsets.assign(g.lambdas.size(), 0);
  for (const auto& w : g.lambdas) g.spreads.push_back(delta_spread(d, w));
  int used = g.spreads[g.k];
  for (std::size_t s = g.k; s-- > 0;) {
    g.offsets[s] = used + 1;
    used = g.offsets[s] + g.spreads[s];
  }
  g.top = used;
  return g;
}

namespace {

SparseMatrix identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns[i] = SparseVector::unit(i);
  return m;
}

std::size_t max_block_dim(const TruncatedModule& m) {
  std::size_t best = 1;
  for (const auto& b : m.blocks()) best = std::max(best, b.dim);
  return best;
}

}  // namespace

FittingResult fitting_summand(const TruncatedModule& u, int grade, const Weight& weight, std::uint64_t seed,
                              int budget) {
  auto blk = u.find_block(grade, weight);
  if (!blk || u.blocks()[*blk].dim != 1)
    throw std::invalid_argument("fitting_summand: the distinguished block must be one-dimensional");
  std::mt19937_64 rng(seed);
  FittingResult res;
  res.summand = SubmoduleResult{u, identity(u.dim())};
  int fails = 0;
  while (fails < budget) {
    const TruncatedModule& cur = res.summand.module;
    std::vector<SparseMatrix> ends = hom_space(cur, cur, false);
    if (ends.size() <= 1) break;
    SparseMatrix phi(cur.dim(), cur.dim());
    for (const auto& e : ends) phi.add(e, static_cast<long>(rng() % 11) - 5);
    std::size_t line = cur.blocks()[*cur.find_block(grade, weight)].offset;
    Rational c = phi.columns[line].coeff(line);
    SparseMatrix psi = phi;
    psi.add(identity(cur.dim()), -c);
    SparseMatrix power = psi;
    for (std::size_t i = 1; i < max_block_dim(cur); ++i) power = power.multiply(psi);
    std::vector<SparseVector> image;
    for (const auto& col : power.columns)
      if (!col.empty()) image.push_back(col);
    if (image.empty()) {
      ++fails;
      continue;
    }
    Echelon eqs(cur.dim());
    for (const auto& row : power.transpose().columns)
      if (!row.empty()) eqs.insert(row);
    std::vector<SparseVector> kernel = eqs.kernel_basis();
    SubmoduleResult k = span_submodule(cur, kernel);
    SubmoduleResult im = span_submodule(cur, image);
    for (const auto& v : im.inclusion.columns) res.complement.push_back(res.summand.inclusion.apply(v));
    res.summand = SubmoduleResult{k.module, res.summand.inclusion.multiply(k.inclusion)};
    ++res.splits;
    fails = 0;
  }

  std::vector<SparseVector> both = res.summand.inclusion.columns;
  both.insert(both.end(), res.complement.begin(), res.complement.end());
  std::size_t s_dim = res.summand.module.dim();
  res.projection = SparseMatrix(s_dim, u.dim());
  try {
    BasisSolver solver(u.dim(), both);
    res.certified = both.size() == u.dim();
    span_submodule(u, res.complement);
    for (std::size_t j = 0; j < u.dim(); ++j) {
      SparseVector coords = *solver.coordinates(SparseVector::unit(j));
      SparseVector head;
      for (const auto& [i, v] : coords.entries())
        if (i < s_dim) head.push_back(i, v);
      res.projection.columns[j] = std::move(head);
    }
  } catch (const std::exception&) {
    res.certified = false;
  }
  return res;
}

TiltingBuild build_tilting(const RootDatum& d, const Weight& lambda, int floor, const TiltingOptions& opt) {
  if (floor > 0) throw WindowError("build_tilting: floor must be <= 0");
  TiltingBuild out;
  out.lambda = lambda;
  out.floor = floor;
  out.offsets = choose_grade_offsets(d, lambda);
  out.module = *delta_module(d, lambda, 0);
  out.ledger.add(lambda, 0, 1);
  std::size_t last = out.offsets.last_eta(floor);
  for (std::size_t n = 1; n <= last; ++n) {
    auto [mu, p] = out.offsets.label(n);
    TowerStep step;
    step.eta = n;
    step.mu = mu;
    step.p = p;
    step.dim_before = step.dim_after = out.module.dim();
    if (opt.skip && opt.skip->first == mu && opt.skip->second == p) {
      out.steps.push_back(step);
      continue;
    }
    ExtResult ext = ext1_from_delta(mu, p, out.module);
    step.ext_dim = ext.dimension;
    if (ext.dimension == 0) {
      out.steps.push_back(step);
      continue;
    }
    Extension e = realize_extension(*ext.source, out.module, ext.cocycles);
    for (std::size_t c = 0; c < ext.dimension; ++c)
      if (extension_splits(e, *ext.source, c)) step.non_split = false;
    FittingResult fit = fitting_summand(e.module, 0, lambda, opt.seed + n, opt.fitting_budget);
    step.summand_certified = fit.certified;
    step.fitting_splits = fit.splits;

    // Old basis first, through the projection onto the summand.
    std::vector<SparseVector> basis;
    Echelon span(e.module.dim());
    for (const auto& col : e.inclusion.columns) {
      SparseVector v = fit.summand.inclusion.apply(fit.projection.apply(col));
      if (!span.insert(v)) throw std::logic_error("build_tilting: previous module does not embed in the summand");
      basis.push_back(std::move(v));
    }
    for (const auto& v : fit.summand.inclusion.columns)
      if (span.insert(v)) basis.push_back(v);
    out.module = submodule_with_basis(e.module, basis).module;
    step.dim_after = out.module.dim();
    out.ledger.add(mu, p, static_cast<std::int64_t>(ext.dimension));
    out.steps.push_back(step);
  }
  out.window = grade_slice(out.module, floor).module;
  return out;
}

bool TiltingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TiltingCheck& c) { return c.passed; });
}

TiltingReport verify_tilting(const TruncatedModule& window, const RootDatum& d, const Weight& lambda) {
  if (!window.exact_floor) throw WindowError("verify_tilting: window must be a grade slice");
  if (window.exact_top) throw WindowError("verify_tilting: window must not be truncated from above");
  int floor = *window.exact_floor;
  TiltingReport rep;
  GradedCharacter ch = window.character();

  TiltingCheck ext{"ext-vanishing", true, {}};
  Rational h = d.height(lambda) + 2;
  int hmax = static_cast<int>(h.get_num().get_si() / h.get_den().get_si());
  for (const auto& mu : cone_enumeration(d, hmax))
    for (int s = 1; s >= floor; --s) {
      std::size_t dim = ext1_from_delta(mu, s, window).dimension;
      if (dim != 0) {
        ext.passed = false;
        rep.ext_failures.emplace_back(mu, s);
        ext.failures.push_back("Ext1(Delta(" + to_string(mu) + "," + std::to_string(s) + "), T) = " +
                               std::to_string(dim));
      }
    }
  rep.checks.push_back(ext);

  TiltingCheck delta{"delta-filtration", true, {}};
  rep.delta_peel = decompose_into_deltas(d, ch);
  if (!rep.delta_peel.nonnegative()) {
    delta.passed = false;
    delta.failures.push_back("negative entry in the standard peel");
  }
  if (rep.delta_peel.get(lambda, 0) != 1) {
    delta.passed = false;
    delta.failures.push_back("top entry at (" + to_string(lambda) + ",0) is " +
                             std::to_string(rep.delta_peel.get(lambda, 0)));
  }
  rep.checks.push_back(delta);

  TiltingCheck hull{"hull-containment", true, {}};
  for (const auto& b : window.blocks())
    if (!in_hull(d, b.weight, lambda)) {
      hull.passed = false;
      hull.failures.push_back("weight " + to_string(b.weight) + " at grade " + std::to_string(b.grade));
    }
  rep.checks.push_back(hull);

  TiltingCheck nabla{"nabla-filtration", true, {}};
  rep.nabla_peel = decompose_into_nablas(d, ch, floor);
  for (const auto& [key, m] : rep.nabla_peel.entries)
    if (m < 0) {
      nabla.passed = false;
      nabla.failures.push_back("negative entry at (" + to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  rep.checks.push_back(nabla);
  return rep;
}

}  // namespace curalg
