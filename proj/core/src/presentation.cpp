#include "curalg/presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "curalg/irreducible.hpp"
#include "modular.hpp"

namespace curalg {

ModulePresentation ModulePresentation::projective(const Weight& lambda, int r) {
  return ModulePresentation{Kind::Projective, lambda, r, {}};
}

ModulePresentation ModulePresentation::global_weyl(const Weight& lambda, int r) {
  return ModulePresentation{Kind::GlobalWeyl, lambda, r, {}};
}

ModulePresentation ModulePresentation::local_weyl(const Weight& lambda, int r) {
  return ModulePresentation{Kind::LocalWeyl, lambda, r, {}};
}

std::vector<EnvElement> ModulePresentation::relations_of_degree(const LieAlgebra& g, int k) const {
  std::vector<EnvElement> out;
  if (kind == Kind::GlobalWeyl || kind == Kind::LocalWeyl)
    for (int x = 0; x < g.dim(); ++x)
      if (g.part(x) == LieAlgebra::Part::Upper) out.push_back(EnvElement::letter(x, k));
  if (kind == Kind::LocalWeyl)
    for (int i = 0; i < g.rank(); ++i) out.push_back(EnvElement::letter(g.h(i), k));
  for (const auto& e : extra_relations)
    if (!e.is_zero() && e.grade() == k) out.push_back(e);
  return out;
}

void ModulePresentation::validate(const LieAlgebra& g) const {
  if (!g.root_data().is_dominant(lambda)) throw std::invalid_argument("generator weight is not dominant");
  for (const auto& e : extra_relations) {
    if (!e.homogeneous(g)) throw std::invalid_argument("relation is not homogeneous: " + e.to_string(g));
    if (!e.is_zero() && e.grade() < 1) throw std::invalid_argument("relations must have positive grade");
  }
}

namespace {

struct Grade {
  int grade = 0;
  std::vector<Weight> weights;             // per basis vector, sorted by weight
  std::map<Weight, std::size_t> offset;     // first basis vector of each weight
  std::vector<SparseMatrix> deg0;           // deg0[y]: Q[g] -> Q[g]
  std::map<int, std::vector<SparseMatrix>> raise;  // raise[k][x]: Q[g-k] -> Q[g]
  std::vector<SparseVector> generators;     // highest weight vectors

  std::size_t dim() const { return weights.size(); }
};

// Highest weight vectors of a finite-dimensional g-module piece.
std::vector<SparseVector> highest_weight_vectors(const LieAlgebra& g, const Grade& q) {
  std::vector<SparseVector> out;
  const RootDatum& d = g.root_data();
  for (const auto& [w, off] : q.offset) {
    if (!d.is_dominant(w)) continue;
    std::size_t n = 0;
    while (off + n < q.dim() && q.weights[off + n] == w) ++n;
    Echelon eqs(n);
    for (int i = 0; i < g.rank(); ++i) {
      const SparseMatrix& e = q.deg0[static_cast<std::size_t>(g.e(i))];
      std::map<std::size_t, SparseAccumulator> rows;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [row, c] : e.columns[off + j].entries()) rows[row].add(j, c);
      for (auto& [row, acc] : rows) eqs.insert(acc.take());
    }
    for (auto& v : eqs.kernel_basis()) {
      SparseVector shifted;
      for (const auto& [j, c] : v.entries()) shifted.push_back(off + j, c);
      out.push_back(shifted);
    }
  }
  return out;
}

class GradeBuilder {
 public:
  GradeBuilder(const LieAlgebra& g, const std::vector<Grade>& done, int r, int target,
               const std::function<bool(const Weight&)>& allowed)
      : g_(g), done_(done), r_(r), target_(target), allowed_(allowed) {
    enumerate();
  }

  std::size_t symbol_count() const { return coord_k_.size(); }

  // Vector in coordinate space for x (x) t^k applied to v in Q[target - k].
  SparseVector symbol(int k, int x, const SparseVector& v) const {
    SparseAccumulator acc;
    const auto& idx = index_.at(k);
    const std::size_t n = grade_of(target_ - k).dim();
    for (const auto& [j, c] : v.entries()) acc.add(idx[static_cast<std::size_t>(x) * n + j], c);
    return acc.take();
  }

  // y . (k, x, j) = (k, [y,x], j) + (k, x, y.j)
  SparseVector act(int y, const SparseVector& v) const {
    SparseAccumulator acc;
    for (const auto& [c, val] : v.entries()) {
      const int k = coord_k_[c];
      const int x = coord_x_[c];
      const std::size_t j = coord_j_[c];
      const Grade& src = grade_of(target_ - k);
      const auto& idx = index_.at(k);
      const std::size_t n = src.dim();
      for (const auto& [z, s] : g_.bracket(y, x)) acc.add(idx[static_cast<std::size_t>(z) * n + j], val * s);
      for (const auto& [m, s] : src.deg0[static_cast<std::size_t>(y)].columns[j].entries())
        acc.add(idx[static_cast<std::size_t>(x) * n + m], val * s);
    }
    return acc.take();
  }

  void add_relation(const SparseVector& v) {
    if (v.empty()) return;
    const std::size_t b = coord_block_[v.entries().front().first];
    if (!blocks_[b].allowed) return;
    insert(b, v);
  }

  // Kills every disallowed weight together with the g-submodule it generates.
  void kill_disallowed() {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].allowed) continue;
      for (std::size_t l = 0; l < blocks_[b].size; ++l) {
        SparseVector unit = SparseVector::unit(blocks_[b].offset + l);
        for (int i = 0; i < g_.rank(); ++i)
          for (int y : {g_.e(i), g_.f(i)}) push_allowed_part(act(y, unit));
      }
    }
  }

  // Closes the seed relations under e_i, f_i. The closure is first found
  // over F_p, then reconstructed over Q and certified; if that fails the
  // exact closure is used.
  void close() {
    for (modular::u64 p : modular::kPrimes)
      if (close_modular(modular::Field{p})) return;
    close_exact();
  }

  // Finishes the grade: basis = non-pivot coordinates of allowed blocks.
  Grade finish(int max_degree) {
    Grade q;
    q.grade = target_;
    basis_of_.assign(coord_k_.size(), -1);
    for (auto& blk : blocks_) {
      if (!blk.allowed) continue;
      blk.ech.make_reduced();
      for (std::size_t l = 0; l < blk.size; ++l)
        if (!blk.ech.is_pivot(l)) {
          if (!q.offset.count(blk.weight)) q.offset[blk.weight] = q.weights.size();
          basis_of_[blk.offset + l] = static_cast<long>(q.weights.size());
          q.weights.push_back(blk.weight);
        }
    }
    const std::size_t dim = q.dim();
    // Normal forms of every coordinate.
    normal_.assign(coord_k_.size(), SparseVector());
    for (const auto& blk : blocks_) {
      if (!blk.allowed) continue;
      for (std::size_t l = 0; l < blk.size; ++l) {
        const std::size_t c = blk.offset + l;
        if (basis_of_[c] >= 0) {
          normal_[c] = SparseVector::unit(static_cast<std::size_t>(basis_of_[c]));
          continue;
        }
      }
      for (const auto& row : blk.ech.rows()) {
        const std::size_t p = blk.offset + row.entries().front().first;
        SparseAccumulator acc;
        for (std::size_t e = 1; e < row.entries().size(); ++e) {
          const auto& [l, val] = row.entries()[e];
          acc.add(static_cast<std::size_t>(basis_of_[blk.offset + l]), -val);
        }
        normal_[p] = acc.take();
      }
    }
    auto nf = [&](const SparseVector& v) {
      SparseAccumulator acc;
      for (const auto& [c, val] : v.entries()) acc.add_scaled(normal_[c], val);
      return acc.take();
    };
    for (int k = 1; k <= target_ - r_ && k <= max_degree; ++k) {
      const Grade& src = grade_of(target_ - k);
      std::vector<SparseMatrix> mats;
      for (int x = 0; x < g_.dim(); ++x) {
        SparseMatrix m(dim, src.dim());
        for (std::size_t j = 0; j < src.dim(); ++j) m.columns[j] = nf(symbol(k, x, SparseVector::unit(j)));
        mats.push_back(std::move(m));
      }
      q.raise[k] = std::move(mats);
    }
    // Degree-zero action on the new basis, computed from representing symbols.
    std::vector<std::size_t> rep(dim);
    for (std::size_t c = 0; c < coord_k_.size(); ++c)
      if (basis_of_[c] >= 0) rep[static_cast<std::size_t>(basis_of_[c])] = c;
    q.deg0.assign(static_cast<std::size_t>(g_.dim()), SparseMatrix(dim, dim));
    for (int y = 0; y < g_.dim(); ++y)
      for (std::size_t b = 0; b < dim; ++b)
        q.deg0[static_cast<std::size_t>(y)].columns[b] = nf(act(y, SparseVector::unit(rep[b])));
    return q;
  }

 private:
  struct Block {
    Weight weight;
    bool allowed = true;
    std::size_t offset = 0;
    std::size_t size = 0;
    Echelon ech;
  };

  const Grade& grade_of(int grade) const { return done_[static_cast<std::size_t>(grade - r_)]; }

  void enumerate() {
    // Coordinates ordered by k descending so that pivots (eliminated
    // symbols) prefer high t-degree and the basis keeps degree-one symbols.
    std::map<Weight, std::vector<std::size_t>> members;
    std::vector<Weight> wts;
    for (int k = target_ - r_; k >= 1; --k) {
      const Grade& src = grade_of(target_ - k);
      auto& idx = index_[k];
      idx.assign(static_cast<std::size_t>(g_.dim()) * src.dim(), 0);
      for (int x = 0; x < g_.dim(); ++x)
        for (std::size_t j = 0; j < src.dim(); ++j) {
          const std::size_t c = coord_k_.size();
          coord_k_.push_back(k);
          coord_x_.push_back(x);
          coord_j_.push_back(j);
          idx[static_cast<std::size_t>(x) * src.dim() + j] = c;
          Weight w = g_.weight(x) + src.weights[j];
          members[w].push_back(c);
        }
    }
    // Renumber so that each weight block is contiguous, keeping the order.
    std::vector<std::size_t> renum(coord_k_.size());
    std::size_t next = 0;
    for (auto& [w, list] : members) {
      Block blk;
      blk.weight = w;
      blk.allowed = !allowed_ || allowed_(w);
      blk.offset = next;
      blk.size = list.size();
      blk.ech = Echelon(blk.allowed ? list.size() : 0, true);
      for (std::size_t c : list) renum[c] = next++;
      blocks_.push_back(std::move(blk));
    }
    auto permute = [&](auto& vec) {
      auto copy = vec;
      for (std::size_t c = 0; c < copy.size(); ++c) vec[renum[c]] = copy[c];
    };
    permute(coord_k_);
    permute(coord_x_);
    permute(coord_j_);
    for (auto& [k, idx] : index_)
      for (auto& c : idx) c = renum[c];
    coord_block_.resize(coord_k_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t l = 0; l < blocks_[b].size; ++l) coord_block_[blocks_[b].offset + l] = b;
  }

  SparseVector global(std::size_t b, const SparseVector& local) const {
    SparseVector out;
    for (const auto& [l, c] : local.entries()) out.push_back(blocks_[b].offset + l, c);
    return out;
  }

  void insert(std::size_t b, const SparseVector& v) {
    SparseVector local;
    for (const auto& [c, val] : v.entries()) {
      if (coord_block_[c] != b) throw std::logic_error("relation vector is not weight-homogeneous");
      local.push_back(c - blocks_[b].offset, val);
    }
    seeds_.emplace_back(b, std::move(local));
  }

  void close_exact() {
    std::vector<std::pair<std::size_t, std::size_t>> work;
    auto insert_exact = [&](std::size_t b, const SparseVector& local) {
      if (auto row = blocks_[b].ech.insert(local)) work.emplace_back(b, *row);
    };
    for (const auto& [b, local] : seeds_) insert_exact(b, local);
    while (!work.empty()) {
      auto [b, row] = work.back();
      work.pop_back();
      SparseVector v = global(b, blocks_[b].ech.rows()[row]);
      for (int i = 0; i < g_.rank(); ++i)
        for (int y : {g_.e(i), g_.f(i)})
          for (auto& [bb, part] : allowed_parts(act(y, v))) insert_exact(bb, to_local(bb, part));
    }
  }

  struct NotIntegral {};

  using ModVector = std::vector<std::pair<std::size_t, modular::u64>>;

  bool close_modular(const modular::Field& f) {
    try {
      return try_close_modular(f);
    } catch (const NotIntegral&) {
      return false;
    }
  }

  bool try_close_modular(const modular::Field& f) {
    auto conv = [&](const Rational& q) {
      auto v = f.from(q);
      if (!v) throw NotIntegral{};
      return *v;
    };
    std::vector<std::optional<modular::DenseEchelon>> ech(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b].allowed) ech[b].emplace(f, blocks_[b].size);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    auto insert_dense = [&](std::size_t b, std::vector<modular::u64> dense) {
      if (auto row = ech[b]->insert(std::move(dense))) work.emplace_back(b, *row);
    };
    for (const auto& [b, local] : seeds_) {
      std::vector<modular::u64> dense(blocks_[b].size, 0);
      for (const auto& [l, val] : local.entries()) dense[l] = conv(val);
      insert_dense(b, std::move(dense));
    }
    // Cached reductions of the structure constants and degree-zero actions.
    std::map<std::pair<int, int>, std::vector<std::pair<int, modular::u64>>> bracket;
    std::map<std::pair<int, int>, std::vector<ModVector>> deg0;
    auto bracket_of = [&](int y, int x) -> const std::vector<std::pair<int, modular::u64>>& {
      auto [it, fresh] = bracket.try_emplace({y, x});
      if (fresh)
        for (const auto& [z, s] : g_.bracket(y, x)) it->second.emplace_back(z, conv(s));
      return it->second;
    };
    auto deg0_of = [&](int k, int y) -> const std::vector<ModVector>& {
      auto [it, fresh] = deg0.try_emplace({k, y});
      if (fresh) {
        const SparseMatrix& m = grade_of(target_ - k).deg0[static_cast<std::size_t>(y)];
        it->second.resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j)
          for (const auto& [row, s] : m.columns[j].entries()) it->second[j].emplace_back(row, conv(s));
      }
      return it->second;
    };
    while (!work.empty()) {
      auto [b, r] = work.back();
      work.pop_back();
      const auto& row = ech[b]->row(r);
      ModVector v;
      for (std::size_t l = 0; l < row.size(); ++l)
        if (row[l]) v.emplace_back(blocks_[b].offset + l, row[l]);
      for (int i = 0; i < g_.rank(); ++i)
        for (int y : {g_.e(i), g_.f(i)}) {
          std::map<std::size_t, std::vector<modular::u64>> parts;
          auto add = [&](std::size_t c, modular::u64 val) {
            const std::size_t bb = coord_block_[c];
            if (!blocks_[bb].allowed) return;
            auto& dense = parts[bb];
            if (dense.empty()) dense.assign(blocks_[bb].size, 0);
            auto& slot = dense[c - blocks_[bb].offset];
            slot = f.add(slot, val);
          };
          for (const auto& [c, val] : v) {
            const int k = coord_k_[c];
            const int x = coord_x_[c];
            const std::size_t j = coord_j_[c];
            const auto& idx = index_.at(k);
            const std::size_t n = grade_of(target_ - k).dim();
            for (const auto& [z, s] : bracket_of(y, x)) add(idx[static_cast<std::size_t>(z) * n + j], f.mul(val, s));
            for (const auto& [m, s] : deg0_of(k, y)[j]) add(idx[static_cast<std::size_t>(x) * n + m], f.mul(val, s));
          }
          for (auto& [bb, dense] : parts) insert_dense(bb, std::move(dense));
        }
    }
    // Reconstruct the reduced rows over Q.
    std::vector<Echelon> exact(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b].allowed) continue;
      exact[b] = Echelon(blocks_[b].size, true);
      for (std::size_t r = 0; r < ech[b]->rank(); ++r) {
        const auto& row = ech[b]->row(r);
        SparseVector q;
        for (std::size_t l = 0; l < row.size(); ++l)
          if (row[l]) {
            auto val = f.reconstruct(row[l]);
            if (!val) return false;
            q.push_back(l, *val);
          }
        if (!exact[b].insert(q)) return false;
      }
    }
    // Certificate: the reconstructed span contains the seeds and is stable.
    // Its dimension is the rank over F_p, which bounds the rank over Q, so
    // it is the relation space itself.
    bool certified = false;
    try {
      certified = certify_small(exact);
    } catch (const modular::Small::Overflow&) {
      certified = certify_exact(exact);
    }
    if (!certified) return false;
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b].allowed) blocks_[b].ech = std::move(exact[b]);
    return true;
  }

  bool certify_exact(const std::vector<Echelon>& exact) const {
    for (const auto& [b, local] : seeds_)
      if (!exact[b].reduce(local).empty()) return false;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b].allowed) continue;
      for (const auto& row : exact[b].rows()) {
        SparseVector v = global(b, row);
        for (int i = 0; i < g_.rank(); ++i)
          for (int y : {g_.e(i), g_.f(i)})
            for (auto& [bb, part] : allowed_parts(act(y, v)))
              if (!exact[bb].reduce(to_local(bb, part)).empty()) return false;
      }
    }
    return true;
  }

  // Same test as certify_exact in 64-bit rationals; throws Small::Overflow.
  bool certify_small(const std::vector<Echelon>& exact) const {
    using modular::Small;
    using SmallVector = std::vector<std::pair<std::size_t, Small>>;
    struct Reduced {
      std::vector<long> pivot_row;
      std::vector<SmallVector> rows;  // block-local, pivot entry first
    };
    std::vector<Reduced> red(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b].allowed) continue;
      red[b].pivot_row.assign(blocks_[b].size, -1);
      for (const auto& row : exact[b].rows()) {
        SmallVector r;
        for (const auto& [l, val] : row.entries()) r.emplace_back(l, Small::from(val));
        red[b].pivot_row[r.front().first] = static_cast<long>(red[b].rows.size());
        red[b].rows.push_back(std::move(r));
      }
    }
    std::vector<Small> scratch;
    std::vector<std::size_t> touched;
    // v is block-local to b; rows are fully reduced, so one pass suffices.
    auto member = [&](std::size_t b, const SmallVector& v) {
      scratch.assign(blocks_[b].size, Small{});
      touched.clear();
      auto add = [&](std::size_t l, const Small& c) {
        if (scratch[l].zero()) touched.push_back(l);
        scratch[l] = scratch[l] + c;
      };
      for (const auto& [l, c] : v) {
        add(l, c);
        const long r = red[b].pivot_row[l];
        if (r < 0) continue;
        for (const auto& [m, rc] : red[b].rows[static_cast<std::size_t>(r)]) add(m, -(c * rc));
      }
      for (std::size_t l : touched)
        if (!scratch[l].zero()) return false;
      return true;
    };
    for (const auto& [b, local] : seeds_) {
      SmallVector v;
      for (const auto& [l, val] : local.entries()) v.emplace_back(l, Small::from(val));
      if (!member(b, v)) return false;
    }
    std::map<std::pair<int, int>, std::vector<std::pair<int, Small>>> bracket;
    std::map<std::pair<int, int>, std::vector<SmallVector>> deg0;
    auto bracket_of = [&](int y, int x) -> const std::vector<std::pair<int, Small>>& {
      auto [it, fresh] = bracket.try_emplace({y, x});
      if (fresh)
        for (const auto& [z, s] : g_.bracket(y, x)) it->second.emplace_back(z, Small{s, 1});
      return it->second;
    };
    auto deg0_of = [&](int k, int y) -> const std::vector<SmallVector>& {
      auto [it, fresh] = deg0.try_emplace({k, y});
      if (fresh) {
        const SparseMatrix& m = grade_of(target_ - k).deg0[static_cast<std::size_t>(y)];
        it->second.resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j)
          for (const auto& [row, s] : m.columns[j].entries()) it->second[j].emplace_back(row, Small::from(s));
      }
      return it->second;
    };
    SmallVector raw;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b].allowed) continue;
      for (const auto& row : red[b].rows)
        for (int i = 0; i < g_.rank(); ++i)
          for (int y : {g_.e(i), g_.f(i)}) {
            raw.clear();
            for (const auto& [l, val] : row) {
              const std::size_t c = blocks_[b].offset + l;
              const int k = coord_k_[c];
              const int x = coord_x_[c];
              const std::size_t j = coord_j_[c];
              const auto& idx = index_.at(k);
              const std::size_t n = grade_of(target_ - k).dim();
              for (const auto& [z, s] : bracket_of(y, x)) raw.emplace_back(idx[static_cast<std::size_t>(z) * n + j], val * s);
              for (const auto& [m, s] : deg0_of(k, y)[j]) raw.emplace_back(idx[static_cast<std::size_t>(x) * n + m], val * s);
            }
            std::sort(raw.begin(), raw.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
            // Group by block; each group is checked for membership.
            std::size_t pos = 0;
            while (pos < raw.size()) {
              const std::size_t bb = coord_block_[raw[pos].first];
              SmallVector part;
              while (pos < raw.size() && coord_block_[raw[pos].first] == bb) {
                part.emplace_back(raw[pos].first - blocks_[bb].offset, raw[pos].second);
                ++pos;
              }
              if (blocks_[bb].allowed && !member(bb, part)) return false;
            }
          }
    }
    return true;
  }

  SparseVector to_local(std::size_t b, const SparseVector& v) const {
    SparseVector local;
    for (const auto& [c, val] : v.entries()) local.push_back(c - blocks_[b].offset, val);
    return local;
  }

  std::map<std::size_t, SparseVector> allowed_parts(const SparseVector& v) const {
    std::map<std::size_t, SparseVector> parts;
    for (const auto& [c, val] : v.entries()) {
      const std::size_t b = coord_block_[c];
      if (blocks_[b].allowed) parts[b].push_back(c, val);
    }
    return parts;
  }

  void push_allowed_part(const SparseVector& v) {
    // Components in disallowed blocks are already zero.
    for (auto& [b, p] : allowed_parts(v)) insert(b, p);
  }

  const LieAlgebra& g_;
  const std::vector<Grade>& done_;
  int r_;
  int target_;
  const std::function<bool(const Weight&)>& allowed_;

  std::vector<int> coord_k_;
  std::vector<int> coord_x_;
  std::vector<std::size_t> coord_j_;
  std::vector<std::size_t> coord_block_;
  std::map<int, std::vector<std::size_t>> index_;
  std::vector<Block> blocks_;
  std::vector<std::pair<std::size_t, SparseVector>> seeds_;
  std::vector<long> basis_of_;
  std::vector<SparseVector> normal_;
};

// Evaluates a relation on the generator; the final letters of positive
// degree land in the symbol space of the target grade.
SparseVector evaluate_relation(const std::vector<Grade>& done, const GradeBuilder& builder,
                               int r, int target, const EnvElement& rel, std::size_t generator) {
  SparseAccumulator total;
  for (const auto& [word, coeff] : rel.terms()) {
    SparseVector cur = SparseVector::unit(generator);
    int grade = r;
    bool symbolic = false;
    for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) {
      const int x = it->x, d = it->degree;
      if (symbolic) {
        if (d != 0) throw std::logic_error("relation exceeds its grade");
        cur = builder.act(x, cur);
      } else if (grade + d < target) {
        const Grade& q = done[static_cast<std::size_t>(grade + d - r)];
        cur = d == 0 ? q.deg0[static_cast<std::size_t>(x)].apply(cur)
                     : q.raise.at(d)[static_cast<std::size_t>(x)].apply(cur);
        grade += d;
      } else {
        if (d == 0) throw std::logic_error("relation grade mismatch");
        cur = builder.symbol(d, x, cur);
        grade += d;
        symbolic = true;
      }
    }
    if (!cur.empty() && !symbolic) throw std::logic_error("relation does not reach its grade");
    total.add_scaled(cur, coeff);
  }
  return total.take();
}

}  // namespace

TruncatedModule close_presentation(const std::shared_ptr<const LieAlgebra>& gp, const ModulePresentation& p,
                                   const EngineOptions& opt, EngineStats* stats) {
  const LieAlgebra& g = *gp;
  p.validate(g);
  const int r = p.grade;
  if (!opt.top && !opt.stop_at_zero_grade) throw std::invalid_argument("close_presentation needs a top grade");
  if (opt.top && *opt.top < r) throw std::invalid_argument("top grade below the generator grade");
  if (opt.allowed && !opt.allowed(p.lambda)) throw std::invalid_argument("generator weight is not allowed");
  const int last = opt.top ? *opt.top : r + opt.grade_limit;
  const int max_degree = last - r;

  std::vector<Grade> done;
  {
    TruncatedModule v = irreducible_module(gp, p.lambda, r);
    Grade q;
    q.grade = r;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (!q.offset.count(v.label(i).weight)) q.offset[v.label(i).weight] = i;
      q.weights.push_back(v.label(i).weight);
    }
    for (int y = 0; y < g.dim(); ++y) q.deg0.push_back(v.action(y, 0));
    q.generators = highest_weight_vectors(g, q);
    done.push_back(std::move(q));
    if (stats) {
      stats->symbols_per_grade.push_back(0);
      stats->dims_per_grade.push_back(v.dim());
    }
  }
  const std::size_t generator = done[0].offset.at(p.lambda);
  bool finite = false;
  for (int target = r + 1; target <= last; ++target) {
    GradeBuilder b(g, done, r, target, opt.allowed);
    // Commutation relations a_j (b_k q) - b_k (a_j q) - [a,b]_{j+k} q.
    for (int j = 1; 2 * j <= target - r; ++j)
      for (int k = j; j + k <= target - r; ++k) {
        const Grade& base = done[static_cast<std::size_t>(target - j - k - r)];
        const Grade& at_j = done[static_cast<std::size_t>(target - j - r)];  // holds b_k q
        const Grade& at_k = done[static_cast<std::size_t>(target - k - r)];  // holds a_j q
        for (const auto& q : base.generators)
          for (int a = 0; a < g.dim(); ++a)
            for (int bb = (j == k ? a + 1 : 0); bb < g.dim(); ++bb) {
              SparseVector bq = at_j.raise.at(k)[static_cast<std::size_t>(bb)].apply(q);
              SparseVector aq = at_k.raise.at(j)[static_cast<std::size_t>(a)].apply(q);
              SparseVector rel = b.symbol(j, a, bq);
              rel.add_scaled(b.symbol(k, bb, aq), -1);
              for (const auto& [z, c] : g.bracket(a, bb)) rel.add_scaled(b.symbol(j + k, z, q), -c);
              b.add_relation(rel);
            }
      }
    for (const auto& rel : p.relations_of_degree(g, target - r)) {
      SparseVector v = evaluate_relation(done, b, r, target, rel, generator);
      b.add_relation(v);
    }
    if (opt.allowed) b.kill_disallowed();
    b.close();
    Grade q = b.finish(max_degree);
    if (stats) {
      stats->symbols_per_grade.push_back(b.symbol_count());
      stats->dims_per_grade.push_back(q.dim());
    }
    if (q.dim() == 0 && opt.stop_at_zero_grade) {
      finite = true;
      break;
    }
    q.generators = highest_weight_vectors(g, q);
    done.push_back(std::move(q));
  }
  if (opt.stop_at_zero_grade && !finite && !opt.top)
    throw std::runtime_error("module did not terminate within the grade limit");

  // Assemble the module; blocks are already in (grade, weight) order.
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> offset;
  for (const auto& q : done) {
    offset.push_back(labels.size());
    for (const auto& w : q.weights) labels.push_back(BasisLabel{q.grade, w});
  }
  const int span = static_cast<int>(done.size()) - 1;
  TruncatedModule m(gp, labels, span);
  for (std::size_t gi = 0; gi < done.size(); ++gi) {
    const Grade& q = done[gi];
    for (int y = 0; y < g.dim(); ++y) {
      SparseMatrix& a = m.mutable_action(y, 0);
      for (std::size_t c = 0; c < q.dim(); ++c) {
        SparseVector col;
        for (const auto& [row, v] : q.deg0[static_cast<std::size_t>(y)].columns[c].entries())
          col.push_back(offset[gi] + row, v);
        a.columns[offset[gi] + c] = col;
      }
    }
    for (const auto& [k, mats] : q.raise) {
      if (k > span) continue;
      const std::size_t src = gi - static_cast<std::size_t>(k);
      for (int x = 0; x < g.dim(); ++x) {
        SparseMatrix& a = m.mutable_action(x, k);
        const SparseMatrix& mat = mats[static_cast<std::size_t>(x)];
        for (std::size_t c = 0; c < mat.cols; ++c) {
          SparseVector col;
          for (const auto& [row, v] : mat.columns[c].entries()) col.push_back(offset[gi] + row, v);
          a.columns[offset[src] + c] = col;
        }
      }
    }
  }
  if (!finite) m.exact_top = last;
  return m;
}

TruncatedModule projective_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int top) {
  if (top < r) throw std::invalid_argument("projective_slice: top grade below r");
  EngineOptions opt;
  opt.top = top;
  return close_presentation(g, ModulePresentation::projective(lambda, r), opt);
}

TruncatedModule projective_cone_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r,
                                      int top, const std::function<bool(const Weight&)>& allowed) {
  if (top < r) throw std::invalid_argument("projective_cone_slice: top grade below r");
  EngineOptions opt;
  opt.top = top;
  opt.allowed = allowed;
  return close_presentation(g, ModulePresentation::projective(lambda, r), opt);
}

TruncatedModule local_weyl_module(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r) {
  EngineOptions opt;
  opt.stop_at_zero_grade = true;
  return close_presentation(g, ModulePresentation::local_weyl(lambda, r), opt);
}

TruncatedModule global_weyl_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int top) {
  if (top < r) throw std::invalid_argument("global_weyl_slice: top grade below r");
  EngineOptions opt;
  opt.top = top;
  return close_presentation(g, ModulePresentation::global_weyl(lambda, r), opt);
}

TruncatedModule nabla_slice(const std::shared_ptr<const LieAlgebra>& g, const Weight& lambda, int r, int floor) {
  if (floor > r) throw std::invalid_argument("nabla_slice: floor above r");
  const Weight mu = g->root_data().minus_w0(lambda);
  return dual(global_weyl_slice(g, mu, -r, -floor));
}

std::size_t highest_weight_index(const TruncatedModule& m, int grade, const Weight& lambda) {
  auto b = m.find_block(grade, lambda);
  if (!b || m.blocks()[*b].dim != 1) throw std::logic_error("highest weight line is not one-dimensional");
  return m.blocks()[*b].offset;
}

}  // namespace curalg
