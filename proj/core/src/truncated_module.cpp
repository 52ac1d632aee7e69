#include "curalg/truncated_module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace curalg {

TruncatedModule::TruncatedModule(std::shared_ptr<const LieAlgebra> g, std::vector<BasisLabel> labels, int max_degree)
    : algebra_(std::move(g)), labels_(std::move(labels)), max_degree_(std::max(0, max_degree)) {
  if (!std::is_sorted(labels_.begin(), labels_.end())) throw std::logic_error("TruncatedModule labels must be sorted");
  vec_block_.resize(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (blocks_.empty() || blocks_.back().grade != labels_[i].grade || blocks_.back().weight != labels_[i].weight) {
      block_lookup_[{labels_[i].grade, labels_[i].weight}] = blocks_.size();
      blocks_.push_back(Block{labels_[i].grade, labels_[i].weight, i, 0});
    }
    blocks_.back().dim++;
    vec_block_[i] = blocks_.size() - 1;
  }
  const std::size_t n = labels_.size();
  actions_.assign(static_cast<std::size_t>(algebra_->dim() * (max_degree_ + 1)), SparseMatrix(n, n));
  zero_ = SparseMatrix(n, n);
}

TruncatedModule TruncatedModule::from_unsorted(std::shared_ptr<const LieAlgebra> g,
                                               const std::vector<BasisLabel>& labels, int max_degree,
                                               std::vector<std::size_t>* permutation) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<BasisLabel> sorted;
  sorted.reserve(labels.size());
  for (std::size_t i : order) sorted.push_back(labels[i]);
  if (permutation) {
    permutation->assign(labels.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) (*permutation)[order[pos]] = pos;
  }
  return TruncatedModule(std::move(g), std::move(sorted), max_degree);
}

std::optional<std::size_t> TruncatedModule::find_block(int grade, const Weight& w) const {
  auto it = block_lookup_.find({grade, w});
  if (it == block_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TruncatedModule::min_grade() const {
  if (labels_.empty()) return std::nullopt;
  return labels_.front().grade;
}

std::optional<int> TruncatedModule::max_grade() const {
  if (labels_.empty()) return std::nullopt;
  return labels_.back().grade;
}

std::vector<std::size_t> TruncatedModule::grade_indices(int grade) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].grade == grade) out.push_back(i);
  return out;
}

const SparseMatrix& TruncatedModule::action(int x, int k) const {
  if (k < 0) throw std::out_of_range("negative degree");
  if (k > max_degree_) return zero_;
  return actions_[static_cast<std::size_t>(k * algebra_->dim() + x)];
}

SparseMatrix& TruncatedModule::mutable_action(int x, int k) {
  if (k < 0 || k > max_degree_) throw std::out_of_range("degree outside stored range");
  return actions_[static_cast<std::size_t>(k * algebra_->dim() + x)];
}

GradedCharacter TruncatedModule::character() const {
  GradedCharacter c;
  if (exact_floor && exact_top) throw std::logic_error("module truncated on both sides has no exact character");
  if (exact_floor) c.set_floor(*exact_floor);
  if (exact_top) c.set_ceiling(*exact_top);
  for (const auto& b : blocks_) c.add_term(b.weight, b.grade, static_cast<std::int64_t>(b.dim));
  return c;
}

bool TruncatedModule::check_relations(std::string* why) const {
  const LieAlgebra& g = *algebra_;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int x = 0; x < g.dim(); ++x)
    for (int k = 0; k <= max_degree_; ++k) {
      const SparseMatrix& a = action(x, k);
      for (std::size_t col = 0; col < dim(); ++col)
        for (const auto& [row, v] : a.columns[col].entries()) {
          if (labels_[row].grade != labels_[col].grade + k || labels_[row].weight != labels_[col].weight + g.weight(x))
            return fail("action of " + g.name(x) + " t^" + std::to_string(k) + " breaks grading");
        }
    }
  for (int i = 0; i < g.rank(); ++i)
    for (std::size_t col = 0; col < dim(); ++col) {
      SparseVector expect = SparseVector::unit(col, labels_[col].weight[i]);
      if (!(action(g.h(i), 0).columns[col] == expect)) return fail("h acts by a non-weight scalar");
    }
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      for (int j = 0; j <= max_degree_; ++j)
        for (int k = 0; j + k <= max_degree_; ++k) {
          SparseMatrix lhs = action(a, j).multiply(action(b, k));
          lhs.add(action(b, k).multiply(action(a, j)), -1);
          for (const auto& [z, c] : g.bracket(a, b)) lhs.add(action(z, j + k), -c);
          if (!lhs.is_zero())
            return fail("commutator of " + g.name(a) + " t^" + std::to_string(j) + " and " + g.name(b) + " t^" +
                        std::to_string(k) + " fails");
        }
  return true;
}

TruncatedModule dual(const TruncatedModule& m) {
  std::vector<BasisLabel> labels;
  labels.reserve(m.dim());
  for (const auto& l : m.labels()) labels.push_back(BasisLabel{-l.grade, -l.weight});
  // Dual blocks keep their local order; the block sequence reverses.
  std::vector<std::size_t> perm;
  TruncatedModule d = TruncatedModule::from_unsorted(m.algebra_ptr(), labels, m.max_degree(), &perm);
  for (int x = 0; x < m.algebra().dim(); ++x)
    for (int k = 0; k <= m.max_degree(); ++k) {
      const SparseMatrix& a = m.action(x, k);
      SparseMatrix& out = d.mutable_action(x, k);
      // (X phi)(v) = -phi(X v): the dual matrix is minus the transpose.
      std::vector<SparseAccumulator> cols(m.dim());
      for (std::size_t col = 0; col < m.dim(); ++col)
        for (const auto& [row, v] : a.columns[col].entries()) cols[perm[row]].add(perm[col], -v);
      for (std::size_t c = 0; c < m.dim(); ++c) out.columns[c] = cols[c].take();
    }
  if (m.exact_floor) d.exact_top = -*m.exact_floor;
  if (m.exact_top) d.exact_floor = -*m.exact_top;
  return d;
}

TruncatedModule shifted(const TruncatedModule& m, int r) {
  std::vector<BasisLabel> labels = m.labels();
  for (auto& l : labels) l.grade += r;
  TruncatedModule s(m.algebra_ptr(), labels, m.max_degree());
  for (int x = 0; x < m.algebra().dim(); ++x)
    for (int k = 0; k <= m.max_degree(); ++k) s.mutable_action(x, k) = m.action(x, k);
  if (m.exact_floor) s.exact_floor = *m.exact_floor + r;
  if (m.exact_top) s.exact_top = *m.exact_top + r;
  return s;
}

TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b) {
  std::vector<BasisLabel> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  int lo = std::min(a.min_grade().value_or(0), b.min_grade().value_or(0));
  int hi = std::max(a.max_grade().value_or(0), b.max_grade().value_or(0));
  std::vector<std::size_t> perm;
  TruncatedModule s = TruncatedModule::from_unsorted(a.algebra_ptr(), labels, hi - lo, &perm);
  const std::size_t off = a.dim();
  for (int x = 0; x < a.algebra().dim(); ++x)
    for (int k = 0; k <= s.max_degree(); ++k) {
      SparseMatrix& out = s.mutable_action(x, k);
      std::vector<SparseAccumulator> cols(s.dim());
      for (std::size_t c = 0; c < a.dim(); ++c)
        for (const auto& [r, v] : a.action(x, k).columns[c].entries()) cols[perm[c]].add(perm[r], v);
      for (std::size_t c = 0; c < b.dim(); ++c)
        for (const auto& [r, v] : b.action(x, k).columns[c].entries()) cols[perm[off + c]].add(perm[off + r], v);
      for (std::size_t c = 0; c < s.dim(); ++c) out.columns[c] = cols[c].take();
    }
  auto mx = [](std::optional<int> p, std::optional<int> q) -> std::optional<int> {
    if (p && q) return std::max(*p, *q);
    return p ? p : q;
  };
  auto mn = [](std::optional<int> p, std::optional<int> q) -> std::optional<int> {
    if (p && q) return std::min(*p, *q);
    return p ? p : q;
  };
  s.exact_floor = mx(a.exact_floor, b.exact_floor);
  s.exact_top = mn(a.exact_top, b.exact_top);
  return s;
}

namespace {

// Builds the module on the span of the echelon rows. Rows must span an
// invariant subspace; each row belongs to a single block.
SubmoduleResult from_invariant_echelon(const TruncatedModule& m, const Echelon& ech) {
  const auto& rows = ech.rows();
  std::vector<BasisLabel> labels;
  labels.reserve(rows.size());
  for (const auto& r : rows) labels.push_back(m.label(r.entries().front().first));
  std::vector<std::size_t> perm;
  int span = 0;
  if (!labels.empty()) {
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end(),
                                        [](const BasisLabel& a, const BasisLabel& b) { return a.grade < b.grade; });
    span = hi->grade - lo->grade;
  }
  SubmoduleResult out{TruncatedModule::from_unsorted(m.algebra_ptr(), labels, std::min(span, m.max_degree()), &perm),
                      SparseMatrix(m.dim(), rows.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) out.inclusion.columns[perm[i]] = rows[i];
  for (int x = 0; x < m.algebra().dim(); ++x)
    for (int k = 0; k <= out.module.max_degree(); ++k) {
      SparseMatrix& act = out.module.mutable_action(x, k);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVector img = m.apply(x, k, rows[i]);
        SparseVector used;
        SparseVector rest = ech.reduce_tracking(img, used);
        if (!rest.empty()) throw std::logic_error("span is not invariant under the action");
        act.columns[perm[i]] = used.remapped(perm);
      }
    }
  out.module.exact_floor = m.exact_floor;
  out.module.exact_top = m.exact_top;
  return out;
}

std::vector<std::pair<int, int>> generator_set(const LieAlgebra& g, int max_degree) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < g.rank(); ++i) {
    gens.emplace_back(g.e(i), 0);
    gens.emplace_back(g.f(i), 0);
  }
  if (max_degree >= 1)
    for (int x = 0; x < g.dim(); ++x) gens.emplace_back(x, 1);
  return gens;
}

}  // namespace

SubmoduleResult span_submodule(const TruncatedModule& m, const std::vector<SparseVector>& spanning) {
  Echelon ech(m.dim());
  for (const auto& v : spanning) ech.insert(v);
  ech.make_reduced();
  return from_invariant_echelon(m, ech);
}

SubmoduleResult generate_submodule(const TruncatedModule& m, const std::vector<SparseVector>& generators) {
  Echelon ech(m.dim());
  std::vector<std::size_t> work;
  auto push = [&](const SparseVector& v) {
    // Split into weight/grade components so rows stay block-homogeneous.
    std::map<std::size_t, SparseVector> parts;
    for (const auto& [i, c] : v.entries()) parts[m.block_index_of(i)].push_back(i, c);
    for (auto& [b, p] : parts)
      if (auto r = ech.insert(p)) work.push_back(*r);
  };
  for (const auto& v : generators) push(v);
  const auto gens = generator_set(m.algebra(), m.max_degree());
  while (!work.empty()) {
    std::size_t r = work.back();
    work.pop_back();
    SparseVector row = ech.rows()[r];
    for (const auto& [x, k] : gens) push(m.apply(x, k, row));
  }
  ech.make_reduced();
  return from_invariant_echelon(m, ech);
}

SubmoduleResult submodule_with_basis(const TruncatedModule& m, const std::vector<SparseVector>& basis) {
  std::vector<BasisLabel> labels;
  labels.reserve(basis.size());
  for (const auto& v : basis) {
    if (v.empty()) throw std::invalid_argument("submodule_with_basis: zero vector");
    std::size_t b = m.block_index_of(v.entries().front().first);
    for (const auto& [i, c] : v.entries())
      if (m.block_index_of(i) != b) throw std::invalid_argument("submodule_with_basis: vector is not block-homogeneous");
    labels.push_back(m.label(v.entries().front().first));
  }
  BasisSolver solver(m.dim(), basis);
  std::vector<std::size_t> perm;
  int span = 0;
  if (!labels.empty()) {
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end(),
                                        [](const BasisLabel& a, const BasisLabel& b) { return a.grade < b.grade; });
    span = hi->grade - lo->grade;
  }
  SubmoduleResult out{TruncatedModule::from_unsorted(m.algebra_ptr(), labels, std::min(span, m.max_degree()), &perm),
                      SparseMatrix(m.dim(), basis.size())};
  for (std::size_t i = 0; i < basis.size(); ++i) out.inclusion.columns[perm[i]] = basis[i];
  for (int x = 0; x < m.algebra().dim(); ++x)
    for (int k = 0; k <= out.module.max_degree(); ++k) {
      SparseMatrix& act = out.module.mutable_action(x, k);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        auto coords = solver.coordinates(m.apply(x, k, basis[i]));
        if (!coords) throw std::logic_error("submodule_with_basis: span is not invariant under the action");
        act.columns[perm[i]] = coords->remapped(perm);
      }
    }
  out.module.exact_floor = m.exact_floor;
  out.module.exact_top = m.exact_top;
  return out;
}

QuotientResult quotient_module(const TruncatedModule& m, const std::vector<SparseVector>& submodule_spanning) {
  Echelon ech(m.dim());
  for (const auto& v : submodule_spanning) ech.insert(v);
  ech.make_reduced();
  std::vector<long> qidx(m.dim(), -1);
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!ech.is_pivot(i)) {
      qidx[i] = static_cast<long>(keep.size());
      keep.push_back(i);
      labels.push_back(m.label(i));
    }
  // Labels inherit the ambient order, so they are already sorted.
  TruncatedModule q(m.algebra_ptr(), labels, m.max_degree());
  SparseMatrix proj(keep.size(), m.dim());
  auto nf = [&](const SparseVector& v) {
    SparseVector r = ech.reduce(v);
    SparseVector out;
    for (const auto& [i, c] : r.entries()) out.push_back(static_cast<std::size_t>(qidx[i]), c);
    return out;
  };
  for (std::size_t i = 0; i < m.dim(); ++i) proj.columns[i] = nf(SparseVector::unit(i));
  for (int x = 0; x < m.algebra().dim(); ++x)
    for (int k = 0; k <= m.max_degree(); ++k) {
      SparseMatrix& act = q.mutable_action(x, k);
      for (std::size_t j = 0; j < keep.size(); ++j) act.columns[j] = nf(m.action(x, k).columns[keep[j]]);
    }
  q.exact_floor = m.exact_floor;
  q.exact_top = m.exact_top;
  return QuotientResult{std::move(q), std::move(proj)};
}

SubmoduleResult grade_slice(const TruncatedModule& m, int floor_grade) {
  std::vector<SparseVector> span;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.label(i).grade >= floor_grade) span.push_back(SparseVector::unit(i));
  SubmoduleResult s = span_submodule(m, span);
  s.module.exact_floor = m.exact_floor ? std::max(*m.exact_floor, floor_grade) : floor_grade;
  return s;
}

QuotientResult grade_quotient(const TruncatedModule& m, int top_grade) {
  std::vector<SparseVector> span;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.label(i).grade > top_grade) span.push_back(SparseVector::unit(i));
  QuotientResult q = quotient_module(m, span);
  q.module.exact_top = m.exact_top ? std::min(*m.exact_top, top_grade) : top_grade;
  return q;
}

TruncatedModule grade_subquotient(const TruncatedModule& m, int lo, int hi) {
  return grade_quotient(grade_slice(m, lo).module, hi).module;
}

std::string dump_module(const TruncatedModule& m, std::optional<int> from_grade) {
  const LieAlgebra& g = m.algebra();
  std::ostringstream os;
  auto vec_name = [&](std::size_t i) {
    const auto& l = m.label(i);
    return "(" + std::to_string(l.grade) + "," + to_string(l.weight) + "," + std::to_string(m.local_index(i)) + ")";
  };
  auto keep = [&](std::size_t i) { return !from_grade || m.label(i).grade >= *from_grade; };
  auto opt = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); };
  std::optional<int> floor = m.exact_floor;
  if (from_grade) floor = floor ? std::max(*floor, *from_grade) : *from_grade;
  std::size_t nblocks = 0;
  for (const auto& b : m.blocks())
    if (!from_grade || b.grade >= *from_grade) ++nblocks;
  os << "schema curalg-module v1\n";
  os << "type " << g.root_data().lie_type() << "\n";
  os << "rank " << g.rank() << "\n";
  os << "window floor " << opt(floor) << " top " << opt(m.exact_top) << "\n";
  // A partial dump only spans the kept grades.
  int max_degree = m.max_degree();
  if (from_grade) {
    auto top = m.max_grade();
    max_degree = top && *top >= *from_grade ? std::min(max_degree, *top - *from_grade) : 0;
  }
  os << "max_degree " << max_degree << "\n";
  os << "blocks " << nblocks << "\n";
  for (const auto& b : m.blocks())
    if (!from_grade || b.grade >= *from_grade)
      os << "block " << b.grade << " " << to_string(b.weight) << " " << b.dim << "\n";
  for (int k = 0; k <= m.max_degree(); ++k)
    for (int x = 0; x < g.dim(); ++x) {
      const SparseMatrix& a = m.action(x, k);
      for (std::size_t col = 0; col < m.dim(); ++col) {
        if (!keep(col) || a.columns[col].empty()) continue;
        os << "act " << g.name(x) << " " << k << " " << vec_name(col) << " ->";
        for (const auto& [row, v] : a.columns[col].entries()) os << " " << to_string(v) << "*" << vec_name(row);
        os << "\n";
      }
    }
  return os.str();
}

namespace {

std::optional<int> parse_opt_int(const std::string& tok) {
  if (tok == "none") return std::nullopt;
  return std::stoi(tok);
}

// "(g,[w],i)" -> basis index
std::size_t parse_vec(const TruncatedModule& m, const std::string& tok) {
  if (tok.size() < 7 || tok.front() != '(' || tok.back() != ')') throw std::invalid_argument("malformed vector " + tok);
  std::size_t open = tok.find('['), close = tok.find(']');
  if (open == std::string::npos || close == std::string::npos) throw std::invalid_argument("malformed vector " + tok);
  int grade = std::stoi(tok.substr(1, open - 2));
  Weight w = parse_weight(tok.substr(open, close - open + 1));
  std::size_t local = std::stoul(tok.substr(close + 2, tok.size() - close - 3));
  auto b = m.find_block(grade, w);
  if (!b || local >= m.blocks()[*b].dim) throw std::invalid_argument("vector outside the module: " + tok);
  return m.blocks()[*b].offset + local;
}

}  // namespace

TruncatedModule parse_module_dump(const std::string& text) {
  std::istringstream is(text);
  std::string line, word;
  auto expect = [&](const std::string& key) {
    if (!std::getline(is, line)) throw std::invalid_argument("module dump: missing " + key);
    std::istringstream ls(line);
    ls >> word;
    if (word != key) throw std::invalid_argument("module dump: expected " + key + ", found " + line);
    std::string rest;
    std::getline(ls, rest);
    return rest.empty() ? rest : rest.substr(1);
  };
  if (expect("schema") != "curalg-module v1") throw std::invalid_argument("module dump: unsupported schema");
  std::string type = expect("type");
  int rank = std::stoi(expect("rank"));
  std::istringstream win(expect("window"));
  std::string f, fv, t, tv;
  win >> f >> fv >> t >> tv;
  int max_degree = std::stoi(expect("max_degree"));
  std::size_t nblocks = std::stoul(expect("blocks"));
  if (type.size() != 1) throw std::invalid_argument("module dump: bad type");
  auto g = std::make_shared<const LieAlgebra>(RootDatum::build(type[0], rank));
  std::vector<BasisLabel> labels;
  for (std::size_t i = 0; i < nblocks; ++i) {
    std::istringstream bs(expect("block"));
    int grade;
    std::string w;
    std::size_t dim;
    bs >> grade >> w >> dim;
    for (std::size_t j = 0; j < dim; ++j) labels.push_back({grade, parse_weight(w)});
  }
  if (!std::is_sorted(labels.begin(), labels.end())) throw std::invalid_argument("module dump: blocks out of order");
  TruncatedModule m(g, labels, max_degree);
  m.exact_floor = parse_opt_int(fv);
  m.exact_top = parse_opt_int(tv);
  std::map<std::string, int> names;
  for (int x = 0; x < g->dim(); ++x) names[g->name(x)] = x;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string act, name, from, arrow;
    int k;
    ls >> act >> name >> k >> from >> arrow;
    if (act != "act" || arrow != "->" || !names.count(name) || k < 0 || k > max_degree)
      throw std::invalid_argument("module dump: malformed line " + line);
    std::size_t col = parse_vec(m, from);
    SparseAccumulator acc;
    std::string term;
    while (ls >> term) {
      std::size_t star = term.find('*');
      if (star == std::string::npos) throw std::invalid_argument("module dump: malformed term " + term);
      acc.add(parse_vec(m, term.substr(star + 1)), parse_rational(term.substr(0, star)));
    }
    m.mutable_action(names[name], k).columns[col] = acc.take();
  }
  return m;
}

}  // namespace curalg
