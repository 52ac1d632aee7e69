#include "curalg/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  q.canonicalize();
  return q;
}

SparseVector SparseVector::unit(std::size_t index, const Rational& value) {
  SparseVector v;
  if (value != 0) v.entries_.emplace_back(index, value);
  return v;
}

Rational SparseVector::coeff(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::push_back(std::size_t index, Rational value) {
  if (value == 0) return;
  if (!entries_.empty() && entries_.back().first >= index)
    throw std::logic_error("SparseVector::push_back out of order");
  entries_.emplace_back(index, std::move(value));
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational s = a->second + factor * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

SparseVector SparseVector::remapped(const std::vector<std::size_t>& map) const {
  SparseAccumulator acc;
  for (const auto& [i, c] : entries_) acc.add(map[i], c);
  return acc.take();
}

void SparseAccumulator::add(std::size_t index, const Rational& value) {
  if (value != 0) raw_.emplace_back(index, value);
}

void SparseAccumulator::add_scaled(const SparseVector& v, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [i, c] : v.entries()) raw_.emplace_back(i, c * factor);
}

SparseVector SparseAccumulator::take() {
  std::stable_sort(raw_.begin(), raw_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  std::size_t i = 0;
  while (i < raw_.size()) {
    std::size_t j = i;
    Rational s = 0;
    while (j < raw_.size() && raw_[j].first == raw_[i].first) s += raw_[j++].second;
    out.push_back(raw_[i].first, std::move(s));
    i = j;
  }
  raw_.clear();
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseAccumulator acc;
  for (const auto& [j, c] : v.entries()) acc.add_scaled(columns[j], c);
  return acc.take();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, c] : columns[j].entries()) t.columns[i].push_back(j, c);
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols != rhs.rows) throw std::logic_error("SparseMatrix::multiply shape mismatch");
  SparseMatrix out(rows, rhs.cols);
  for (std::size_t j = 0; j < rhs.cols; ++j) out.columns[j] = apply(rhs.columns[j]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& f) const {
  SparseMatrix out = *this;
  for (auto& c : out.columns) c.scale(f);
  return out;
}

void SparseMatrix::add(const SparseMatrix& other, const Rational& f) {
  if (rows != other.rows || cols != other.cols) throw std::logic_error("SparseMatrix::add shape mismatch");
  for (std::size_t j = 0; j < cols; ++j) columns[j].add_scaled(other.columns[j], f);
}

namespace {

using Work = std::map<std::size_t, Rational>;

Work to_work(const SparseVector& v) {
  Work w;
  for (const auto& [i, c] : v.entries()) w.emplace_hint(w.end(), i, c);
  return w;
}

SparseVector from_work(Work& w) {
  SparseVector v;
  for (auto& [i, c] : w) v.push_back(i, std::move(c));
  return v;
}

void subtract_row(Work& w, const SparseVector& row, const Rational& factor) {
  auto hint = w.begin();
  for (const auto& [i, c] : row.entries()) {
    hint = w.lower_bound(i);
    if (hint != w.end() && hint->first == i) {
      hint->second -= factor * c;
      if (hint->second == 0) hint = w.erase(hint);
    } else {
      hint = w.emplace_hint(hint, i, -factor * c);
    }
  }
}

}  // namespace

SparseVector Echelon::reduce(const SparseVector& v) const {
  SparseVector unused;
  return reduce_tracking(v, unused);
}

SparseVector Echelon::reduce_tracking(const SparseVector& v, SparseVector& used) const {
  SparseAccumulator record;
  if (v.empty() || rows_.empty()) {
    used = SparseVector();
    return v;
  }
  Work w = to_work(v);
  auto it = w.begin();
  while (it != w.end()) {
    std::size_t col = it->first;
    long r = col < pivot_row_.size() ? pivot_row_[col] : -1;
    if (r < 0) {
      ++it;
      continue;
    }
    Rational factor = it->second;  // rows are normalised to pivot 1
    record.add(static_cast<std::size_t>(r), factor);
    subtract_row(w, rows_[r], factor);
    it = w.upper_bound(col);
  }
  used = record.take();
  return from_work(w);
}

std::optional<std::size_t> Echelon::insert(SparseVector v) {
  SparseVector red = reduce(v);
  if (red.empty()) return std::nullopt;
  Rational inv = 1 / red.entries().front().second;
  red.scale(inv);
  std::size_t p = red.entries().front().first;
  if (p >= dim_) throw std::out_of_range("Echelon::insert index out of range");
  if (keep_reduced_)
    for (auto& row : rows_) {
      Rational c = row.coeff(p);
      if (c != 0) row.add_scaled(red, -c);
    }
  pivot_row_[p] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(red));
  return rows_.size() - 1;
}

void Echelon::make_reduced() {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_of(a) > pivot_of(b); });
  // Rows with larger pivots are already reduced when they are used.
  for (std::size_t r : order) {
    const SparseVector& row = rows_[r];
    bool dirty = false;
    for (std::size_t k = 1; k < row.entries().size(); ++k)
      if (is_pivot(row.entries()[k].first)) {
        dirty = true;
        break;
      }
    if (!dirty) continue;
    Work w = to_work(row);
    std::size_t p = pivot_of(r);
    auto it = w.upper_bound(p);
    while (it != w.end()) {
      std::size_t col = it->first;
      long q = pivot_row_[col];
      if (q < 0) {
        ++it;
        continue;
      }
      Rational factor = it->second;
      subtract_row(w, rows_[q], factor);
      it = w.upper_bound(col);
    }
    rows_[r] = from_work(w);
  }
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::vector<SparseVector> Echelon::kernel_basis() {
  make_reduced();
  std::vector<std::size_t> free = free_columns();
  std::vector<long> slot(dim_, -1);
  for (std::size_t k = 0; k < free.size(); ++k) slot[free[k]] = static_cast<long>(k);
  std::vector<SparseAccumulator> acc(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) acc[k].add(free[k], 1);
  for (const auto& row : rows_) {
    std::size_t p = row.entries().front().first;
    for (std::size_t k = 1; k < row.entries().size(); ++k) {
      const auto& [c, val] = row.entries()[k];
      acc[slot[c]].add(p, -val);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(free.size());
  for (auto& a : acc) out.push_back(a.take());
  return out;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

BasisSolver::BasisSolver(std::size_t dim, const std::vector<SparseVector>& basis)
    : dim_(dim), count_(basis.size()), ech_(dim + basis.size()) {
  // Row i is (b_i | e_i); the pivots all fall in the first block.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseVector aug = basis[i];
    aug.push_back(dim + i, 1);
    auto row = ech_.insert(aug);
    if (!row || ech_.pivot_of(*row) >= dim)
      throw std::invalid_argument("BasisSolver: vectors are linearly dependent");
  }
  ech_.make_reduced();
}

std::optional<SparseVector> BasisSolver::coordinates(const SparseVector& v) const {
  SparseVector rest = ech_.reduce(v);
  SparseVector out;
  for (const auto& [i, c] : rest.entries()) {
    if (i < dim_) return std::nullopt;
    out.push_back(i - dim_, -c);
  }
  return out;
}

}  // namespace curalg
