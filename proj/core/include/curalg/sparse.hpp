#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curalg {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Sparse vector over Q. Entries are sorted by index and never zero.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index, const Rational& value = 1);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  Rational coeff(std::size_t index) const;

  // Appends an entry; index must exceed the current last index.
  void push_back(std::size_t index, Rational value);
  void add_scaled(const SparseVector& other, const Rational& factor);
  void scale(const Rational& factor);
  SparseVector remapped(const std::vector<std::size_t>& map) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

// Accumulates a linear combination with unsorted inserts.
class SparseAccumulator {
 public:
  void add(std::size_t index, const Rational& value);
  void add_scaled(const SparseVector& v, const Rational& factor);
  SparseVector take();

 private:
  std::vector<std::pair<std::size_t, Rational>> raw_;
};

// Column-compressed sparse matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  bool is_zero() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix transpose() const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;  // this * rhs
  SparseMatrix scaled(const Rational& f) const;
  void add(const SparseMatrix& other, const Rational& f = 1);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
  }
};

// Incremental row echelon form. The pivot of a row is its smallest index, so
// low indices are eliminated first and high indices survive as a basis of
// the quotient.
class Echelon {
 public:
  // keep_reduced: every insert also clears the new pivot from older rows,
  // which keeps the rows in reduced form and the coefficients small.
  explicit Echelon(std::size_t dim = 0, bool keep_reduced = false)
      : dim_(dim), keep_reduced_(keep_reduced), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::size_t pivot_of(std::size_t row) const { return rows_[row].entries().front().first; }

  // Returns the row index if v was independent.
  std::optional<std::size_t> insert(SparseVector v);
  SparseVector reduce(const SparseVector& v) const;
  // Reduces v and records the multiple of each row that was subtracted.
  SparseVector reduce_tracking(const SparseVector& v, SparseVector& used) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  // Back substitution, afterwards every row vanishes at all other pivots.
  void make_reduced();
  // Null space of the rows viewed as equations; calls make_reduced.
  std::vector<SparseVector> kernel_basis();
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t dim_;
  bool keep_reduced_ = false;
  std::vector<SparseVector> rows_;
  std::vector<long> pivot_row_;
};

// Coordinates of vectors with respect to a fixed list of independent vectors.
class BasisSolver {
 public:
  BasisSolver(std::size_t dim, const std::vector<SparseVector>& basis);
  std::size_t size() const { return count_; }
  // Empty optional when v is outside the span.
  std::optional<SparseVector> coordinates(const SparseVector& v) const;

 private:
  std::size_t dim_;
  std::size_t count_;
  Echelon ech_;
};

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t dim);

}  // namespace curalg
