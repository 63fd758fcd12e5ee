#ifndef LK_EXACTLA_HPP
#define LK_EXACTLA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lk/rational.hpp"

namespace lk {

/// Dense matrix over Q. Dimensions are fixed at construction; every entry
/// defined (default 0).
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  QVec row(int i) const;
  QMatrix transposed() const;
  QVec apply(const QVec& v) const;  // M v

  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Reduced row echelon form, computed by fraction-free (content-controlled)
/// elimination with rational normalization at the pivot stage. Pivot order is
/// deterministic: leftmost nonzero column, topmost remaining row.
struct Echelon {
  std::vector<QVec> rows;  // RREF rows, one per pivot
  std::vector<int> pivots; // pivot column per row, strictly increasing
};

Echelon rref(const QMatrix& m);

/// Rank over Q.
int rank(const QMatrix& m);

/// Canonical basis of { v : M v = 0 }. One vector per free column, in column
/// order, each scaled so its first nonzero coordinate is 1.
std::vector<QVec> nullspace(const QMatrix& m);

/// One particular solution of M x = b (free variables 0 under the fixed pivot
/// order), or nothing when b is outside the column space.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

/// Canonical basis of span(A) cap span(B). Vectors are ambient coordinates.
std::vector<QVec> intersect(const std::vector<QVec>& a, const std::vector<QVec>& b, int ambient);

/// Canonical (RREF) basis of the span of the given vectors.
std::vector<QVec> row_space(const std::vector<QVec>& vectors, int ambient);

/// True if v lies in span(basis) where basis is in RREF.
bool in_rref_span(const std::vector<QVec>& rref_basis, const std::vector<int>& pivots, QVec v);

/// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Incremental exact echelon for large sparse homogeneous systems.
/// Rows can be streamed in; the reduced system is held as one pivot row per
/// pivot column. Results are canonical (unique RREF), so they do not depend
/// on insertion order.
class SparseEliminator {
 public:
  explicit SparseEliminator(int ncols) : ncols_(ncols) {}

  void add_row(SparseRow row);
  int rank() const { return int(pivot_rows_.size()); }

  /// Canonical nullspace basis, as in nullspace().
  std::vector<QVec> nullspace();

  /// RREF rows + pivot columns of the row space.
  Echelon echelon();

 private:
  void to_rref();
  int ncols_;
  bool rref_done_ = false;
  std::vector<SparseRow> pivot_rows_;       // parallel to pivot_cols_
  std::vector<int> pivot_cols_;             // sorted ascending after to_rref
  std::vector<int> col_to_pivot_ = {};      // lazily sized; -1 = none
};

}  // namespace lk

#endif
