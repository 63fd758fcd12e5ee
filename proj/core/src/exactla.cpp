#include "lk/exactla.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lk {

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rat(n) / Rat(d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, int cols) {
  QMatrix m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols; ++j) m(int(i), j) = rows[i][j];
  }
  return m;
}

QVec QMatrix::row(int i) const {
  QVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QVec QMatrix::apply(const QVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
  QVec out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

// Divide the row by the gcd of numerators times lcm of denominators, keeping
// entries integral and small. Sign normalized so the leading entry stays put.
void reduce_content(QVec& row) {
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& x : row) {
    if (x == 0) continue;
    num_gcd = gcd(num_gcd, numerator(x));
    den_lcm = lcm(den_lcm, denominator(x));
  }
  if (num_gcd == 0) return;
  Rat f = Rat(den_lcm) / Rat(abs(num_gcd));
  if (f == 1) return;
  for (auto& x : row)
    if (x != 0) x *= f;
}

}  // namespace

Echelon rref(const QMatrix& m) {
  const int nr = m.rows(), nc = m.cols();
  std::vector<QVec> work;
  work.reserve(nr);
  for (int i = 0; i < nr; ++i) {
    QVec r = m.row(i);
    if (!is_zero_vec(r)) {
      reduce_content(r);
      work.push_back(std::move(r));
    }
  }
  std::vector<int> pivots;
  size_t rank = 0;
  for (int c = 0; c < nc && rank < work.size(); ++c) {
    size_t sel = rank;
    while (sel < work.size() && work[sel][c] == 0) ++sel;
    if (sel == work.size()) continue;
    std::swap(work[rank], work[sel]);
    const QVec& p = work[rank];
    for (size_t i = rank + 1; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      // cross-multiplied elimination keeps rows integral (fraction-free)
      const Rat a = p[c], b = work[i][c];
      for (int j = c; j < nc; ++j) work[i][j] = work[i][j] * a - p[j] * b;
      reduce_content(work[i]);
    }
    // drop rows that became zero
    size_t w = rank + 1;
    for (size_t i = rank + 1; i < work.size(); ++i)
      if (!is_zero_vec(work[i])) std::swap(work[w++], work[i]);
    work.resize(w);
    pivots.push_back(c);
    ++rank;
  }
  work.resize(rank);
  // normalize to reduced form: pivot 1, zeros above pivots
  for (size_t i = 0; i < rank; ++i) {
    const int c = pivots[i];
    Rat pv = work[i][c];
    for (int j = c; j < nc; ++j)
      if (work[i][j] != 0) work[i][j] /= pv;
  }
  for (size_t i = rank; i-- > 0;) {
    const int c = pivots[i];
    for (size_t k = 0; k < i; ++k) {
      Rat f = work[k][c];
      if (f == 0) continue;
      for (int j = c; j < nc; ++j)
        if (work[i][j] != 0) work[k][j] -= f * work[i][j];
    }
  }
  return Echelon{std::move(work), std::move(pivots)};
}

int rank(const QMatrix& m) { return int(rref(m).pivots.size()); }

namespace {

std::vector<QVec> nullspace_from_rref(const Echelon& e, int nc) {
  std::vector<bool> is_pivot(nc, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    QVec v(nc);
    v[c] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][c];
    for (int j = 0; j < nc; ++j) {
      if (v[j] != 0) {
        if (v[j] != 1) {
          Rat f = v[j];
          for (int k = j; k < nc; ++k)
            if (v[k] != 0) v[k] /= f;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<QVec> nullspace(const QMatrix& m) {
  return nullspace_from_rref(rref(m), m.cols());
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  for (int p : e.pivots)
    if (p == m.cols()) return std::nullopt;
  QVec x(m.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][m.cols()];
  return x;
}

std::vector<QVec> row_space(const std::vector<QVec>& vectors, int ambient) {
  if (vectors.empty()) return {};
  Echelon e = rref(QMatrix::from_rows(vectors, ambient));
  return e.rows;
}

bool in_rref_span(const std::vector<QVec>& rref_basis, const std::vector<int>& pivots, QVec v) {
  for (size_t i = 0; i < rref_basis.size(); ++i) {
    const Rat& f = v[pivots[i]];
    if (f != 0) {
      Rat c = f;
      for (size_t j = 0; j < v.size(); ++j)
        if (rref_basis[i][j] != 0) v[j] -= c * rref_basis[i][j];
    }
  }
  return is_zero_vec(v);
}

std::vector<QVec> intersect(const std::vector<QVec>& a, const std::vector<QVec>& b, int ambient) {
  if (a.empty() || b.empty()) return {};
  // kernel of the stacked coefficient matrix [A^T | -B^T]
  QMatrix m(ambient, int(a.size() + b.size()));
  for (int r = 0; r < ambient; ++r) {
    for (size_t j = 0; j < a.size(); ++j) m(r, int(j)) = a[j][r];
    for (size_t j = 0; j < b.size(); ++j) m(r, int(a.size() + j)) = -b[j][r];
  }
  std::vector<QVec> combos = nullspace(m);
  std::vector<QVec> vecs;
  for (const auto& k : combos) {
    QVec v(ambient);
    for (size_t j = 0; j < a.size(); ++j)
      if (k[j] != 0)
        for (int r = 0; r < ambient; ++r) v[r] += k[j] * a[j][r];
    if (!is_zero_vec(v)) vecs.push_back(std::move(v));
  }
  return row_space(vecs, ambient);
}

// ---------------------------------------------------------------------------
// SparseEliminator

void SparseEliminator::add_row(SparseRow row) {
  if (rref_done_) throw std::logic_error("add_row after nullspace/echelon");
  if (int(col_to_pivot_.size()) != ncols_) col_to_pivot_.assign(ncols_, -1);
  // reduce against existing pivot rows by leading column
  while (!row.empty()) {
    const int lead = row.front().first;
    const int p = col_to_pivot_[lead];
    if (p < 0) break;
    const Rat f = row.front().second;  // pivot rows are normalized to lead 1
    // row -= f * pivot_rows_[p]
    SparseRow out;
    out.reserve(row.size() + pivot_rows_[p].size());
    auto it = row.begin();
    auto jt = pivot_rows_[p].begin();
    while (it != row.end() || jt != pivot_rows_[p].end()) {
      if (jt == pivot_rows_[p].end() || (it != row.end() && it->first < jt->first)) {
        out.push_back(*it++);
      } else if (it == row.end() || jt->first < it->first) {
        out.emplace_back(jt->first, -f * jt->second);
        ++jt;
      } else {
        Rat v = it->second - f * jt->second;
        if (v != 0) out.emplace_back(it->first, std::move(v));
        ++it;
        ++jt;
      }
    }
    row = std::move(out);
  }
  if (row.empty()) return;
  const Rat lead = row.front().second;
  if (lead != 1)
    for (auto& [c, v] : row) v /= lead;
  col_to_pivot_[row.front().first] = int(pivot_rows_.size());
  pivot_cols_.push_back(row.front().first);
  pivot_rows_.push_back(std::move(row));
}

void SparseEliminator::to_rref() {
  if (rref_done_) return;
  rref_done_ = true;
  // order rows by pivot column
  std::vector<int> order(pivot_rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pivot_cols_[x] < pivot_cols_[y]; });
  std::vector<SparseRow> rows;
  std::vector<int> cols;
  rows.reserve(order.size());
  for (int i : order) {
    rows.push_back(std::move(pivot_rows_[i]));
    cols.push_back(pivot_cols_[i]);
  }
  pivot_rows_ = std::move(rows);
  pivot_cols_ = std::move(cols);
  if (int(col_to_pivot_.size()) != ncols_) col_to_pivot_.assign(ncols_, -1);
  for (size_t i = 0; i < pivot_cols_.size(); ++i) col_to_pivot_[pivot_cols_[i]] = int(i);
  // back-substitute, highest pivot first
  for (size_t i = pivot_rows_.size(); i-- > 0;) {
    std::map<int, Rat> acc;
    for (auto& [c, v] : pivot_rows_[i]) acc[c] = v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = acc.begin(); it != acc.end(); ++it) {
        const int c = it->first;
        const int p = col_to_pivot_[c];
        if (p < 0 || size_t(p) == i || size_t(p) < i) continue;
        // eliminate entry via lower pivot row (already reduced)
        Rat f = it->second;
        acc.erase(it);
        for (const auto& [cc, vv] : pivot_rows_[p]) {
          if (cc == c) continue;
          auto& slot = acc[cc];
          slot -= f * vv;
          if (slot == 0) acc.erase(cc);
        }
        changed = true;
        break;
      }
    }
    SparseRow r;
    r.reserve(acc.size());
    for (auto& [c, v] : acc) r.emplace_back(c, std::move(v));
    pivot_rows_[i] = std::move(r);
  }
}

Echelon SparseEliminator::echelon() {
  to_rref();
  Echelon e;
  e.pivots = pivot_cols_;
  e.rows.reserve(pivot_rows_.size());
  for (const auto& sr : pivot_rows_) {
    QVec r(ncols_);
    for (const auto& [c, v] : sr) r[c] = v;
    e.rows.push_back(std::move(r));
  }
  return e;
}

std::vector<QVec> SparseEliminator::nullspace() {
  to_rref();
  std::vector<bool> is_pivot(ncols_, false);
  for (int p : pivot_cols_) is_pivot[p] = true;
  // column c of the RREF restricted to pivot rows, fetched sparsely
  std::vector<QVec> basis;
  for (int c = 0; c < ncols_; ++c) {
    if (is_pivot[c]) continue;
    QVec v(ncols_);
    v[c] = 1;
    for (size_t i = 0; i < pivot_rows_.size(); ++i) {
      for (const auto& [cc, vv] : pivot_rows_[i]) {
        if (cc == c) {
          v[pivot_cols_[i]] = -vv;
          break;
        }
        if (cc > c) break;
      }
    }
    for (int j = 0; j < ncols_; ++j) {
      if (v[j] != 0) {
        if (v[j] != 1) {
          Rat f = v[j];
          for (int k = j; k < ncols_; ++k)
            if (v[k] != 0) v[k] /= f;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lk
