#include "lk/liealg.hpp"

#include <algorithm>

namespace lk {

namespace {

SparseVec normalize_sparse(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
            out.end());
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, BracketTable table, std::string name,
                       std::vector<std::string> labels)
    : dim_(dim), name_(std::move(name)), labels_(std::move(labels)) {
  if (dim < 0) throw std::invalid_argument("dimension must be >= 0");
  for (auto& [ij, v] : table) {
    auto [i, j] = ij;
    if (!(0 <= i && i < j && j < dim)) throw std::invalid_argument("bracket index out of range");
    SparseVec nv = normalize_sparse(std::move(v));
    for (auto& [k, c] : nv)
      if (k < 0 || k >= dim) throw std::invalid_argument("bracket target out of range");
    if (!nv.empty()) table_[ij] = std::move(nv);
  }
  if (auto w = check_jacobi(dim_, table_)) throw JacobiError(*w);
}

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? SparseVec{} : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  SparseVec v = it->second;
  for (auto& [k, c] : v) c = -c;
  return v;
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
  QVec out(dim_);
  for (const auto& [ij, w] : table_) {
    auto [i, j] = ij;
    Rat coef = u[i] * v[j] - u[j] * v[i];
    if (coef == 0) continue;
    for (const auto& [k, c] : w) out[k] += coef * c;
  }
  return out;
}

QMatrix LieAlgebra::ad(int i) const {
  QMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) = c;
  return m;
}

std::optional<JacobiWitness> check_jacobi(int dim, const BracketTable& table) {
  // flat lookup keeps the triple loop cheap on large algebras
  std::vector<const SparseVec*> flat(size_t(dim) * dim, nullptr);
  for (const auto& [ij, v] : table) flat[size_t(ij.first) * dim + ij.second] = &v;
  auto bk = [&](int a, int b, auto&& emit) {
    if (a < b) {
      if (const SparseVec* v = flat[size_t(a) * dim + b])
        for (const auto& [k, c] : *v) emit(k, c);
    } else if (a > b) {
      if (const SparseVec* v = flat[size_t(b) * dim + a])
        for (const auto& [k, c] : *v) emit(k, -c);
    }
  };
  QVec acc(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        bool touched = false;
        auto cyc = [&](int a, int b, int c) {
          bk(b, c, [&](int m, const Rat& cm) {
            bk(a, m, [&](int t, const Rat& ct) {
              acc[t] += cm * ct;
              touched = true;
            });
          });
        };
        cyc(i, j, k);
        cyc(j, k, i);
        cyc(k, i, j);
        if (touched && !is_zero_vec(acc))
          return JacobiWitness{i + 1, j + 1, k + 1, acc};
        if (touched) std::fill(acc.begin(), acc.end(), Rat(0));
      }
  return std::nullopt;
}

Subspace make_subspace(int ambient, const std::vector<QVec>& vectors) {
  Subspace s;
  s.ambient = ambient;
  if (vectors.empty()) return s;
  Echelon e = rref(QMatrix::from_rows(vectors, ambient));
  s.basis = std::move(e.rows);
  s.pivots = std::move(e.pivots);
  return s;
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  std::vector<QVec> vecs;
  for (const auto& [ij, v] : l.table()) {
    (void)ij;
    QVec w(l.dim());
    for (const auto& [k, c] : v) w[k] = c;
    vecs.push_back(std::move(w));
  }
  return make_subspace(l.dim(), vecs);
}

Subspace center(const LieAlgebra& l) {
  const int n = l.dim();
  SparseEliminator elim(n);
  for (int j = 0; j < n; ++j) {
    // rows of ad(x_j): v central iff ad(x_j) v = 0 for all j
    std::vector<SparseRow> rows(n);
    for (int i = 0; i < n; ++i)
      for (const auto& [k, c] : l.bracket_basis(j, i)) rows[k].emplace_back(i, c);
    for (auto& r : rows) {
      std::sort(r.begin(), r.end());
      if (!r.empty()) elim.add_row(std::move(r));
    }
  }
  Subspace s;
  s.ambient = n;
  s.basis = elim.nullspace();
  Echelon e = rref(QMatrix::from_rows(s.basis, n));
  s.basis = std::move(e.rows);
  s.pivots = std::move(e.pivots);
  return s;
}

namespace {

Subspace subspace_bracket(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<QVec> vecs;
  for (const auto& u : a.basis)
    for (const auto& v : b.basis) {
      QVec w = l.bracket(u, v);
      if (!is_zero_vec(w)) vecs.push_back(std::move(w));
    }
  return make_subspace(l.dim(), vecs);
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  std::vector<Subspace> out;
  Subspace full;
  full.ambient = l.dim();
  for (int i = 0; i < l.dim(); ++i) {
    QVec e(l.dim());
    e[i] = 1;
    full.basis.push_back(std::move(e));
    full.pivots.push_back(i);
  }
  out.push_back(full);
  while (true) {
    Subspace next = subspace_bracket(l, out.front(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& l) {
  return lower_central_series(l).back().dim() == 0;
}

LieAlgebra direct_product(const LieAlgebra& l1, const LieAlgebra& l2) {
  BracketTable t = l1.table();
  const int off = l1.dim();
  for (const auto& [ij, v] : l2.table()) {
    SparseVec w = v;
    for (auto& [k, c] : w) k += off;
    t[{ij.first + off, ij.second + off}] = std::move(w);
  }
  std::string nm;
  if (!l1.name().empty() && !l2.name().empty()) nm = l1.name() + " x " + l2.name();
  return LieAlgebra(l1.dim() + l2.dim(), std::move(t), nm);
}

LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal) {
  const int n = l.dim();
  if (ideal.ambient != n) throw std::invalid_argument("ideal ambient mismatch");
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < ideal.basis.size(); ++j) {
      QVec e(n);
      e[i] = 1;
      if (!ideal.contains(l.bracket(e, ideal.basis[j]))) throw NotAnIdeal(i + 1, int(j + 1));
    }
  // complement = non-pivot columns of the ideal's echelon form
  std::vector<bool> is_pivot(n, false);
  for (int p : ideal.pivots) is_pivot[p] = true;
  std::vector<int> comp;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const int m = int(comp.size());
  std::vector<int> comp_pos(n, -1);
  for (int a = 0; a < m; ++a) comp_pos[comp[a]] = a;
  // reduce modulo the ideal, then read complement coordinates
  auto project = [&](QVec v) {
    for (size_t i = 0; i < ideal.basis.size(); ++i) {
      const Rat f = v[ideal.pivots[i]];
      if (f != 0)
        for (int j = 0; j < n; ++j)
          if (ideal.basis[i][j] != 0) v[j] -= f * ideal.basis[i][j];
    }
    SparseVec out;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) out.emplace_back(comp_pos[j], v[j]);
    return out;
  };
  BracketTable t;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      QVec e1(n), e2(n);
      e1[comp[a]] = 1;
      e2[comp[b]] = 1;
      SparseVec w = project(l.bracket(e1, e2));
      if (!w.empty()) t[{a, b}] = std::move(w);
    }
  return LieAlgebra(m, std::move(t));
}

std::vector<QMatrix> derivations(const LieAlgebra& l) {
  const int n = l.dim();
  // unknown D[a][b] = coefficient of x_a in D(x_b); column index a*n+b
  // zero brackets still constrain D: [Dx_i, x_j] + [x_i, Dx_j] = 0
  SparseEliminator elim(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
    const SparseVec bij = l.bracket_basis(i, j);
    for (int t = 0; t < n; ++t) {
      SparseRow row;
      for (const auto& [k, c] : bij) row.emplace_back(t * n + k, c);
      for (int a = 0; a < n; ++a) {
        for (const auto& [k, c] : l.bracket_basis(a, j))
          if (k == t) row.emplace_back(a * n + i, -c);
        for (const auto& [k, c] : l.bracket_basis(i, a))
          if (k == t) row.emplace_back(a * n + j, -c);
      }
      std::sort(row.begin(), row.end());
      SparseRow merged;
      for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second += v;
        else
          merged.emplace_back(c, v);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [](const auto& p) { return p.second == 0; }),
                   merged.end());
      if (!merged.empty()) elim.add_row(std::move(merged));
    }
  }
  std::vector<QVec> ker = elim.nullspace();
  std::vector<QMatrix> out;
  out.reserve(ker.size());
  for (const auto& v : ker) {
    QMatrix d(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d(a, b) = v[size_t(a) * n + b];
    out.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieAlgebra& l, const QMatrix& d, int* bad_i, int* bad_j) {
  const int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec lhs(n);
      for (const auto& [k, c] : l.bracket_basis(i, j))
        for (int a = 0; a < n; ++a)
          if (d(a, k) != 0) lhs[a] += c * d(a, k);
      QVec di(n), dj(n);
      for (int a = 0; a < n; ++a) {
        di[a] = d(a, i);
        dj[a] = d(a, j);
      }
      QVec ei(n), ej(n);
      ei[i] = 1;
      ej[j] = 1;
      QVec rhs = l.bracket(di, ej);
      QVec rhs2 = l.bracket(ei, dj);
      for (int a = 0; a < n; ++a) rhs[a] += rhs2[a];
      for (int a = 0; a < n; ++a)
        if (lhs[a] != rhs[a]) {
          if (bad_i) *bad_i = i + 1;
          if (bad_j) *bad_j = j + 1;
          return false;
        }
    }
  return true;
}

LieAlgebra adjoin_derivation(const LieAlgebra& l, const QMatrix& d) {
  const int n = l.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation shape mismatch");
  int bi = 0, bj = 0;
  if (!is_derivation(l, d, &bi, &bj)) throw NotADerivation(bi, bj);
  BracketTable t = l.table();
  for (int i = 0; i < n; ++i) {
    SparseVec v;
    for (int a = 0; a < n; ++a)
      if (d(a, i) != 0) v.emplace_back(a, -d(a, i));  // [x_i, x_{n+1}] = -D x_i
    if (!v.empty()) t[{i, n}] = std::move(v);
  }
  return LieAlgebra(n + 1, std::move(t));
}

}  // namespace lk
