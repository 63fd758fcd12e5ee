#include "lk/leibniz.hpp"

#include <functional>

#include "lk/cecohom.hpp"
#include "lk/koszul.hpp"

namespace lk {

LeibnizCochain::LeibnizCochain(int dim, int degree) : dim_(dim), degree_(degree) {
  size_t sz = dim;
  for (int i = 0; i < degree; ++i) sz *= dim;
  comp_.assign(sz, Rat(0));
}

size_t LeibnizCochain::flat(std::span<const int> args) const {
  size_t f = 0;
  for (int a : args) f = f * dim_ + size_t(a);
  return f;
}

Rat& LeibnizCochain::at(std::span<const int> args, int target) {
  return comp_[flat(args) * dim_ + target];
}

const Rat& LeibnizCochain::at(std::span<const int> args, int target) const {
  return comp_[flat(args) * dim_ + target];
}

QVec LeibnizCochain::value(std::span<const int> args) const {
  QVec v(dim_);
  size_t base = flat(args) * dim_;
  for (int t = 0; t < dim_; ++t) v[t] = comp_[base + t];
  return v;
}

bool LeibnizCochain::is_zero() const {
  for (const auto& x : comp_)
    if (x != 0) return false;
  return true;
}

QVec delta_eval(const LieAlgebra& l, int degree,
                const std::function<QVec(std::span<const int>)>& psi,
                std::span<const int> args) {
  const int n = l.dim();
  QVec acc(n);
  std::vector<int> sub;
  sub.reserve(degree);
  // [X_1, psi(X_2, ..., X_{deg+1})]
  sub.assign(args.begin() + 1, args.end());
  {
    QVec v = psi(sub);
    for (int a = 0; a < n; ++a) {
      if (v[a] == 0) continue;
      for (const auto& [k, c] : l.bracket_basis(args[0], a)) acc[k] += v[a] * c;
    }
  }
  // sum_{i=2}^{deg+1} (-1)^i [psi(..., X_i hat, ...), X_i]
  for (int i = 1; i <= degree; ++i) {
    sub.clear();
    for (int t = 0; t <= degree; ++t)
      if (t != i) sub.push_back(args[t]);
    QVec v = psi(sub);
    const int sign = (i + 1) % 2 == 0 ? 1 : -1;  // (-1)^{i+1} with 1-based index i+1
    for (int a = 0; a < n; ++a) {
      if (v[a] == 0) continue;
      for (const auto& [k, c] : l.bracket_basis(a, args[i]))
        acc[k] += (sign > 0 ? v[a] * c : -v[a] * c);
    }
  }
  // sum_{i<j} (-1)^{j+1} psi(X_1, ..., [X_i, X_j] at slot i, ..., X_j hat, ...)
  for (int i = 0; i < degree; ++i)
    for (int j = i + 1; j <= degree; ++j) {
      const int sign = (j % 2 == 0) ? 1 : -1;  // (-1)^{j+1}, j 1-based = j0+1
      for (const auto& [m, c] : l.bracket_basis(args[i], args[j])) {
        sub.clear();
        for (int t = 0; t <= degree; ++t) {
          if (t == j) continue;
          sub.push_back(t == i ? m : args[t]);
        }
        QVec v = psi(sub);
        for (int a = 0; a < n; ++a)
          if (v[a] != 0) acc[a] += sign > 0 ? c * v[a] : -c * v[a];
      }
    }
  return acc;
}

LeibnizCochain delta(const LieAlgebra& l, const LeibnizCochain& psi) {
  if (psi.degree() > 3) throw DegreeTooHigh(psi.degree());
  const int n = l.dim();
  const int deg = psi.degree();
  LeibnizCochain out(n, deg + 1);
  std::function<QVec(std::span<const int>)> ev = [&](std::span<const int> a) {
    return psi.value(a);
  };
  std::vector<int> args(deg + 1, 0);
  while (true) {
    QVec v = delta_eval(l, deg, ev, args);
    for (int t = 0; t < n; ++t)
      if (v[t] != 0) out.at(args, t) = v[t];
    int p = deg;
    while (p >= 0 && args[p] == n - 1) args[p--] = 0;
    if (p < 0) break;
    ++args[p];
  }
  return out;
}

std::vector<LeibnizCochain> zl2_0(const LieAlgebra& l) {
  const int n = l.dim();
  Subspace c = center(l);
  auto [ker, im] = kernel_and_image(l);
  (void)im;
  std::vector<LeibnizCochain> out;
  for (const auto& z : c.basis) {
    for (const auto& b : ker) {
      LeibnizCochain psi(n, 2);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const Rat& coef = b.m(u, v);
          if (coef == 0) continue;
          const int args[2] = {u, v};
          for (int t = 0; t < n; ++t)
            if (z[t] != 0) psi.at(args, t) = coef * z[t];
        }
      if (!delta(l, psi).is_zero())
        throw std::logic_error("zl2_0 element is not a cocycle");
      out.push_back(std::move(psi));
    }
  }
  return out;
}

int coupled_dim(const LieAlgebra& l) {
  const int n = l.dim();
  Subspace c = center(l);
  auto [ker, im] = kernel_and_image(l);
  (void)ker;
  if (c.dim() == 0 || im.empty()) return 0;
  // ambient coordinates of g (x) Lambda^3 g*: index = target * C(n,3) + triple
  auto trips = tuples(n, 3);
  std::map<std::vector<int>, int> tidx;
  for (size_t i = 0; i < trips.size(); ++i) tidx[trips[i]] = int(i);
  const int ambient = n * int(trips.size());
  std::vector<QVec> a_basis;
  for (const auto& z : c.basis)
    for (const auto& w : im) {
      QVec v(ambient);
      for (int t = 0; t < n; ++t) {
        if (z[t] == 0) continue;
        for (const auto& [tri, coef] : w.comp) v[t * trips.size() + tidx[tri]] = z[t] * coef;
      }
      a_basis.push_back(std::move(v));
    }
  // B^3(g,g) = column space of the adjoint d : C^2 -> C^3
  QMatrix d2 = d_matrix(l, 2, Coeffs::Adjoint);
  SparseEliminator elim(ambient);
  for (int j = 0; j < d2.cols(); ++j) {
    SparseRow r;
    for (int i = 0; i < d2.rows(); ++i)
      if (d2(i, j) != 0) r.emplace_back(i, d2(i, j));
    if (!r.empty()) elim.add_row(std::move(r));
  }
  Echelon b3 = elim.echelon();
  return int(intersect(a_basis, b3.rows, ambient).size());
}

bool is_uncoupling(const LieAlgebra& l) { return coupled_dim(l) == 0; }

int hl2_dim(const LieAlgebra& l) {
  QMatrix d1 = d_matrix(l, 1, Coeffs::Adjoint);
  QMatrix d2 = d_matrix(l, 2, Coeffs::Adjoint);
  const int dim_c2 = d2.cols();
  const int h2 = dim_c2 - rank(d2) - rank(d1);
  return h2 + int(zl2_0(l).size()) + coupled_dim(l);
}

}  // namespace lk
