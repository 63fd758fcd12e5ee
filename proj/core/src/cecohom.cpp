#include "lk/cecohom.hpp"

#include <algorithm>
#include <functional>

#include "lk/leibniz.hpp"

namespace lk {

namespace {

// sign of the permutation sorting args, or 0 on a repeated index
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

Rat eval_alternating(const TrivCochain& c, std::span<const int> args) {
  std::vector<int> v(args.begin(), args.end());
  int sign = sort_sign(v);
  if (sign == 0) return 0;
  auto it = c.find(v);
  if (it == c.end()) return 0;
  return sign > 0 ? it->second : -it->second;
}

QVec eval_alternating(const AdjCochain& c, int dim, std::span<const int> args) {
  std::vector<int> v(args.begin(), args.end());
  int sign = sort_sign(v);
  QVec out(dim);
  if (sign == 0) return out;
  auto it = c.find(v);
  if (it == c.end()) return out;
  for (int t = 0; t < dim; ++t) out[t] = sign > 0 ? it->second[t] : -it->second[t];
  return out;
}

std::vector<std::vector<int>> tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int p = k - 1;
    while (p >= 0 && t[p] == n - k + p) --p;
    if (p < 0) break;
    ++t[p];
    for (int q = p + 1; q < k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

namespace {

// (delta phi)(args) for trivial coefficients: the zero-action specialization of
// the Leibniz coboundary, i.e. only the bracket-substitution sum survives.
Rat delta_trivial_eval(const LieAlgebra& l, int degree,
                       const std::function<Rat(std::span<const int>)>& phi,
                       std::span<const int> args) {
  Rat acc = 0;
  std::vector<int> sub;
  sub.reserve(degree);
  for (int i = 0; i < degree; ++i)
    for (int j = i + 1; j <= degree; ++j) {
      const int sign = (j % 2 == 0) ? 1 : -1;  // (-1)^{j+1}, 1-based j
      for (const auto& [m, c] : l.bracket_basis(args[i], args[j])) {
        sub.clear();
        for (int t = 0; t <= degree; ++t) {
          if (t == j) continue;
          sub.push_back(t == i ? m : args[t]);
        }
        Rat v = phi(sub);
        if (v != 0) acc += sign > 0 ? c * v : -c * v;
      }
    }
  return acc;
}

#ifndef NDEBUG
thread_local bool g_in_ddzero_check = false;
#endif

}  // namespace

TrivCochain d(const LieAlgebra& l, int degree, const TrivCochain& c) {
  const int n = l.dim();
  TrivCochain out;
  std::function<Rat(std::span<const int>)> ev = [&](std::span<const int> a) {
    return eval_alternating(c, a);
  };
  for (const auto& t : tuples(n, degree + 1)) {
    Rat v = delta_trivial_eval(l, degree, ev, t);
    if (v != 0) out[t] = v;
  }
#ifndef NDEBUG
  if (!g_in_ddzero_check && n <= 8 && degree + 2 <= n) {
    g_in_ddzero_check = true;
    TrivCochain dd = d(l, degree + 1, out);
    g_in_ddzero_check = false;
    if (!dd.empty()) std::abort();  // d(d(.)) must vanish identically
  }
#endif
  return out;
}

AdjCochain d(const LieAlgebra& l, int degree, const AdjCochain& c) {
  const int n = l.dim();
  AdjCochain out;
  std::function<QVec(std::span<const int>)> ev = [&](std::span<const int> a) {
    return eval_alternating(c, n, a);
  };
  for (const auto& t : tuples(n, degree + 1)) {
    QVec v = delta_eval(l, degree, ev, t);
    if (!is_zero_vec(v)) out[t] = std::move(v);
  }
#ifndef NDEBUG
  if (!g_in_ddzero_check && n <= 7 && degree + 2 <= n) {
    g_in_ddzero_check = true;
    AdjCochain dd = d(l, degree + 1, out);
    g_in_ddzero_check = false;
    if (!dd.empty()) std::abort();
  }
#endif
  return out;
}

QMatrix d_matrix(const LieAlgebra& l, int degree, Coeffs coeffs) {
  const int n = l.dim();
  auto dom = tuples(n, degree);
  auto cod = tuples(n, degree + 1);
  std::map<std::vector<int>, int> cidx;
  for (size_t i = 0; i < cod.size(); ++i) cidx[cod[i]] = int(i);

  if (coeffs == Coeffs::Trivial) {
    QMatrix m(int(cod.size()), int(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
      TrivCochain basis;
      basis[dom[j]] = 1;
      std::function<Rat(std::span<const int>)> ev = [&](std::span<const int> a) {
        return eval_alternating(basis, a);
      };
      for (size_t i = 0; i < cod.size(); ++i) {
        Rat v = delta_trivial_eval(l, degree, ev, cod[i]);
        if (v != 0) m(int(i), int(j)) = v;
      }
    }
    return m;
  }
  // adjoint: index = target * C(n,k) + tuple index, both sides
  QMatrix m(n * int(cod.size()), n * int(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    for (int tgt = 0; tgt < n; ++tgt) {
      AdjCochain basis;
      QVec val(n);
      val[tgt] = 1;
      basis[dom[j]] = val;
      std::function<QVec(std::span<const int>)> ev = [&](std::span<const int> a) {
        return eval_alternating(basis, n, a);
      };
      const int col = tgt * int(dom.size()) + int(j);
      for (size_t i = 0; i < cod.size(); ++i) {
        QVec v = delta_eval(l, degree, ev, cod[i]);
        for (int a = 0; a < n; ++a)
          if (v[a] != 0) m(a * int(cod.size()) + int(i), col) = v[a];
      }
    }
  }
  return m;
}

std::vector<int> betti(const LieAlgebra& l, Coeffs coeffs) {
  const int n = l.dim();
  if (n > 10) throw BettiCapExceeded(n);
  std::vector<int> dims(n + 2, 0), ranks(n + 2, 0);
  std::vector<long long> binom(n + 1);
  binom[0] = 1;
  for (int k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (n - k + 1) / k;
  const int mult = coeffs == Coeffs::Adjoint ? n : 1;
  for (int k = 0; k <= n; ++k) dims[k] = int(binom[k]) * mult;
  for (int k = 0; k < n; ++k) ranks[k] = rank(d_matrix(l, k, coeffs));
  std::vector<int> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    int rk = k < n ? ranks[k] : 0;
    int rkm1 = k > 0 ? ranks[k - 1] : 0;
    out[k] = dims[k] - rk - rkm1;
  }
  return out;
}

std::optional<TrivCochain> coboundary_witness(const LieAlgebra& l, const TrivCochain& omega3) {
  const int n = l.dim();
  QMatrix d2 = d_matrix(l, 2, Coeffs::Trivial);
  auto cod = tuples(n, 3);
  QVec b(cod.size());
  for (size_t i = 0; i < cod.size(); ++i) {
    auto it = omega3.find(cod[i]);
    if (it != omega3.end()) b[i] = it->second;
  }
  auto x = solve(d2, b);
  if (!x) return std::nullopt;
  auto dom = tuples(n, 2);
  TrivCochain out;
  for (size_t j = 0; j < dom.size(); ++j)
    if ((*x)[j] != 0) out[dom[j]] = (*x)[j];
  return out;
}

TrivCochain theta(const LieAlgebra& l, const QVec& x, const TrivCochain& gamma) {
  const int n = l.dim();
  TrivCochain out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      QVec eu(n), ev(n);
      eu[u] = 1;
      ev[v] = 1;
      QVec xu = l.bracket(x, eu), xv = l.bracket(x, ev);
      Rat acc = 0;
      for (int m = 0; m < n; ++m) {
        if (xu[m] != 0) acc -= xu[m] * eval_alternating(gamma, std::array{m, v});
        if (xv[m] != 0) acc -= xv[m] * eval_alternating(gamma, std::array{u, m});
      }
      if (acc != 0) out[{u, v}] = acc;
    }
  return out;
}

TrivCochain wedge1(const LieAlgebra& l, const QVec& one_form, const TrivCochain& two_form) {
  const int n = l.dim();
  TrivCochain out;
  for (const auto& t : tuples(n, 3)) {
    const int a = t[0], b = t[1], c = t[2];
    Rat acc = one_form[a] * eval_alternating(two_form, std::array{b, c}) -
              one_form[b] * eval_alternating(two_form, std::array{a, c}) +
              one_form[c] * eval_alternating(two_form, std::array{a, b});
    if (acc != 0) out[t] = acc;
  }
  return out;
}

}  // namespace lk
