#include "lk/gcm.hpp"

#include <algorithm>
#include <numeric>

#include "lk/rootkit.hpp"

namespace lk {

GCM GCM::from_entries(std::vector<std::vector<long long>> entries) {
  const int n = int(entries.size());
  for (const auto& row : entries)
    if (int(row.size()) != n) throw NotAGCM("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (entries[i][i] != 2) throw NotAGCM("diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0) throw NotAGCM("positive off-diagonal entry");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw NotAGCM("zero pattern is not symmetric");
    }
  }
  return GCM{std::move(entries)};
}

std::string GCMType::tag() const {
  switch (kind) {
    case GCMKind::Finite: return "finite:" + (name.empty() ? "?" : name);
    case GCMKind::Affine: return "affine:" + (name.empty() ? "?" : name);
    case GCMKind::IndefiniteHyperbolic: return "indefinite:hyperbolic";
    case GCMKind::IndefiniteNonHyperbolic: return "indefinite:nonhyperbolic";
    case GCMKind::Decomposable: {
      std::string out;
      for (size_t i = 0; i < components.size(); ++i) {
        if (i) out += " x ";
        out += components[i].tag();
      }
      return out;
    }
  }
  return "?";
}

GCM compute_gcm(const LieAlgebra& l, const std::vector<int>& generators) {
  const int n = l.dim();
  if (!is_nilpotent(l)) throw NotNilpotent();
  Subspace c2 = derived_subalgebra(l);
  const int ell = n - c2.dim();
  if (int(generators.size()) != ell)
    throw GeneratorsNotComplementary("expected " + std::to_string(ell) +
                                     " generators (dim g/C2 g), got " +
                                     std::to_string(generators.size()));
  // images must be independent modulo C^2 g
  std::vector<QVec> stack = c2.basis;
  for (int g : generators) {
    if (g < 1 || g > n) throw GeneratorsNotComplementary("generator index out of range");
    QVec e(n);
    e[g - 1] = 1;
    stack.push_back(std::move(e));
  }
  if (int(row_space(stack, n).size()) != n)
    throw GeneratorsNotComplementary("generators do not span g modulo C^2 g");

  std::vector<std::vector<long long>> a(ell, std::vector<long long>(ell, 2));
  for (int i = 0; i < ell; ++i) {
    QMatrix adx = l.ad(generators[i] - 1);
    for (int j = 0; j < ell; ++j) {
      if (i == j) continue;
      QVec v(n);
      v[generators[j] - 1] = 1;
      long long k = 0;
      v = adx.apply(v);
      while (!is_zero_vec(v)) {
        ++k;
        if (k > n) throw std::logic_error("ad power did not vanish on a nilpotent algebra");
        v = adx.apply(v);
      }
      a[i][j] = -k;
    }
  }
  return GCM::from_entries(std::move(a));
}

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat submatrix(const Mat& a, const std::vector<int>& idx) {
  Mat s(idx.size(), std::vector<long long>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s[i][j] = a[idx[i]][idx[j]];
  return s;
}

Rat det_rational(const Mat& a) {
  const int n = int(a.size());
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[i][j];
  // determinant by fraction-free elimination with row swaps
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<std::vector<int>> components_of(const Mat& a) {
  const int n = int(a.size());
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && a[u][v] != 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

// kind of an indecomposable GCM, by the principal-minor criteria
GCMKind indecomposable_kind(const Mat& a) {
  const int n = int(a.size());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  bool proper_positive = true;
  for (int mask = 1; mask + 1 < (1 << n) && proper_positive; ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) idx.push_back(b);
    if (det_rational(submatrix(a, idx)) <= 0) proper_positive = false;
  }
  Rat d = det_rational(a);
  if (proper_positive && d > 0) return GCMKind::Finite;
  if (proper_positive && d == 0) return GCMKind::Affine;
  // indefinite; hyperbolic iff every proper connected subdiagram is finite/affine
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) idx.push_back(b);
    Mat sub = submatrix(a, idx);
    for (const auto& cc : components_of(sub)) {
      GCMKind k = indecomposable_kind(submatrix(sub, cc));
      if (k != GCMKind::Finite && k != GCMKind::Affine)
        return GCMKind::IndefiniteNonHyperbolic;
    }
  }
  return GCMKind::IndefiniteHyperbolic;
}

bool perm_search(const Mat& a, const Mat& b, std::vector<int>& img, std::vector<bool>& used,
                 size_t i) {
  const size_t n = a.size();
  if (i == n) return true;
  for (size_t c = 0; c < n; ++c) {
    if (used[c] || a[i][i] != b[c][c]) continue;
    bool ok = true;
    for (size_t j = 0; j < i && ok; ++j) {
      if (a[i][j] != b[c][img[j]] || a[j][i] != b[img[j]][c]) ok = false;
    }
    if (!ok) continue;
    img[i] = int(c);
    used[c] = true;
    if (perm_search(a, b, img, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

// finite Cartan matrices, generated from the root systems themselves
const std::vector<NamedGCM>& finite_table() {
  static const std::vector<NamedGCM> table = [] {
    std::vector<NamedGCM> t;
    auto add = [&](SimpleType ty, int rk, const std::string& nm) {
      t.push_back({nm, cartan_matrix(build_root_system(ty, rk))});
    };
    for (int n = 1; n <= 8; ++n) add(SimpleType::A, n, "A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) add(SimpleType::C, n, "C" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) add(SimpleType::B, n, "B" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) add(SimpleType::D, n, "D" + std::to_string(n));
    add(SimpleType::E6, 0, "E6");
    add(SimpleType::E7, 0, "E7");
    add(SimpleType::E8, 0, "E8");
    add(SimpleType::F4, 0, "F4");
    add(SimpleType::G2, 0, "G2");
    return t;
  }();
  return table;
}

Mat transpose(const Mat& a) {
  Mat t(a.size(), std::vector<long long>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// affine Cartan matrices: the untwisted series is generated by extending the
// finite root system with the negative of its highest root; the twisted names
// are the transposes (arrow-reversed diagrams) plus the A_{2l}^(2) family
const std::vector<NamedGCM>& affine_table() {
  static const std::vector<NamedGCM> table = [] {
    std::vector<NamedGCM> t;
    auto untwisted = [&](SimpleType ty, int rk, const std::string& nm) {
      RootSystem rs = build_root_system(ty, rk);
      const int r = rs.rank;
      const QVec& theta = rs.positive[highest_root_index(rs)];
      std::vector<QVec> simples;
      {
        QVec mt(rs.ambient);
        for (int i = 0; i < rs.ambient; ++i) mt[i] = -theta[i];
        simples.push_back(std::move(mt));
      }
      for (int i = 0; i < r; ++i) simples.push_back(rs.positive[rs.simple_indices[i]]);
      Mat m(r + 1, std::vector<long long>(r + 1));
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
          Rat v = 2 * rs.inner(simples[i], simples[j]) / rs.inner(simples[i], simples[i]);
          if (denominator(v) != 1) throw std::logic_error("non-integral affine pairing");
          m[i][j] = long(numerator(v));
        }
      t.push_back({nm, std::move(m)});
      return t.back().m;
    };
    for (int n = 1; n <= 8; ++n)
      untwisted(SimpleType::A, n, "A" + std::to_string(n) + "~1");
    Mat b3, c2, c3, c4, f4, g2;
    c2 = untwisted(SimpleType::C, 2, "C2~1");
    c3 = untwisted(SimpleType::C, 3, "C3~1");
    c4 = untwisted(SimpleType::C, 4, "C4~1");
    b3 = untwisted(SimpleType::B, 3, "B3~1");
    Mat b4 = untwisted(SimpleType::B, 4, "B4~1");
    untwisted(SimpleType::D, 4, "D4~1");
    untwisted(SimpleType::D, 5, "D5~1");
    untwisted(SimpleType::E6, 0, "E6~1");
    untwisted(SimpleType::E7, 0, "E7~1");
    untwisted(SimpleType::E8, 0, "E8~1");
    f4 = untwisted(SimpleType::F4, 0, "F4~1");
    g2 = untwisted(SimpleType::G2, 0, "G2~1");
    // twisted: duals (reversed arrows) of the untwisted diagrams
    t.push_back({"A2~2", Mat{{2, -4}, {-1, 2}}});
    t.push_back({"A4~2", Mat{{2, -2, -1}, {-1, 2, 0}, {-2, 0, 2}}});
    t.push_back({"A5~2", transpose(b3)});
    t.push_back({"A7~2", transpose(b4)});
    t.push_back({"D3~2", transpose(c2)});
    t.push_back({"D4~2", transpose(c3)});
    t.push_back({"D5~2", transpose(c4)});
    t.push_back({"E6~2", transpose(f4)});
    t.push_back({"D4~3", transpose(g2)});
    return t;
  }();
  return table;
}

GCMType classify_block(const Mat& a) {
  GCMKind kind = indecomposable_kind(a);
  GCMType out{kind, "", {}};
  if (kind == GCMKind::Finite) {
    for (const auto& nm : finite_table())
      if (nm.m.size() == a.size() && perm_equivalent(a, nm.m)) {
        out.name = nm.name;
        break;
      }
  } else if (kind == GCMKind::Affine) {
    for (const auto& nm : affine_table())
      if (nm.m.size() == a.size() && perm_equivalent(a, nm.m)) {
        out.name = nm.name;
        break;
      }
  }
  return out;
}

}  // namespace

const std::vector<NamedGCM>& standard_finite_gcms() { return finite_table(); }
const std::vector<NamedGCM>& standard_affine_gcms() { return affine_table(); }

bool perm_equivalent(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> img(a.size());
  std::vector<bool> used(a.size(), false);
  return perm_search(a, b, img, used, 0);
}

GCMType classify(const GCM& g) {
  GCM::from_entries(g.a);  // re-validate
  auto comps = components_of(g.a);
  if (comps.size() == 1) return classify_block(g.a);
  GCMType out{GCMKind::Decomposable, "", {}};
  for (const auto& c : comps) out.components.push_back(classify_block(submatrix(g.a, c)));
  return out;
}

}  // namespace lk
