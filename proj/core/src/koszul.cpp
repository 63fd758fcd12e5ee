#include "lk/koszul.hpp"

#include <algorithm>
#include <cstdint>

namespace lk {

BilinearForm BilinearForm::from_matrix(QMatrix mat) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("bilinear form must be square");
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = i + 1; j < mat.cols(); ++j)
      if (mat(i, j) != mat(j, i)) throw std::invalid_argument("bilinear form must be symmetric");
  return BilinearForm{std::move(mat)};
}

bool BilinearForm::is_nondegenerate() const { return rank(m) == m.rows(); }

Rat TriForm::eval(int i, int j, int k) const {
  std::vector<int> t{i, j, k};
  return eval_alternating(comp, t);
}

namespace {

// unknown index for the pair (u <= v)
inline int pair_index(int u, int v, int n) { return u * n - u * (u - 1) / 2 + (v - u); }

SparseRow merge_terms(std::vector<std::pair<int, Rat>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : terms) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, v);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
            out.end());
  return out;
}

}  // namespace

std::vector<BilinearForm> invariant_forms(const LieAlgebra& l) {
  const int n = l.dim();
  const int npairs = n * (n + 1) / 2;
  SparseEliminator elim(npairs);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        std::vector<std::pair<int, Rat>> terms;
        for (const auto& [k, c] : l.bracket_basis(z, x))
          terms.emplace_back(pair_index(std::min(k, y), std::max(k, y), n), c);
        for (const auto& [k, c] : l.bracket_basis(z, y))
          terms.emplace_back(pair_index(std::min(x, k), std::max(x, k), n), c);
        SparseRow row = merge_terms(std::move(terms));
        if (!row.empty()) elim.add_row(std::move(row));
      }
  std::vector<QVec> ker = elim.nullspace();
  std::vector<BilinearForm> out;
  out.reserve(ker.size());
  for (const auto& v : ker) {
    QMatrix m(n, n);
    for (int u = 0; u < n; ++u)
      for (int w = u; w < n; ++w) {
        m(u, w) = v[pair_index(u, w, n)];
        m(w, u) = m(u, w);
      }
    out.push_back(BilinearForm{std::move(m)});
  }
  return out;
}

bool is_invariant(const LieAlgebra& l, const BilinearForm& b, int* zz, int* xx, int* yy) {
  const int n = l.dim();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        Rat acc = 0;
        for (const auto& [k, c] : l.bracket_basis(z, x)) acc += c * b.m(k, y);
        for (const auto& [k, c] : l.bracket_basis(z, y)) acc += c * b.m(x, k);
        if (acc != 0) {
          if (zz) *zz = z + 1;
          if (xx) *xx = x + 1;
          if (yy) *yy = y + 1;
          return false;
        }
      }
  return true;
}

TriForm koszul_form(const LieAlgebra& l, const BilinearForm& b) {
  const int n = l.dim();
  int z, x, y;
  if (!is_invariant(l, b, &z, &x, &y)) throw NotInvariant(z, x, y);
  TriForm t;
  t.dim = n;
  // each increasing triple is computed from its leading pair; alternation of
  // the result is a consequence of invariance
  for (const auto& [ij, w] : l.table()) {
    auto [i, j] = ij;
    for (int k = j + 1; k < n; ++k) {
      Rat acc = 0;
      for (const auto& [m, c] : w) acc += c * b.m(m, k);
      if (acc != 0) t.comp[{i, j, k}] = acc;
    }
  }
  return t;
}

namespace {

struct KoszulData {
  std::vector<BilinearForm> forms;
  std::vector<BilinearForm> ker;
  std::vector<TriForm> im;
  int ell = 0;
};

// triple -> lexicographic rank among increasing triples of 0..n-1
int64_t triple_rank(int i, int j, int k, int n) {
  auto c2 = [](int64_t x) { return x * (x - 1) / 2; };
  auto c3 = [](int64_t x) { return x * (x - 1) * (x - 2) / 6; };
  int64_t r = c3(n) - c3(n - i);
  r += c2(n - 1 - i) - c2(n - 1 - j);
  r += k - j - 1;
  return r;
}

KoszulData koszul_data(const LieAlgebra& l) {
  KoszulData d;
  const int n = l.dim();
  d.forms = invariant_forms(l);
  d.ell = n - derived_subalgebra(l).dim();
  const int m = int(d.forms.size());

  std::vector<TriForm> tri;
  tri.reserve(m);
  for (const auto& f : d.forms) tri.push_back(koszul_form(l, f));

  // Im I: echelon of the coefficient matrix (forms -> triple components)
  const int ntriples = n >= 3 ? int(triple_rank(n - 3, n - 2, n - 1, n)) + 1 : 0;
  SparseEliminator im_elim(ntriples);
  std::map<int64_t, std::vector<int>> triple_of_rank;
  for (int f = 0; f < m; ++f) {
    SparseRow row;
    for (const auto& [t, c] : tri[f].comp) {
      int64_t r = triple_rank(t[0], t[1], t[2], n);
      triple_of_rank[r] = t;
      row.emplace_back(int(r), c);
    }
    std::sort(row.begin(), row.end());
    if (!row.empty()) im_elim.add_row(std::move(row));
  }
  Echelon im_ech = im_elim.echelon();
  for (const auto& r : im_ech.rows) {
    TriForm t;
    t.dim = n;
    for (size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) t.comp[triple_of_rank.at(int64_t(c))] = r[c];
    d.im.push_back(std::move(t));
  }

  // ker I: combinations of the basis forms with zero Koszul form
  SparseEliminator ker_elim(m);
  {
    std::map<int64_t, SparseRow> rows;  // triple rank -> row over form indices
    for (int f = 0; f < m; ++f)
      for (const auto& [t, c] : tri[f].comp)
        rows[triple_rank(t[0], t[1], t[2], n)].emplace_back(f, c);
    for (auto& [r, row] : rows) {
      std::sort(row.begin(), row.end());
      ker_elim.add_row(std::move(row));
    }
  }
  for (const auto& combo : ker_elim.nullspace()) {
    QMatrix km(n, n);
    for (int f = 0; f < m; ++f)
      if (combo[f] != 0)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) km(i, j) += combo[f] * d.forms[f].m(i, j);
    d.ker.push_back(BilinearForm{std::move(km)});
  }

  if (int(d.ker.size()) != d.ell * (d.ell + 1) / 2)
    throw std::logic_error("kernel dimension identity violated (internal error)");
  if (int(d.forms.size()) != d.ell * (d.ell + 1) / 2 + int(d.im.size()))
    throw std::logic_error("rank-nullity violated in Koszul map (internal error)");
  return d;
}

// deterministic xorshift64* stream for the witness search
struct Xorshift {
  uint64_t s = 0x9E3779B97F4A7C15ull;
  uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
};

bool nondegenerate_combo(const std::vector<BilinearForm>& forms, const std::vector<Rat>& t,
                         QMatrix* out) {
  const int n = forms.front().dim();
  QMatrix m(n, n);
  for (size_t a = 0; a < forms.size(); ++a) {
    if (t[a] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (forms[a].m(i, j) != 0) m(i, j) += t[a] * forms[a].m(i, j);
  }
  if (rank(m) != n) return false;
  if (out) *out = std::move(m);
  return true;
}

// all B(U, U) = 0 for the span U given by basis rows
bool common_isotropic(const std::vector<BilinearForm>& forms, const std::vector<QVec>& u) {
  for (const auto& f : forms)
    for (size_t a = 0; a < u.size(); ++a)
      for (size_t b = a; b < u.size(); ++b) {
        Rat acc = 0;
        const int n = f.dim();
        for (int i = 0; i < n; ++i) {
          if (u[a][i] == 0) continue;
          for (int j = 0; j < n; ++j)
            if (f.m(i, j) != 0 && u[b][j] != 0) acc += u[a][i] * f.m(i, j) * u[b][j];
        }
        if (acc != 0) return false;
      }
  return true;
}

std::pair<bool, std::optional<BilinearForm>> quadratic_decision(
    const LieAlgebra& l, const std::vector<BilinearForm>& forms) {
  const int n = l.dim();
  const int m = int(forms.size());
  if (m == 0) return {false, std::nullopt};

  // common kernel nonzero => every combination is degenerate
  {
    std::vector<QVec> rows;
    for (const auto& f : forms)
      for (int i = 0; i < n; ++i) rows.push_back(f.m.row(i));
    if (!nullspace(QMatrix::from_rows(rows, n)).empty()) return {false, std::nullopt};
  }

  // a common totally isotropic subspace of dim > n/2 forces degeneracy
  {
    std::vector<Subspace> candidates;
    auto lcs = lower_central_series(l);
    for (size_t i = 1; i < lcs.size(); ++i) candidates.push_back(lcs[i]);
    candidates.push_back(center(l));
    for (const auto& u : candidates)
      if (2 * u.dim() > n && common_isotropic(forms, u.basis)) return {false, std::nullopt};
  }

  // deterministic witness search
  {
    QMatrix wit;
    std::vector<Rat> t(m, Rat(0));
    for (int a = 0; a < m; ++a) {
      std::fill(t.begin(), t.end(), Rat(0));
      t[a] = 1;
      if (nondegenerate_combo(forms, t, &wit))
        return {true, BilinearForm{std::move(wit)}};
    }
    for (int a = 0; a < m; ++a) {
      t[a] = 1;  // growing all-ones prefix
      if (nondegenerate_combo(forms, t, &wit))
        return {true, BilinearForm{std::move(wit)}};
    }
    Xorshift rng;
    const uint64_t span = uint64_t(n) * m + 1;
    for (int round = 0; round < 400; ++round) {
      for (int a = 0; a < m; ++a) t[a] = Rat(long(rng.next() % span));
      if (nondegenerate_combo(forms, t, &wit))
        return {true, BilinearForm{std::move(wit)}};
    }
  }

  // exact fallback: exhaust a grid that a degree-<=n polynomial cannot vanish
  // on without being identically zero
  if (m <= 4 && n <= 10) {
    std::vector<Rat> t(m, Rat(0));
    QMatrix wit;
    std::function<bool(int)> walk = [&](int a) -> bool {
      if (a == m) return nondegenerate_combo(forms, t, &wit);
      for (int v = 0; v <= n; ++v) {
        t[a] = v;
        if (walk(a + 1)) return true;
      }
      return false;
    };
    if (walk(0)) return {true, BilinearForm{std::move(wit)}};
    return {false, std::nullopt};
  }
  throw QuadraticUndecided("no witness found and the exhaustive grid is out of reach (dim " +
                           std::to_string(n) + ", basis " + std::to_string(m) + ")");
}

}  // namespace

std::pair<std::vector<BilinearForm>, std::vector<TriForm>> kernel_and_image(const LieAlgebra& l) {
  KoszulData d = koszul_data(l);
  return {std::move(d.ker), std::move(d.im)};
}

bool is_I_null(const LieAlgebra& l) {
  KoszulData d = koszul_data(l);
  const bool by_image = d.im.empty();
  // cross-validation: common kernel of all invariant forms equals C^2 g
  const int n = l.dim();
  std::vector<QVec> rows;
  for (const auto& f : d.forms)
    for (int i = 0; i < n; ++i) rows.push_back(f.m.row(i));
  Subspace common;
  if (rows.empty()) {
    // no invariant forms at all: the intersection is the whole space
    std::vector<QVec> full;
    for (int i = 0; i < n; ++i) {
      QVec e(n);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    common = make_subspace(n, full);
  } else {
    common = make_subspace(n, nullspace(QMatrix::from_rows(rows, n)));
  }
  Subspace c2 = derived_subalgebra(l);
  const bool by_kernel = common.basis == c2.basis;
  if (by_image != by_kernel)
    throw std::logic_error("I-null cross-validation failed (internal error)");
  return by_image;
}

std::pair<bool, std::vector<TrivCochain>> is_I_exact(const LieAlgebra& l) {
  KoszulData d = koszul_data(l);
  std::vector<TrivCochain> wit;
  for (const auto& t : d.im) {
    auto g = coboundary_witness(l, t.comp);
    if (!g) return {false, {}};
    wit.push_back(std::move(*g));
  }
  return {true, std::move(wit)};
}

std::pair<bool, std::optional<BilinearForm>> is_quadratic(const LieAlgebra& l) {
  return quadratic_decision(l, invariant_forms(l));
}

KoszulReport analyze(const LieAlgebra& l) {
  KoszulData d = koszul_data(l);
  KoszulReport r;
  r.dim = l.dim();
  r.ell = d.ell;
  r.forms = d.forms;
  r.ker_i = std::move(d.ker);
  r.im_i = std::move(d.im);
  r.i_null = r.im_i.empty();
  r.i_exact = true;
  for (const auto& t : r.im_i) {
    auto g = coboundary_witness(l, t.comp);
    if (!g) {
      r.i_exact = false;
      r.exact_witnesses.clear();
      break;
    }
    r.exact_witnesses.push_back(std::move(*g));
  }
  auto [quad, wit] = quadratic_decision(l, r.forms);
  r.quadratic = quad;
  r.quadratic_witness = std::move(wit);
  return r;
}

}  // namespace lk
