#include "lk/rootkit.hpp"

#include <algorithm>

namespace lk {

std::optional<SimpleType> parse_simple_type(const std::string& s) {
  if (s == "A" || s == "a") return SimpleType::A;
  if (s == "B" || s == "b") return SimpleType::B;
  if (s == "C" || s == "c") return SimpleType::C;
  if (s == "D" || s == "d") return SimpleType::D;
  if (s == "E6" || s == "e6") return SimpleType::E6;
  if (s == "E7" || s == "e7") return SimpleType::E7;
  if (s == "E8" || s == "e8") return SimpleType::E8;
  if (s == "F4" || s == "f4") return SimpleType::F4;
  if (s == "G2" || s == "g2") return SimpleType::G2;
  return std::nullopt;
}

std::string type_name(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E6: return "E6";
    case SimpleType::E7: return "E7";
    case SimpleType::E8: return "E8";
    case SimpleType::F4: return "F4";
    case SimpleType::G2: return "G2";
  }
  return "?";
}

bool type_has_rank(SimpleType t) {
  return t == SimpleType::A || t == SimpleType::B || t == SimpleType::C || t == SimpleType::D;
}

Rat RootSystem::inner(const QVec& a, const QVec& b) const {
  Rat s = 0;
  for (int i = 0; i < ambient; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < ambient; ++j)
      if (gram(i, j) != 0 && b[j] != 0) s += a[i] * gram(i, j) * b[j];
  }
  return s;
}

int RootSystem::sum_index(int a, int b) const {
  QVec s(ambient);
  for (int i = 0; i < ambient; ++i) s[i] = positive[a][i] + positive[b][i];
  auto it = index_of.find(s);
  return it == index_of.end() ? -1 : it->second;
}

Rat RootSystem::cartan_pair(const QVec& a, int simple_pos) const {
  const QVec& s = positive[simple_indices[simple_pos]];
  return 2 * inner(a, s) / inner(s, s);
}

namespace {

QVec unit(int n, int i, const Rat& v = Rat(1)) {
  QVec e(n);
  e[i] = v;
  return e;
}

std::vector<QVec> raw_positive_roots(SimpleType t, int rank, int& ambient, QMatrix& gram) {
  std::vector<QVec> rs;
  switch (t) {
    case SimpleType::A: {
      if (rank < 1) throw InvalidRank("A requires rank >= 1");
      ambient = rank + 1;
      gram = QMatrix::identity(ambient);
      for (int i = 0; i < ambient; ++i)
        for (int j = i + 1; j < ambient; ++j) {
          QVec v(ambient);
          v[i] = 1;
          v[j] = -1;
          rs.push_back(std::move(v));
        }
      break;
    }
    case SimpleType::B:
    case SimpleType::C:
    case SimpleType::D: {
      if (rank < 2) throw InvalidRank(type_name(t) + " requires rank >= 2");
      ambient = rank;
      gram = QMatrix::identity(ambient);
      for (int i = 0; i < ambient; ++i)
        for (int j = i + 1; j < ambient; ++j)
          for (int s : {1, -1}) {
            QVec v(ambient);
            v[i] = 1;
            v[j] = s;
            rs.push_back(std::move(v));
          }
      if (t == SimpleType::B)
        for (int i = 0; i < ambient; ++i) rs.push_back(unit(ambient, i));
      if (t == SimpleType::C)
        for (int i = 0; i < ambient; ++i) rs.push_back(unit(ambient, i, Rat(2)));
      break;
    }
    case SimpleType::G2: {
      // lattice coordinates (a, b) = a alpha1 + b alpha2, alpha1 short
      ambient = 2;
      gram = QMatrix(2, 2);
      gram(0, 0) = 2;
      gram(0, 1) = gram(1, 0) = -3;
      gram(1, 1) = 6;
      for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}) {
        QVec v(2);
        v[0] = a;
        v[1] = b;
        rs.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::F4: {
      ambient = 4;
      gram = QMatrix::identity(4);
      for (int i = 0; i < 4; ++i) rs.push_back(unit(4, i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int s : {1, -1}) {
            QVec v(4);
            v[i] = 1;
            v[j] = s;
            rs.push_back(std::move(v));
          }
      for (int mask = 0; mask < 8; ++mask) {
        QVec v(4);
        v[0] = Rat(1, 2);
        for (int b = 0; b < 3; ++b) v[1 + b] = (mask >> b) & 1 ? Rat(-1, 2) : Rat(1, 2);
        rs.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::E6: {
      // last coordinate scales sqrt(3) eps6
      ambient = 6;
      gram = QMatrix::identity(6);
      gram(5, 5) = 3;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          QVec v(6);
          v[i] = 1;
          v[j] = 1;
          rs.push_back(std::move(v));
          QVec w(6);
          w[j] = 1;  // eps_i - eps_j for j < i
          w[i] = -1;
          rs.push_back(std::move(w));
        }
      for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        QVec v(6);
        for (int b = 0; b < 5; ++b) v[b] = (mask >> b) & 1 ? Rat(-1, 2) : Rat(1, 2);
        v[5] = Rat(1, 2);
        rs.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::E7: {
      // last coordinate scales sqrt(2) eps7
      ambient = 7;
      gram = QMatrix::identity(7);
      gram(6, 6) = 2;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          QVec v(7);
          v[i] = 1;
          v[j] = 1;
          rs.push_back(std::move(v));
          QVec w(7);
          w[j] = 1;
          w[i] = -1;
          rs.push_back(std::move(w));
        }
      rs.push_back(unit(7, 6));
      for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;  // odd number of minus signs
        QVec v(7);
        for (int b = 0; b < 6; ++b) v[b] = (mask >> b) & 1 ? Rat(-1, 2) : Rat(1, 2);
        v[6] = Rat(1, 2);
        rs.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::E8: {
      ambient = 8;
      gram = QMatrix::identity(8);
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
          QVec v(8);
          v[i] = 1;
          v[j] = 1;
          rs.push_back(std::move(v));
          QVec w(8);
          w[j] = 1;
          w[i] = -1;
          rs.push_back(std::move(w));
        }
      for (int mask = 0; mask < 128; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        QVec v(8);
        for (int b = 0; b < 7; ++b) v[b] = (mask >> b) & 1 ? Rat(-1, 2) : Rat(1, 2);
        v[7] = Rat(1, 2);
        rs.push_back(std::move(v));
      }
      break;
    }
  }
  return rs;
}

int expected_count(SimpleType t, int rank) {
  switch (t) {
    case SimpleType::A: return rank * (rank + 1) / 2;
    case SimpleType::B:
    case SimpleType::C: return rank * rank;
    case SimpleType::D: return rank * (rank - 1);
    case SimpleType::G2: return 6;
    case SimpleType::F4: return 24;
    case SimpleType::E6: return 36;
    case SimpleType::E7: return 63;
    case SimpleType::E8: return 120;
  }
  return -1;
}

}  // namespace

RootSystem build_root_system(SimpleType type, int rank) {
  RootSystem out;
  out.type = type;
  switch (type) {
    case SimpleType::E6: rank = 6; break;
    case SimpleType::E7: rank = 7; break;
    case SimpleType::E8: rank = 8; break;
    case SimpleType::F4: rank = 4; break;
    case SimpleType::G2: rank = 2; break;
    default: break;
  }
  out.rank = rank;
  std::vector<QVec> roots = raw_positive_roots(type, rank, out.ambient, out.gram);
  if (int(roots.size()) != expected_count(type, rank))
    throw std::logic_error("positive root count mismatch (internal error)");

  std::set<QVec> rootset(roots.begin(), roots.end());
  if (int(rootset.size()) != int(roots.size()))
    throw std::logic_error("duplicate positive roots (internal error)");

  // simple roots: the positive roots that are not a sum of two positive roots
  std::set<QVec> sums;
  for (const auto& a : roots)
    for (const auto& b : roots) {
      QVec s(out.ambient);
      for (int i = 0; i < out.ambient; ++i) s[i] = a[i] + b[i];
      if (rootset.count(s)) sums.insert(std::move(s));
    }
  std::vector<QVec> simples;
  for (const auto& r : roots)
    if (!sums.count(r)) simples.push_back(r);
  if (int(simples.size()) != rank)
    throw std::logic_error("simple root count mismatch (internal error)");
  std::sort(simples.begin(), simples.end());

  // coordinates in the simple basis must be nonnegative integers
  QMatrix m(out.ambient, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < out.ambient; ++i) m(i, j) = simples[j][i];
  std::vector<std::pair<QVec, std::pair<int, std::vector<long long>>>> with_height;
  for (const auto& r : roots) {
    auto c = solve(m, r);
    if (!c) throw std::logic_error("root outside simple span (internal error)");
    std::vector<long long> ic(rank);
    long long h = 0;
    for (int j = 0; j < rank; ++j) {
      if (denominator((*c)[j]) != 1 || (*c)[j] < 0)
        throw std::logic_error("root has non-integral simple coordinates (internal error)");
      ic[j] = long(numerator((*c)[j]));
      h += ic[j];
    }
    with_height.push_back({r, {int(h), std::move(ic)}});
  }
  std::sort(with_height.begin(), with_height.end(), [](const auto& a, const auto& b) {
    if (a.second.first != b.second.first) return a.second.first < b.second.first;
    return a.first < b.first;
  });
  for (int i = 0; i < int(with_height.size()); ++i) {
    out.positive.push_back(with_height[i].first);
    out.height.push_back(with_height[i].second.first);
    out.simple_coords.push_back(with_height[i].second.second);
    out.index_of[with_height[i].first] = i;
  }
  for (const auto& s : simples) out.simple_indices.push_back(out.index_of.at(s));
  return out;
}

PropertyPResult property_P(const RootSystem& rs) {
  const int n = rs.count();
  // cache of summable partners per root
  std::vector<std::vector<int>> partners(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && rs.sum_index(a, b) >= 0) partners[a].push_back(b);
  for (int a = 0; a < n; ++a)
    for (size_t x = 0; x < partners[a].size(); ++x)
      for (size_t y = x + 1; y < partners[a].size(); ++y) {
        const int b = partners[a][x], c = partners[a][y];
        if (rs.sum_index(b, c) >= 0)
          return PropertyPResult{false, std::array<int, 3>{a, b, c}};
      }
  return PropertyPResult{true, std::nullopt};
}

std::vector<std::vector<long long>> cartan_matrix(const RootSystem& rs) {
  std::vector<std::vector<long long>> a(rs.rank, std::vector<long long>(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      // a_ij = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
      Rat v = rs.cartan_pair(rs.positive[rs.simple_indices[j]], i);
      if (denominator(v) != 1) throw std::logic_error("non-integral Cartan pairing");
      a[i][j] = long(numerator(v));
    }
  return a;
}

int highest_root_index(const RootSystem& rs) {
  return rs.count() - 1;  // canonical order is height-ascending
}

// ---------------------------------------------------------------------------
// nilradicals

namespace {

// Dense square matrices over Q as flat basis elements of a matrix realization.
struct MatBasis {
  int d = 0;
  std::vector<QMatrix> mats;
  std::vector<int> roots;  // positive-root index per basis element
};

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  const int d = a.rows();
  QMatrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a(i, k) != 0)
        for (int j = 0; j < d; ++j)
          if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
      if (b(i, k) != 0)
        for (int j = 0; j < d; ++j)
          if (a(k, j) != 0) out(i, j) -= b(i, k) * a(k, j);
    }
  return out;
}

MatBasis classical_matrix_basis(SimpleType t, int n, const RootSystem& rs) {
  MatBasis mb;
  auto eij = [](int d, int i, int j) {
    QMatrix m(d, d);
    m(i, j) = 1;
    return m;
  };
  auto root_idx = [&](const QVec& v) {
    auto it = rs.index_of.find(v);
    if (it == rs.index_of.end())
      throw std::logic_error("classical basis element has no matching root");
    return it->second;
  };
  auto eps = [&](int i, int j, int si, int sj) {
    QVec v(rs.ambient);
    v[i] += si;
    v[j] += sj;
    return v;
  };
  switch (t) {
    case SimpleType::A: {
      const int d = n + 1;
      mb.d = d;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          mb.mats.push_back(eij(d, i, j));
          mb.roots.push_back(root_idx(eps(i, j, 1, -1)));
        }
      break;
    }
    case SimpleType::D: {
      const int d = 2 * n;
      mb.d = d;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QMatrix m(d, d);
          m(i, j) = 1;
          m(n + j, n + i) = -1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(eps(i, j, 1, -1)));
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QMatrix m(d, d);
          m(i, n + j) = 1;
          m(j, n + i) = -1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(eps(i, j, 1, 1)));
        }
      break;
    }
    case SimpleType::C: {
      const int d = 2 * n;
      mb.d = d;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QMatrix m(d, d);
          m(i, j) = 1;
          m(n + j, n + i) = -1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(eps(i, j, 1, -1)));
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          QMatrix m(d, d);
          m(i, n + j) += 1;
          m(j, n + i) += 1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(i == j ? eps(i, i, 1, 1) : eps(i, j, 1, 1)));
        }
      break;
    }
    case SimpleType::B: {
      const int d = 2 * n + 1;
      mb.d = d;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QMatrix m(d, d);
          m(1 + i, 1 + j) = 1;
          m(1 + n + j, 1 + n + i) = -1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(eps(i, j, 1, -1)));
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QMatrix m(d, d);
          m(1 + i, 1 + n + j) = 1;
          m(1 + j, 1 + n + i) = -1;
          mb.mats.push_back(std::move(m));
          mb.roots.push_back(root_idx(eps(i, j, 1, 1)));
        }
      for (int q = 0; q < n; ++q) {
        QMatrix m(d, d);
        m(0, 1 + n + q) = 1;
        m(1 + q, 0) = -1;
        mb.mats.push_back(std::move(m));
        QVec v(rs.ambient);
        v[q] = 1;
        mb.roots.push_back(root_idx(v));
      }
      break;
    }
    default:
      throw InvalidType("not a classical type");
  }
  return mb;
}

// structure constants of a matrix Lie algebra basis, by solving for the
// commutators in the span
BracketTable table_from_matrices(const std::vector<QMatrix>& basis) {
  const int nb = int(basis.size());
  const int d = basis.front().rows();
  QMatrix cols(d * d, nb);
  for (int b = 0; b < nb; ++b)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) cols(i * d + j, b) = basis[b](i, j);
  BracketTable t;
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b) {
      QMatrix c = commutator(basis[a], basis[b]);
      QVec vec(d * d);
      bool nz = false;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          vec[i * d + j] = c(i, j);
          nz = nz || c(i, j) != 0;
        }
      if (!nz) continue;
      auto sol = solve(cols, vec);
      if (!sol) throw std::logic_error("commutator escapes the matrix basis span");
      SparseVec sv;
      for (int k = 0; k < nb; ++k)
        if ((*sol)[k] != 0) sv.emplace_back(k, (*sol)[k]);
      t[{a, b}] = std::move(sv);
    }
  return t;
}

// fixed relation tables for the exceptional nilradicals; entries (i, j, k, c)
// mean [x_i, x_j] = c x_k with 1-based indices
struct Rel {
  int i, j, k;
  Rat c;
};

const std::vector<Rel>& g2_relations() {
  static const std::vector<Rel> rels = {
      {1, 2, 3, 1}, {1, 3, 4, 2}, {1, 4, 5, -3}, {2, 5, 6, -1}, {3, 4, 6, -3},
  };
  return rels;
}

const std::vector<Rel>& f4_relations() {
  static const std::vector<Rel> rels = {
      {1, 2, 5, 1},     {1, 13, 14, 1},  {1, 15, 6, -1},  {1, 16, 7, -1},
      {1, 17, 23, -1},  {1, 18, 19, 1},  {1, 24, 22, 1},  {2, 3, 15, 1},
      {2, 7, 8, 1},     {2, 12, 13, 1},  {2, 19, 20, 1},  {2, 21, 24, 1},
      {2, 23, 9, 1},    {3, 4, 21, 1},   {3, 5, 6, 1},    {3, 6, 7, 1},
      {3, 9, 10, 1},    {3, 11, 12, 1},  {3, 15, 16, 1},  {3, 20, 11, -2},
      {3, 22, 23, Rat(1, 2)},            {3, 24, 17, Rat(-1, 2)},
      {4, 6, 22, 1},    {4, 7, 23, 1},   {4, 8, 9, 1},    {4, 9, 20, -1},
      {4, 10, 11, 1},   {4, 15, 24, -1}, {4, 16, 17, 1},  {4, 17, 18, 1},
      {4, 23, 19, -1},  {5, 12, 14, 1},  {5, 16, 8, 1},   {5, 17, 9, 1},
      {5, 18, 20, -1},  {5, 21, 22, 1},  {6, 11, 14, -1}, {6, 15, 8, -1},
      {6, 17, 10, 1},   {6, 18, 11, 2},  {6, 21, 23, Rat(1, 2)},
      {6, 24, 9, Rat(1, 2)},             {7, 18, 12, 2},  {7, 20, 14, -2},
      {7, 24, 10, 1},   {8, 18, 13, 2},  {8, 19, 14, 2},  {8, 21, 10, -1},
      {9, 17, 13, -2},  {9, 21, 11, -1}, {9, 23, 14, 2},  {10, 21, 12, -1},
      {10, 22, 14, -1}, {10, 24, 13, -1},{11, 15, 13, -1},{15, 19, 11, 2},
      {15, 21, 17, Rat(1, 2)},           {15, 22, 9, Rat(1, 2)},
      {15, 23, 10, -1}, {16, 19, 12, 2}, {16, 20, 13, 2}, {16, 22, 10, 1},
      {17, 22, 11, 1},  {17, 23, 12, 2}, {21, 22, 19, Rat(1, 2)},
      {21, 24, 18, Rat(1, 2)},           {22, 24, 20, Rat(-1, 2)},
      {23, 24, 11, 1},
  };
  return rels;
}

// positive-root coordinates carried by the F4 basis order x_1..x_24;
// recovered (uniquely) by matching the bracket pattern against root addition
const std::vector<std::array<Rat, 4>>& f4_root_coords() {
  static const Rat h(1, 2);
  static const std::vector<std::array<Rat, 4>> coords = {
      {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1},  {h, -h, -h, -h}, {0, 1, 0, -1},
      {0, 1, 0, 0},  {0, 1, 0, 1},  {0, 1, 1, 0},  {h, h, h, -h},   {h, h, h, h},
      {1, 0, 0, 0},  {1, 0, 0, 1},  {1, 0, 1, 0},  {1, 1, 0, 0},    {0, 0, 1, 0},
      {0, 0, 1, 1},  {h, -h, h, h}, {1, -1, 0, 0}, {1, 0, -1, 0},   {1, 0, 0, -1},
      {h, -h, -h, h},{h, h, -h, -h},{h, h, -h, h}, {h, -h, h, -h},
  };
  return coords;
}

BracketTable table_from_relations(const std::vector<Rel>& rels) {
  BracketTable t;
  for (const auto& r : rels) t[{r.i - 1, r.j - 1}].emplace_back(r.k - 1, r.c);
  return t;
}

ChevalleyNilradical make_exceptional_table(SimpleType type) {
  RootSystem rs = build_root_system(type);
  const auto& rels = type == SimpleType::G2 ? g2_relations() : f4_relations();
  std::vector<int> root_of;
  if (type == SimpleType::G2) {
    // basis order x_1..x_6 carries the roots a1, a2, a1+a2, 2a1+a2, 3a1+a2,
    // 3a1+2a2 in lattice coordinates
    for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}) {
      QVec v(2);
      v[0] = a;
      v[1] = b;
      root_of.push_back(rs.index_of.at(v));
    }
  } else {
    for (const auto& c : f4_root_coords()) {
      QVec v(c.begin(), c.end());
      root_of.push_back(rs.index_of.at(v));
    }
  }
  LieAlgebra alg(rs.count(), table_from_relations(rels), type_name(type) + "+");
  // the bracket pattern must match root addition exactly
  for (int a = 0; a < rs.count(); ++a)
    for (int b = a + 1; b < rs.count(); ++b) {
      const bool has = !alg.bracket_basis(a, b).empty();
      const bool sum = rs.sum_index(root_of[a], root_of[b]) >= 0;
      if (has != sum)
        throw std::logic_error("relation table does not match the root pattern");
      if (has) {
        const auto& v = alg.bracket_basis(a, b);
        if (v.size() != 1 || root_of[v.front().first] != rs.sum_index(root_of[a], root_of[b]))
          throw std::logic_error("relation target does not match root addition");
      }
    }
  return ChevalleyNilradical(std::move(rs), std::move(alg), std::move(root_of));
}

// Frenkel-Kac style sign cocycle for the simply-laced E series
ChevalleyNilradical make_e_series(SimpleType type) {
  RootSystem rs = build_root_system(type);
  const int n = rs.count();
  const int rank = rs.rank;
  auto cm = cartan_matrix(rs);
  // eps(alpha_i, alpha_j) = -1 iff i == j, or i < j with an edge
  std::vector<std::vector<int>> parity(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      parity[i][j] = (i == j || (i < j && cm[i][j] != 0)) ? 1 : 0;
  auto eps = [&](int a, int b) {
    long long p = 0;
    for (int i = 0; i < rank; ++i) {
      if (rs.simple_coords[a][i] == 0) continue;
      for (int j = 0; j < rank; ++j)
        if (parity[i][j]) p += rs.simple_coords[a][i] * rs.simple_coords[b][j];
    }
    return p % 2 ? -1 : 1;
  };
  BracketTable t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int s = rs.sum_index(a, b);
      if (s >= 0) t[{a, b}] = SparseVec{{s, Rat(eps(a, b))}};
    }
  LieAlgebra alg(n, std::move(t), type_name(type) + "+");
  std::vector<int> root_of(n);
  for (int i = 0; i < n; ++i) root_of[i] = i;
  return ChevalleyNilradical(std::move(rs), std::move(alg), std::move(root_of));
}

}  // namespace

ChevalleyNilradical nilradical_classical(SimpleType type, int rank) {
  if (!type_has_rank(type)) throw InvalidType("nilradical_classical needs a classical type");
  RootSystem rs = build_root_system(type, rank);
  MatBasis mb = classical_matrix_basis(type, rank, rs);
  LieAlgebra alg(int(mb.mats.size()), table_from_matrices(mb.mats),
                 type_name(type) + std::to_string(rank) + "+");
  return ChevalleyNilradical(std::move(rs), std::move(alg), std::move(mb.roots));
}

ChevalleyNilradical nilradical_exceptional(SimpleType type) {
  switch (type) {
    case SimpleType::G2:
    case SimpleType::F4:
      return make_exceptional_table(type);
    case SimpleType::E6:
    case SimpleType::E7:
    case SimpleType::E8:
      return make_e_series(type);
    default:
      throw InvalidType("nilradical_exceptional needs an exceptional type");
  }
}

ChevalleyNilradical nilradical(SimpleType type, int rank) {
  return type_has_rank(type) ? nilradical_classical(type, rank) : nilradical_exceptional(type);
}

LieAlgebra borel(SimpleType type, int rank) {
  ChevalleyNilradical nil = nilradical(type, rank);
  const int r = nil.rs.rank;
  const int n = nil.algebra.dim();
  BracketTable t;
  for (const auto& [ij, v] : nil.algebra.table()) {
    SparseVec w = v;
    for (auto& [k, c] : w) k += r;
    t[{ij.first + r, ij.second + r}] = std::move(w);
  }
  for (int h = 0; h < r; ++h)
    for (int b = 0; b < n; ++b) {
      Rat val = nil.rs.cartan_pair(nil.rs.positive[nil.root_of_basis[b]], h);
      if (val != 0) t[{h, r + b}] = SparseVec{{r + b, val}};
    }
  return LieAlgebra(r + n, std::move(t), "borel(" + nil.algebra.name() + ")");
}

LieAlgebra build_u(const ChevalleyNilradical& nil, const std::set<int>& gamma, int k_dim,
                   const std::map<int, QVec>& alpha_values) {
  // closure check
  for (int a : gamma)
    for (int b : gamma) {
      if (a > b) continue;
      int s = nil.rs.sum_index(a, b);
      if (s >= 0 && !gamma.count(s)) throw GammaNotClosed(a, b);
    }
  // basis order: the k dimensions first, then gamma in nilradical basis order
  // (so the full-data construction reproduces the Borel table verbatim)
  std::map<int, int> pos;
  int idx = k_dim;
  for (int b = 0; b < nil.algebra.dim(); ++b)
    if (gamma.count(nil.root_of_basis[b])) pos[nil.root_of_basis[b]] = idx++;
  const int total = idx;
  // nilradical basis index per root index
  std::vector<int> nil_basis(nil.rs.count(), -1);
  for (int b = 0; b < nil.algebra.dim(); ++b) nil_basis[nil.root_of_basis[b]] = b;
  BracketTable t;
  for (int a : gamma)
    for (int b : gamma) {
      if (a >= b) continue;
      int s = nil.rs.sum_index(a, b);
      if (s < 0) continue;
      SparseVec v = nil.algebra.bracket_basis(nil_basis[a], nil_basis[b]);
      if (v.empty()) continue;
      if (v.size() != 1) throw std::logic_error("nilradical bracket is not single-target");
      Rat c = v.front().second;
      int pa = pos[a], pb = pos[b];
      if (pa > pb) {
        std::swap(pa, pb);
        c = -c;
      }
      t[{pa, pb}] = SparseVec{{pos[s], c}};
    }
  for (int h = 0; h < k_dim; ++h)
    for (int g : gamma) {
      auto it = alpha_values.find(g);
      if (it == alpha_values.end() || int(it->second.size()) != k_dim)
        throw std::invalid_argument("alpha_values must cover every root of Gamma");
      if (it->second[h] != 0) t[{h, pos[g]}] = SparseVec{{pos[g], it->second[h]}};
    }
  return LieAlgebra(total, std::move(t));
}

bool ideal_chain_holds(const ChevalleyNilradical& nil) {
  const int n = nil.algebra.dim();
  // basis order sorted by decreasing height, lex tiebreak on root coordinates
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int rx = nil.root_of_basis[x], ry = nil.root_of_basis[y];
    if (nil.rs.height[rx] != nil.rs.height[ry]) return nil.rs.height[rx] > nil.rs.height[ry];
    return nil.rs.positive[rx] < nil.rs.positive[ry];
  });
  std::vector<bool> in_prefix(n, false);
  for (int i = 0; i < n; ++i) {
    const int next = order[i];
    for (int j = 0; j < i; ++j) {
      for (const auto& [k, c] : nil.algebra.bracket_basis(next, order[j])) {
        (void)c;
        if (!in_prefix[k]) return false;  // bracket must land in the prefix span
      }
    }
    in_prefix[next] = true;
  }
  return true;
}

}  // namespace lk
