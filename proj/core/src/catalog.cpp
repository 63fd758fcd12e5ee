#include "lk/catalog.hpp"

#include <algorithm>

#include "lk/rootkit.hpp"

namespace lk {

LieAlgebra make_abelian(int n) {
  if (n < 1) throw BadParameters("abelian needs n >= 1");
  return LieAlgebra(n, {}, "abelian:" + std::to_string(n));
}

LieAlgebra make_heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0) throw BadParameters("heisenberg needs odd dimension >= 3");
  BracketTable t;
  for (int i = 0; i + 1 < dim - 1; i += 2) t[{i, i + 1}] = SparseVec{{dim - 1, Rat(1)}};
  return LieAlgebra(dim, std::move(t), "heisenberg:" + std::to_string(dim));
}

LieAlgebra make_filiform(int n) {
  if (n < 3) throw BadParameters("filiform needs n >= 3");
  BracketTable t;
  for (int i = 1; i + 1 < n; ++i) t[{0, i}] = SparseVec{{i + 1, Rat(1)}};
  return LieAlgebra(n, std::move(t), "filiform:" + std::to_string(n));
}

LieAlgebra make_free2step(int m) {
  if (m < 2 || m > 5) throw BadParameters("free2step needs 2 <= m <= 5");
  BracketTable t;
  int next = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) t[{i, j}] = SparseVec{{next++, Rat(1)}};
  return LieAlgebra(next, std::move(t), "free2step:" + std::to_string(m));
}

LieAlgebra make_g54() {
  BracketTable t;
  t[{0, 1}] = {{2, Rat(1)}};
  t[{0, 2}] = {{3, Rat(1)}};
  t[{1, 2}] = {{4, Rat(1)}};
  return LieAlgebra(5, std::move(t), "g54");
}

LieAlgebra make_diamond() {
  BracketTable t;
  t[{0, 1}] = {{2, Rat(1)}};
  t[{0, 2}] = {{1, Rat(-1)}};
  t[{1, 2}] = {{3, Rat(1)}};
  return LieAlgebra(4, std::move(t), "diamond");
}

LieAlgebra make_g724() {
  BracketTable t;
  t[{0, 1}] = {{2, Rat(1)}};
  t[{0, 2}] = {{3, Rat(1)}};
  t[{0, 3}] = {{4, Rat(1)}};
  t[{0, 4}] = {{5, Rat(1)}};
  t[{1, 4}] = {{6, Rat(-1)}};
  t[{2, 3}] = {{6, Rat(1)}};
  return LieAlgebra(7, std::move(t), "g724");
}

QMatrix g724_nilpotent_derivation(const Rat& xi21, const Rat& xi52, const Rat& xi61,
                                  const Rat& xi62, const Rat& xi71) {
  QMatrix d(7, 7);
  d(1, 0) = xi21;
  d(4, 1) = xi52;
  d(5, 0) = xi61;
  d(5, 1) = xi62;
  d(5, 2) = xi52;
  d(6, 0) = xi71;
  d(6, 5) = -xi21;  // forced by the derivation equations on [x1, x5] = x6
  return d;
}

namespace {

// the relabeled 10-dimensional product g54 x g54 (generators first)
LieAlgebra make_g54xg54() {
  BracketTable t;
  t[{0, 1}] = {{4, Rat(1)}};
  t[{0, 4}] = {{5, Rat(1)}};
  t[{1, 4}] = {{6, Rat(1)}};
  t[{2, 3}] = {{7, Rat(1)}};
  t[{2, 7}] = {{8, Rat(1)}};
  t[{3, 7}] = {{9, Rat(1)}};
  return LieAlgebra(10, std::move(t), "g54xg54");
}

LieAlgebra make_c_x_g54sq() {
  LieAlgebra p = make_g54xg54();
  BracketTable t = p.table();
  return LieAlgebra(11, std::move(t), "c_x_g54sq");
}

struct ParsedSpec {
  std::string base;
  std::optional<int> param;
};

ParsedSpec split_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos) return {spec, std::nullopt};
  std::string p = spec.substr(colon + 1);
  if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(c); }))
    throw BadParameters("bad parameter in '" + spec + "'");
  return {spec.substr(0, colon), std::stoi(p)};
}

int need_param(const ParsedSpec& s) {
  if (!s.param) throw BadParameters(s.base + " needs a parameter, e.g. " + s.base + ":3");
  return *s.param;
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"abelian", "n >= 1", true},
      {"heisenberg", "odd dim >= 3", true},
      {"filiform", "n >= 3", true},
      {"free2step", "2 <= m <= 5", true},
      {"g54", "", false},
      {"g54xC", "", false},
      {"g54xC2", "", false},
      {"g54xg54", "", false},
      {"c_x_g54sq", "", false},
      {"diamond", "", false},
      {"g724", "", false},
      {"g724adj0", "", false},
      {"g724adjtau", "", false},
      {"g2plus", "", false},
      {"g618", "", false},
      {"f4plus", "", false},
      {"e6plus", "", false},
      {"e7plus", "", false},
      {"e8plus", "", false},
      {"aplus", "rank >= 1", true},
      {"bplus", "rank >= 2", true},
      {"cplus", "rank >= 2", true},
      {"dplus", "rank >= 2", true},
  };
}

LieAlgebra catalog_get(const std::string& spec) {
  ParsedSpec s = split_spec(spec);
  const std::string& b = s.base;
  if (b == "abelian") return make_abelian(need_param(s));
  if (b == "heisenberg") return make_heisenberg(need_param(s));
  if (b == "filiform") return make_filiform(need_param(s));
  if (b == "free2step") return make_free2step(need_param(s));
  if (b == "g54") return make_g54();
  if (b == "g54xC") return direct_product(make_g54(), make_abelian(1));
  if (b == "g54xC2") return direct_product(make_g54(), make_abelian(2));
  if (b == "g54xg54") return make_g54xg54();
  if (b == "c_x_g54sq") return make_c_x_g54sq();
  if (b == "diamond") return make_diamond();
  if (b == "g724") return make_g724();
  if (b == "g724adj0") {
    LieAlgebra a = adjoin_derivation(make_g724(), QMatrix(7, 7));
    return LieAlgebra(a.dim(), a.table(), "g724adj0");
  }
  if (b == "g724adjtau") {
    LieAlgebra a = adjoin_derivation(make_g724(), g724_nilpotent_derivation(1, 0, 0, 0, 0));
    return LieAlgebra(a.dim(), a.table(), "g724adjtau");
  }
  if (b == "g2plus" || b == "g618") {
    LieAlgebra a = nilradical_exceptional(SimpleType::G2).algebra;
    return LieAlgebra(a.dim(), a.table(), b);
  }
  if (b == "f4plus") return nilradical_exceptional(SimpleType::F4).algebra;
  if (b == "e6plus") return nilradical_exceptional(SimpleType::E6).algebra;
  if (b == "e7plus") return nilradical_exceptional(SimpleType::E7).algebra;
  if (b == "e8plus") return nilradical_exceptional(SimpleType::E8).algebra;
  if (b == "aplus") return nilradical_classical(SimpleType::A, need_param(s)).algebra;
  if (b == "bplus") return nilradical_classical(SimpleType::B, need_param(s)).algebra;
  if (b == "cplus") return nilradical_classical(SimpleType::C, need_param(s)).algebra;
  if (b == "dplus") return nilradical_classical(SimpleType::D, need_param(s)).algebra;
  throw UnknownName(spec);
}

ExpectedFacts catalog_expected(const std::string& spec) {
  ParsedSpec s = split_spec(spec);
  const std::string& b = s.base;
  ExpectedFacts f;
  auto sym = [](int i, int j, const Rat& c) {
    return std::pair<std::array<int, 2>, Rat>({i, j}, c);
  };
  if (b == "abelian") {
    int n = need_param(s);
    f.dim = n;
    f.forms_dim = n * (n + 1) / 2;
    f.i_null = true;
    f.i_exact = true;
    f.quadratic = true;
    return f;
  }
  if (b == "heisenberg") {
    int n = need_param(s);
    f.dim = n;
    f.i_null = true;
    f.i_exact = true;
    f.quadratic = false;
    if (n == 3) {
      f.dim = 3;
      f.forms_dim = 3;
      f.gcm_generators = {1, 2};
      f.gcm = {{2, -1}, {-1, 2}};
      f.gcm_tag = "finite:A2";
    }
    return f;
  }
  if (b == "filiform") {
    int n = need_param(s);
    f.dim = n;
    f.forms_dim = 3;  // ell = 2 and Im I = 0
    f.i_null = true;
    f.i_exact = true;
    f.quadratic = false;
    f.gcm_generators = {1, 2};
    f.gcm = {{2, -(n - 2)}, {-1, 2}};
    if (n == 4) f.gcm_tag = "finite:C2";
    if (n == 5) f.gcm_tag = "finite:G2";
    if (n == 6) f.gcm_tag = "affine:A2~2";
    return f;
  }
  if (b == "free2step") {
    int m = need_param(s);
    f.dim = m + m * (m - 1) / 2;
    if (m == 4) {
      f.dim_im_i = 4;
      f.forms_dim = 14;
      f.i_exact = true;
      f.quadratic = false;
      f.i_null = false;
    }
    if (m == 5) {
      f.dim_im_i = 10;
      f.forms_dim = 25;
      f.i_exact = true;
      f.quadratic = false;
      f.i_null = false;
    }
    return f;
  }
  if (b == "g54") {
    f.dim = 5;
    f.forms_dim = 4;
    f.dim_im_i = 1;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 5, 1), sym(2, 4, -1), sym(3, 3, 1)};
    f.i_b = {{{1, 2, 3}, Rat(1)}};
    f.witness_2form = {{{1, 5}, Rat(1)}};
    f.gcm_generators = {1, 2};
    f.gcm = {{2, -2}, {-2, 2}};
    f.gcm_tag = "affine:A1~1";
    return f;
  }
  if (b == "g54xC") {
    f.dim = 6;
    f.forms_dim = 7;
    f.dim_im_i = 1;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 5, 1), sym(2, 4, -1), sym(3, 3, 1)};
    f.i_b = {{{1, 2, 3}, Rat(1)}};
    f.witness_2form = {{{1, 5}, Rat(1)}};
    return f;
  }
  if (b == "g54xC2") {
    f.dim = 7;
    f.forms_dim = 11;
    f.dim_im_i = 1;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 5, 1), sym(2, 4, -1), sym(3, 3, 1)};
    f.i_b = {{{1, 2, 3}, Rat(1)}};
    f.witness_2form = {{{1, 5}, Rat(1)}};
    return f;
  }
  if (b == "g54xg54") {
    f.dim = 10;
    f.dim_im_i = 2;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    return f;
  }
  if (b == "c_x_g54sq") {
    f.dim = 11;
    f.dim_im_i = 2;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 7, 1), sym(2, 6, -1), sym(5, 5, 1)};
    return f;
  }
  if (b == "diamond") {
    f.dim = 4;
    f.forms_dim = 2;
    f.dim_im_i = 1;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 4, 1), sym(2, 2, 1), sym(3, 3, 1)};
    f.i_b = {{{1, 2, 3}, Rat(1)}};
    f.witness_2form = {{{1, 4}, Rat(1)}};
    return f;
  }
  if (b == "g724") {
    f.dim = 7;
    f.forms_dim = 4;
    f.dim_im_i = 1;
    f.i_null = false;
    f.i_exact = true;
    f.quadratic = true;
    f.b_entries = {sym(1, 7, 1), sym(2, 6, 1), sym(3, 5, -1), sym(4, 4, 1)};
    f.i_b = {{{1, 3, 4}, Rat(1)}, {{1, 2, 5}, Rat(-1)}};
    f.witness_2form = {{{1, 7}, Rat(1)}};
    f.gcm_generators = {1, 2};
    f.gcm = {{2, -4}, {-1, 2}};
    f.gcm_tag = "affine:A2~2";
    return f;
  }
  if (b == "g724adj0") {
    f.dim = 8;
    f.forms_dim = 7;
    f.dim_im_i = 1;
    f.i_null = false;
    f.quadratic = true;
    return f;
  }
  if (b == "g724adjtau") {
    f.dim = 8;
    f.i_null = true;
    f.i_exact = true;
    return f;
  }
  if (b == "g2plus" || b == "g618") {
    f.dim = 6;
    f.forms_dim = 3;
    f.i_null = true;
    f.i_exact = true;
    f.quadratic = false;
    f.gcm_generators = {1, 2};
    f.gcm = {{2, -3}, {-1, 2}};
    f.gcm_tag = "finite:G2";
    return f;
  }
  if (b == "f4plus") {
    f.dim = 24;
    f.forms_dim = 10;
    f.i_null = true;
    f.i_exact = true;
    return f;
  }
  if (b == "e6plus") {
    f.dim = 36;
    f.forms_dim = 21;
    f.i_null = true;
    return f;
  }
  if (b == "e7plus") {
    f.dim = 63;
    return f;
  }
  if (b == "e8plus") {
    f.dim = 120;
    return f;
  }
  if (b == "aplus" || b == "bplus" || b == "cplus" || b == "dplus") {
    int r = need_param(s);
    if (b == "aplus") f.dim = r * (r + 1) / 2;
    if (b == "bplus" || b == "cplus") f.dim = r * r;
    if (b == "dplus") f.dim = r * (r - 1);
    f.i_null = true;
    f.i_exact = true;
    return f;
  }
  throw UnknownName(spec);
}

}  // namespace lk
