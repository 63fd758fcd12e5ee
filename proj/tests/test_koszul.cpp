#include <doctest.h>

#include "lk/catalog.hpp"
#include "lk/koszul.hpp"
#include "lk/rootkit.hpp"

using namespace lk;

namespace {

BilinearForm sym(int n, std::vector<std::tuple<int, int, Rat>> entries) {
  QMatrix m(n, n);
  for (auto& [i, j, c] : entries) {
    m(i - 1, j - 1) = c;
    m(j - 1, i - 1) = c;
  }
  return BilinearForm::from_matrix(std::move(m));
}

}  // namespace

TEST_CASE("invariant form counts (table values)") {
  CHECK(invariant_forms(make_g54()).size() == 4);
  CHECK(invariant_forms(make_abelian(4)).size() == 10);
  CHECK(invariant_forms(make_heisenberg(3)).size() == 3);
  CHECK(invariant_forms(make_g724()).size() == 4);
  CHECK(invariant_forms(make_diamond()).size() == 2);
  CHECK(invariant_forms(catalog_get("g54xC")).size() == 7);
  CHECK(invariant_forms(catalog_get("g54xC2")).size() == 11);
  CHECK(invariant_forms(catalog_get("g54xg54")).size() == 12);
  CHECK(invariant_forms(catalog_get("c_x_g54sq")).size() == 17);
  CHECK(invariant_forms(make_free2step(4)).size() == 14);
}

TEST_CASE("every reported form is invariant") {
  for (const char* name : {"g54", "g724", "diamond", "free2step:3", "heisenberg:5"}) {
    LieAlgebra l = catalog_get(name);
    for (const auto& b : invariant_forms(l)) CHECK(is_invariant(l, b));
  }
}

TEST_CASE("koszul_form on the stated table forms") {
  LieAlgebra g54 = make_g54();
  TriForm t = koszul_form(g54, sym(5, {{1, 5, 1}, {2, 4, -1}, {3, 3, 1}}));
  TrivCochain expect;
  expect[{0, 1, 2}] = 1;
  CHECK(t.comp == expect);

  // any symmetric form on an abelian algebra maps to zero
  CHECK(koszul_form(make_abelian(3), sym(3, {{1, 2, 5}, {3, 3, 2}})).is_zero());

  TriForm td = koszul_form(make_diamond(), sym(4, {{1, 4, 1}, {2, 2, 1}, {3, 3, 1}}));
  CHECK(td.comp == expect);

  LieAlgebra g724 = make_g724();
  TriForm t7 = koszul_form(g724, sym(7, {{1, 7, 1}, {2, 6, 1}, {3, 5, -1}, {4, 4, 1}}));
  TrivCochain expect7;
  expect7[{0, 2, 3}] = 1;
  expect7[{0, 1, 4}] = -1;
  CHECK(t7.comp == expect7);
}

TEST_CASE("non-invariant forms are rejected with a witness") {
  try {
    koszul_form(make_g54(), sym(5, {{3, 3, 1}}));
    FAIL("expected NotInvariant");
  } catch (const NotInvariant& e) {
    CHECK(e.z >= 1);
    CHECK(e.x >= 1);
    CHECK(e.y >= 1);
  }
}

TEST_CASE("kernel and image dimensions") {
  auto [ker54, im54] = kernel_and_image(make_g54());
  CHECK(ker54.size() == 3);
  CHECK(im54.size() == 1);

  auto [kerab, imab] = kernel_and_image(make_abelian(4));
  CHECK(kerab.size() == 10);
  CHECK(imab.empty());

  auto [ker724, im724] = kernel_and_image(make_g724());
  CHECK(ker724.size() == 3);
  CHECK(im724.size() == 1);
}

TEST_CASE("I-null verdicts") {
  CHECK(is_I_null(make_filiform(4)));
  CHECK(is_I_null(make_filiform(6)));
  CHECK(is_I_null(make_heisenberg(3)));
  CHECK(is_I_null(make_heisenberg(7)));
  CHECK(is_I_null(make_abelian(5)));
  CHECK(!is_I_null(make_g54()));
  CHECK(!is_I_null(make_diamond()));
  CHECK(!is_I_null(make_free2step(4)));
}

TEST_CASE("products and quotients preserve I-nullity") {
  LieAlgebra prod = direct_product(make_heisenberg(3), make_filiform(4));
  CHECK(is_I_null(prod));
  CHECK(is_I_null(direct_product(prod, make_abelian(2))));

  LieAlgebra f6 = make_filiform(6);
  CHECK(is_I_null(quotient(f6, center(f6))));
}

TEST_CASE("I-exactness with verified witnesses") {
  LieAlgebra g54 = make_g54();
  auto [exact, wit] = is_I_exact(g54);
  CHECK(exact);
  REQUIRE(wit.size() == 1);
  auto [ker, im] = kernel_and_image(g54);
  CHECK(d(g54, 2, wit[0]) == im[0].comp);

  CHECK(is_I_exact(make_diamond()).first);
  CHECK(is_I_exact(make_filiform(5)).first);  // vacuous: no Im I generators
  CHECK(is_I_exact(make_filiform(5)).second.empty());
}

TEST_CASE("quadratic decisions") {
  auto [q54, w54] = is_quadratic(make_g54());
  CHECK(q54);
  REQUIRE(w54);
  CHECK(w54->is_nondegenerate());
  CHECK(is_invariant(make_g54(), *w54));

  CHECK(!is_quadratic(make_heisenberg(3)).first);
  CHECK(!is_quadratic(make_free2step(4)).first);
  CHECK(!is_quadratic(make_free2step(5)).first);
  CHECK(is_quadratic(make_diamond()).first);
  CHECK(is_quadratic(make_abelian(3)).first);
  CHECK(is_quadratic(catalog_get("g54xg54")).first);
  CHECK(is_quadratic(catalog_get("c_x_g54sq")).first);
}

TEST_CASE("nonabelian quadratic algebras are not I-null") {
  for (const char* name : {"g54", "g724", "diamond", "g54xC", "g54xg54", "c_x_g54sq",
                           "heisenberg:3", "filiform:4", "free2step:4", "g2plus",
                           "g724adj0", "g724adjtau", "abelian:4"}) {
    LieAlgebra l = catalog_get(name);
    KoszulReport r = analyze(l);
    const bool abelian = derived_subalgebra(l).dim() == 0;
    if (r.quadratic && !abelian) CHECK(!r.i_null);
    if (r.i_null && !abelian) CHECK(!r.quadratic);
  }
}

TEST_CASE("forms dimension identity across the catalog") {
  for (const char* name : {"g54", "g724", "diamond", "g54xC", "g54xC2", "g54xg54",
                           "c_x_g54sq", "heisenberg:3", "heisenberg:5", "filiform:4",
                           "filiform:6", "free2step:3", "free2step:4", "abelian:5",
                           "g2plus", "g724adj0", "g724adjtau"}) {
    LieAlgebra l = catalog_get(name);
    KoszulReport r = analyze(l);
    CHECK(r.forms_dim() == r.ell * (r.ell + 1) / 2 + r.im_dim());
    CHECK(r.ker_dim() == r.ell * (r.ell + 1) / 2);
  }
}

TEST_CASE("every Koszul form is closed and fully alternating") {
  for (const char* name : {"g54", "g724", "diamond", "free2step:4", "g2plus"}) {
    LieAlgebra l = catalog_get(name);
    for (const auto& b : invariant_forms(l)) {
      TriForm t = koszul_form(l, b);
      CHECK(d(l, 3, t.comp).empty());
      // the componentwise definition agrees with all argument orders
      for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j)
          for (int k = 0; k < l.dim(); ++k) {
            Rat direct = 0;
            for (const auto& [m, c] : l.bracket_basis(i, j)) direct += c * b.m(m, k);
            CHECK(t.eval(i, j, k) == direct);
          }
    }
  }
}

namespace {

LieAlgebra restrict_tail(const LieAlgebra& l, int first) {
  BracketTable t;
  for (const auto& [ij, v] : l.table()) {
    auto [i, j] = ij;
    if (i < first) continue;
    SparseVec w;
    for (const auto& [k, c] : v) w.emplace_back(k - first, c);
    t[{i - first, j - first}] = std::move(w);
  }
  return LieAlgebra(l.dim() - first, std::move(t));
}

}  // namespace

TEST_CASE("codimension-1 splitting of the Koszul form") {
  // I_B = d(w^1 ^ f) + I_{B_2} . (pi2 x pi2 x pi2) with f = B(. , x1)
  for (const char* name : {"g54", "g724", "diamond", "filiform:5"}) {
    LieAlgebra l = catalog_get(name);
    const int n = l.dim();
    LieAlgebra l2 = restrict_tail(l, 1);
    QVec omega1(n);
    omega1[0] = 1;
    for (const auto& b : invariant_forms(l)) {
      TriForm ib = koszul_form(l, b);
      // f as a 2-form wedge: (w1 ^ f)(x,y) = w1(x) f(y) - w1(y) f(x)
      TrivCochain w1f;
      for (int j = 1; j < n; ++j)
        if (b.m(j, 0) != 0) w1f[{0, j}] = b.m(j, 0);
      TrivCochain rhs = d(l, 2, w1f);
      QMatrix b2(n - 1, n - 1);
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) b2(i - 1, j - 1) = b.m(i, j);
      TriForm ib2 = koszul_form(l2, BilinearForm{std::move(b2)});
      for (const auto& [t, c] : ib2.comp) {
        std::vector<int> up{t[0] + 1, t[1] + 1, t[2] + 1};
        rhs[up] += c;
        if (rhs[up] == 0) rhs.erase(up);
      }
      CHECK(ib.comp == rhs);
    }
  }
}

TEST_CASE("full analysis of the table rows") {
  KoszulReport r = analyze(make_g54());
  CHECK(r.forms_dim() == 4);
  CHECK(r.ell == 2);
  CHECK(!r.i_null);
  CHECK(r.i_exact);
  CHECK(r.quadratic);
  REQUIRE(r.im_i.size() == 1);
  TrivCochain w123;
  w123[{0, 1, 2}] = 1;
  CHECK(r.im_i[0].comp == w123);
  REQUIRE(r.exact_witnesses.size() == 1);
  CHECK(d(make_g54(), 2, r.exact_witnesses[0]) == w123);
}
