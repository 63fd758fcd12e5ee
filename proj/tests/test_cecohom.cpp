#include <doctest.h>

#include "lk/catalog.hpp"
#include "lk/cecohom.hpp"

using namespace lk;

namespace {

TrivCochain w(std::vector<int> tuple) {
  for (auto& t : tuple) --t;  // 1-based in tests
  TrivCochain c;
  c[tuple] = 1;
  return c;
}

}  // namespace

TEST_CASE("coboundaries of the table witnesses") {
  CHECK(d(make_g54(), 2, w({1, 5})) == w({1, 2, 3}));
  CHECK(d(make_diamond(), 2, w({1, 4})) == w({1, 2, 3}));

  TrivCochain dg = d(make_g724(), 2, w({1, 7}));
  TrivCochain expect;
  expect[{0, 2, 3}] = 1;
  expect[{0, 1, 4}] = -1;
  CHECK(dg == expect);

  CHECK(d(make_abelian(4), 2, w({1, 2})).empty());
}

TEST_CASE("d matrices have the exterior-algebra shape") {
  LieAlgebra l = make_g54();
  QMatrix d2 = d_matrix(l, 2, Coeffs::Trivial);
  CHECK(d2.rows() == 10);  // C(5,3)
  CHECK(d2.cols() == 10);  // C(5,2)
  QMatrix a2 = d_matrix(l, 2, Coeffs::Adjoint);
  CHECK(a2.rows() == 50);
  CHECK(a2.cols() == 50);
}

TEST_CASE("d composed with d vanishes") {
  for (const char* name : {"g54", "diamond", "g724", "heisenberg:3", "filiform:5"}) {
    LieAlgebra l = catalog_get(name);
    for (int deg = 0; deg + 2 <= l.dim() && deg <= 3; ++deg) {
      for (Coeffs c : {Coeffs::Trivial, Coeffs::Adjoint}) {
        QMatrix dk = d_matrix(l, deg, c);
        QMatrix dk1 = d_matrix(l, deg + 1, c);
        // (d . d) column by column
        for (int j = 0; j < dk.cols(); ++j) {
          QVec col(dk.rows());
          for (int i = 0; i < dk.rows(); ++i) col[i] = dk(i, j);
          CHECK(is_zero_vec(dk1.apply(col)));
        }
      }
    }
  }
}

TEST_CASE("betti numbers") {
  CHECK(betti(catalog_get("g2plus"), Coeffs::Adjoint) ==
        std::vector<int>{1, 4, 7, 8, 7, 5, 2});
  CHECK(betti(make_abelian(1), Coeffs::Trivial) == std::vector<int>{1, 1});
  CHECK(betti(make_heisenberg(3), Coeffs::Trivial) == std::vector<int>{1, 2, 2, 1});
  CHECK(betti(make_g54(), Coeffs::Trivial) == std::vector<int>{1, 2, 3, 3, 2, 1});
  CHECK_THROWS_AS(betti(make_abelian(11), Coeffs::Trivial), BettiCapExceeded);
}

TEST_CASE("Euler characteristic of the trivial complex vanishes") {
  for (const char* name : {"g54", "g724", "diamond", "free2step:4", "heisenberg:5"}) {
    auto b = betti(catalog_get(name), Coeffs::Trivial);
    int chi = 0;
    for (size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * b[k];
    CHECK(chi == 0);
  }
}

TEST_CASE("coboundary witnesses") {
  LieAlgebra g54 = make_g54();
  auto g = coboundary_witness(g54, w({1, 2, 3}));
  REQUIRE(g);
  CHECK(*g == w({1, 5}));  // the canonical solution is exactly w^{1,5}

  auto zero = coboundary_witness(g54, {});
  REQUIRE(zero);
  CHECK(zero->empty());

  CHECK(!coboundary_witness(make_abelian(3), w({1, 2, 3})));

  LieAlgebra f4 = make_free2step(4);
  // every generator of Im I is a coboundary there (checked via koszul in the
  // acceptance suite); spot-check one triple
  auto gg = coboundary_witness(f4, w({1, 2, 3}));
  REQUIRE(gg);
  CHECK(d(f4, 2, *gg) == w({1, 2, 3}));
}

TEST_CASE("theta vanishes on abelian algebras") {
  LieAlgebra ab = make_abelian(4);
  QVec x(4);
  x[0] = 1;
  TrivCochain gamma = w({2, 3});
  CHECK(theta(ab, x, gamma).empty());
}

namespace {

// restriction of the bracket table to the ideal spanned by basis vectors
// first+1..n (used for the codimension-1 splitting identities)
LieAlgebra restrict_tail(const LieAlgebra& l, int first) {
  BracketTable t;
  for (const auto& [ij, v] : l.table()) {
    auto [i, j] = ij;
    if (i < first) continue;
    SparseVec w;
    for (const auto& [k, c] : v) {
      REQUIRE(k >= first);
      w.emplace_back(k - first, c);
    }
    t[{i - first, j - first}] = std::move(w);
  }
  return LieAlgebra(l.dim() - first, std::move(t));
}

TrivCochain pullback3(const TrivCochain& c, int first) {
  TrivCochain out;
  for (const auto& [t, v] : c) out[{t[0] + first, t[1] + first, t[2] + first}] = v;
  return out;
}

}  // namespace

TEST_CASE("codimension-1 splitting of d (coadjoint form)") {
  // d gamma = w^1 ^ theta_{x1}(gamma) + d_{g2} gamma . (pi2 x pi2 x pi2)
  for (const char* name : {"g54", "diamond", "g724"}) {
    LieAlgebra l = catalog_get(name);
    const int n = l.dim();
    LieAlgebra l2 = restrict_tail(l, 1);
    QVec x1(n), omega1(n);
    x1[0] = 1;
    omega1[0] = 1;
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        TrivCochain gamma;
        gamma[{u, v}] = 1;
        TrivCochain lhs = d(l, 2, gamma);
        TrivCochain th = theta(l, x1, gamma);
        TrivCochain rhs = wedge1(l, omega1, th);
        TrivCochain gamma2;
        gamma2[{u - 1, v - 1}] = 1;
        for (const auto& [t, c] : pullback3(d(l2, 2, gamma2), 1)) {
          rhs[t] += c;
          if (rhs[t] == 0) rhs.erase(t);
        }
        CHECK(lhs == rhs);
      }
  }
}
