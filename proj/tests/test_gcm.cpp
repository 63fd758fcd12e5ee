#include <doctest.h>

#include "lk/catalog.hpp"
#include "lk/gcm.hpp"
#include "lk/rootkit.hpp"

using namespace lk;

namespace {

using Mat = std::vector<std::vector<long long>>;

GCMType classify_mat(Mat m) { return classify(GCM::from_entries(std::move(m))); }

}  // namespace

TEST_CASE("GCM from ad-exponents") {
  CHECK(compute_gcm(make_heisenberg(3), {1, 2}).a == Mat{{2, -1}, {-1, 2}});
  CHECK(compute_gcm(make_filiform(4), {1, 2}).a == Mat{{2, -2}, {-1, 2}});
  CHECK(compute_gcm(make_filiform(5), {1, 2}).a == Mat{{2, -3}, {-1, 2}});
  CHECK(compute_gcm(make_g54(), {1, 2}).a == Mat{{2, -2}, {-2, 2}});
  CHECK(compute_gcm(make_g724(), {1, 2}).a == Mat{{2, -4}, {-1, 2}});
  CHECK(compute_gcm(make_abelian(2), {1, 2}).a == Mat{{2, 0}, {0, 2}});
  CHECK(compute_gcm(catalog_get("g618"), {1, 2}).a == Mat{{2, -3}, {-1, 2}});
  CHECK(compute_gcm(make_free2step(3), {1, 2, 3}).a ==
        Mat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

TEST_CASE("GCM error paths") {
  CHECK_THROWS_AS(compute_gcm(make_diamond(), {1}), NotNilpotent);
  CHECK_THROWS_AS(compute_gcm(make_g54(), {1}), GeneratorsNotComplementary);
  CHECK_THROWS_AS(compute_gcm(make_g54(), {1, 3}), GeneratorsNotComplementary);  // x3 in C2 g
  CHECK_THROWS_AS(compute_gcm(make_g54(), {1, 2, 3}), GeneratorsNotComplementary);
  CHECK_THROWS_AS(GCM::from_entries({{2, -1}, {0, 2}}), NotAGCM);
  CHECK_THROWS_AS(GCM::from_entries({{1, -1}, {-1, 2}}), NotAGCM);
  CHECK_THROWS_AS(GCM::from_entries({{2, 1}, {1, 2}}), NotAGCM);
}

TEST_CASE("permutation stability of the GCM on catalog fixtures") {
  // swapping the generators permutes the matrix accordingly
  GCM a = compute_gcm(make_filiform(5), {1, 2});
  GCM b = compute_gcm(make_filiform(5), {2, 1});
  CHECK(perm_equivalent(a.a, b.a));
  CHECK(classify(a).tag() == classify(b).tag());
}

TEST_CASE("classification of the stated rows") {
  CHECK(classify_mat({{2, -1}, {-1, 2}}).tag() == "finite:A2");
  CHECK(classify_mat({{2, -2}, {-1, 2}}).tag() == "finite:C2");
  CHECK(classify_mat({{2, -3}, {-1, 2}}).tag() == "finite:G2");
  CHECK(classify_mat({{2, -2}, {-2, 2}}).tag() == "affine:A1~1");
  CHECK(classify_mat({{2, -4}, {-1, 2}}).tag() == "affine:A2~2");
  CHECK(classify_mat({{2, -3}, {-2, 2}}).tag() == "indefinite:hyperbolic");
}

TEST_CASE("classification of stated higher-rank rows") {
  // rows whose matrices appear with these names in the source tables
  CHECK(classify_mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}).tag() == "affine:A2~1");
  CHECK(classify_mat({{2, -3, 0}, {-1, 2, -1}, {0, -1, 2}}).tag() == "affine:G2~1");
  CHECK(classify_mat({{2, -3, -1}, {-1, 2, 0}, {-1, 0, 2}}).tag() == "affine:D4~3");
  CHECK(classify_mat({{2, -2, -1}, {-1, 2, 0}, {-2, 0, 2}}).tag() == "affine:A4~2");
  CHECK(classify_mat({{2, -1, -1}, {-2, 2, 0}, {-2, 0, 2}}).tag() == "affine:D3~2");
  CHECK(classify_mat({{2, -2, -2}, {-1, 2, 0}, {-1, 0, 2}}).tag() == "affine:C2~1");
  CHECK(classify_mat({{2, -2, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}).tag() ==
        "affine:B3~1");
  CHECK(classify_mat({{2, 0, 0, -2}, {0, 2, -2, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}).tag() ==
        "affine:D4~2");
  CHECK(classify_mat({{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}).tag() == "finite:A3");
  CHECK(classify_mat({{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}}).tag() == "finite:B3");
  CHECK(classify_mat({{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}}).tag() == "finite:C3");
  CHECK(classify_mat({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}}).tag() ==
        "finite:D4");
  CHECK(classify_mat({{2, -2, -1, 0}, {-1, 2, 0, -1}, {-1, 0, 2, 0}, {0, -1, 0, 2}}).tag() ==
        "finite:F4");
}

TEST_CASE("indefinite non-hyperbolic rows") {
  CHECK(classify_mat({{2, -3, -2}, {-2, 2, -1}, {-1, -1, 2}}).kind ==
        GCMKind::IndefiniteNonHyperbolic);
  CHECK(classify_mat({{2, -3, -3}, {-3, 2, -3}, {-3, -3, 2}}).kind ==
        GCMKind::IndefiniteNonHyperbolic);
  CHECK(classify_mat({{2, -1, -2}, {-3, 2, -1}, {-1, -1, 2}}).kind ==
        GCMKind::IndefiniteHyperbolic);
}

TEST_CASE("rank-2 determinant trichotomy, exhaustively to 6") {
  for (long long a = 0; a <= 6; ++a)
    for (long long b = 0; b <= 6; ++b) {
      if ((a == 0) != (b == 0)) continue;  // zero pattern must be symmetric
      GCMType t = classify_mat({{2, -a}, {-b, 2}});
      if (a == 0) {
        CHECK(t.kind == GCMKind::Decomposable);
        continue;
      }
      if (a * b <= 3) CHECK(t.kind == GCMKind::Finite);
      else if (a * b == 4) CHECK(t.kind == GCMKind::Affine);
      else CHECK(t.kind == GCMKind::IndefiniteHyperbolic);
    }
}

TEST_CASE("decomposable matrices report their component types") {
  GCMType t = classify_mat({{2, 0}, {0, 2}});
  CHECK(t.kind == GCMKind::Decomposable);
  REQUIRE(t.components.size() == 2);
  CHECK(t.components[0].tag() == "finite:A1");
  CHECK(t.tag() == "finite:A1 x finite:A1");

  GCMType m = classify_mat({{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}});
  CHECK(m.kind == GCMKind::Decomposable);
  CHECK(m.tag() == "affine:A1~1 x finite:A2");
}

TEST_CASE("classify is invariant under simultaneous permutation") {
  Mat m{{2, -2, -1}, {-1, 2, 0}, {-2, 0, 2}};
  Mat p{{2, 0, -1}, {0, 2, -2}, {-2, -1, 2}};  // swap rows/cols 1 and 2
  CHECK(classify_mat(m).tag() == classify_mat(p).tag());
}

TEST_CASE("nilradical GCMs recover the finite type") {
  auto check_type = [](SimpleType t, int rank, const std::string& want) {
    ChevalleyNilradical nil = nilradical(t, rank);
    // generators: the basis elements carrying the simple roots
    std::vector<int> gens;
    for (int s : nil.rs.simple_indices)
      for (int b = 0; b < nil.algebra.dim(); ++b)
        if (nil.root_of_basis[b] == s) gens.push_back(b + 1);
    GCM g = compute_gcm(nil.algebra, gens);
    CHECK(classify(g).tag() == "finite:" + want);
  };
  for (int n = 1; n <= 5; ++n) check_type(SimpleType::A, n, "A" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) check_type(SimpleType::C, n, "C" + std::to_string(n));
  check_type(SimpleType::B, 3, "B3");
  check_type(SimpleType::B, 2, "C2");  // rank-2 B and C coincide up to order
  check_type(SimpleType::D, 4, "D4");
  check_type(SimpleType::G2, 0, "G2");
  check_type(SimpleType::F4, 0, "F4");
  check_type(SimpleType::E6, 0, "E6");
}

TEST_CASE("the standard name tables are self-consistent") {
  for (const auto& e : standard_finite_gcms()) {
    GCMType t = classify(GCM::from_entries(e.m));
    CHECK(t.kind == GCMKind::Finite);
    CHECK(t.name == e.name);
  }
  for (const auto& e : standard_affine_gcms()) {
    GCMType t = classify(GCM::from_entries(e.m));
    CHECK(t.kind == GCMKind::Affine);
    CHECK(t.name == e.name);
  }
  // pairwise inequivalence within each table
  const auto& fin = standard_finite_gcms();
  for (size_t i = 0; i < fin.size(); ++i)
    for (size_t j = i + 1; j < fin.size(); ++j)
      CHECK(!perm_equivalent(fin[i].m, fin[j].m));
  const auto& aff = standard_affine_gcms();
  for (size_t i = 0; i < aff.size(); ++i)
    for (size_t j = i + 1; j < aff.size(); ++j)
      CHECK(!perm_equivalent(aff[i].m, aff[j].m));
}
