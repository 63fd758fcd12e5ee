#ifndef LK_GCM_HPP
#define LK_GCM_HPP

#include <string>

#include "lk/liealg.hpp"

namespace lk {

struct NotAGCM : std::runtime_error {
  explicit NotAGCM(const std::string& what) : std::runtime_error(what) {}
};
struct NotNilpotent : std::runtime_error {
  NotNilpotent() : std::runtime_error("the algebra is not nilpotent") {}
};
struct GeneratorsNotComplementary : std::runtime_error {
  explicit GeneratorsNotComplementary(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateWeights : std::runtime_error {
  DegenerateWeights()
      : std::runtime_error(
            "the algebra has a weight space of dimension > 1; the simple "
            "ad-exponent recipe does not apply") {}
};

/// Generalized Cartan matrix: 2s on the diagonal, nonpositive integers off it,
/// symmetric zero pattern.
struct GCM {
  std::vector<std::vector<long long>> a;

  int size() const { return int(a.size()); }
  static GCM from_entries(std::vector<std::vector<long long>> entries);  // validates
};

enum class GCMKind { Finite, Affine, IndefiniteHyperbolic, IndefiniteNonHyperbolic, Decomposable };

struct GCMType {
  GCMKind kind;
  std::string name;                  // e.g. "A2", "A1~1"; empty when unnamed
  std::vector<GCMType> components;   // nonempty exactly for Decomposable

  /// Tagged string: "finite:A2", "affine:A1~1", "indefinite:hyperbolic",
  /// "indefinite:nonhyperbolic", components joined by " x " for decomposable.
  std::string tag() const;
};

/// GCM from ad-nilpotency exponents: a^i_i = 2 and -a^i_j the lowest k with
/// ad(x_i)^{k+1} x_j = 0. Generators are 1-based basis indices and must
/// project to a basis of g / C^2 g.
GCM compute_gcm(const LieAlgebra& l, const std::vector<int>& generators);

/// Finite / affine / indefinite (hyperbolic or not) per indecomposable block;
/// finite and affine blocks matched to their standard names by
/// permutation-equivalence against generated tables.
GCMType classify(const GCM& a);

/// True when simultaneous row/column permutation carries a onto b.
bool perm_equivalent(const std::vector<std::vector<long long>>& a,
                     const std::vector<std::vector<long long>>& b);

/// The name tables used by classify: finite Cartan matrices generated from
/// the root systems, and affine ones (untwisted generated from the highest
/// root; twisted by diagram duality).
struct NamedGCM {
  std::string name;
  std::vector<std::vector<long long>> m;
};
const std::vector<NamedGCM>& standard_finite_gcms();
const std::vector<NamedGCM>& standard_affine_gcms();

}  // namespace lk

#endif
