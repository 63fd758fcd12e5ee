#ifndef LK_ROOTKIT_HPP
#define LK_ROOTKIT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "lk/liealg.hpp"

namespace lk {

enum class SimpleType { A, B, C, D, E6, E7, E8, F4, G2 };

std::optional<SimpleType> parse_simple_type(const std::string& s);
std::string type_name(SimpleType t);
bool type_has_rank(SimpleType t);  // A..D take a rank argument

struct InvalidType : std::runtime_error {
  explicit InvalidType(const std::string& what) : std::runtime_error(what) {}
};

/// Positive roots of a simple type, with exact rational coordinates.
/// Irrational scalings (sqrt3 e6 for E6, sqrt2 e7 for E7) are kept exact by
/// treating the scaled vector as its own coordinate; `gram` carries the inner
/// product of the ambient coordinates. Roots are ordered canonically: height
/// ascending, then lexicographic on coordinates.
struct RootSystem {
  SimpleType type;
  int rank = 0;
  int ambient = 0;
  QMatrix gram;
  std::vector<QVec> positive;                   // canonical order
  std::vector<int> simple_indices;              // positions of the simple roots
  std::vector<int> height;                      // per positive root
  std::vector<std::vector<long long>> simple_coords;  // nonneg coords in the simple basis
  std::map<QVec, int> index_of;

  int count() const { return int(positive.size()); }
  Rat inner(const QVec& a, const QVec& b) const;
  /// index of a+b among the positive roots, or -1
  int sum_index(int a, int b) const;
  /// Cartan pairing 2(a, alpha_i)/(alpha_i, alpha_i) for a positive root
  Rat cartan_pair(const QVec& a, int simple_pos) const;
};

/// pre: valid (type, rank); A needs rank >= 1, B/C rank >= 2, D rank >= 2.
RootSystem build_root_system(SimpleType type, int rank = 0);

struct PropertyPResult {
  bool holds = true;
  // first violating triple (alpha, beta, gamma) in canonical index order
  std::optional<std::array<int, 3>> witness;
};

/// (P): alpha+beta and alpha+gamma positive roots => beta+gamma is not.
PropertyPResult property_P(const RootSystem& rs);

/// Nilradical of the Borel subalgebra, as a Lie algebra plus the
/// root <-> basis-index correspondence.
struct ChevalleyNilradical {
  RootSystem rs;
  LieAlgebra algebra;
  std::vector<int> root_of_basis;  // basis index -> positive-root index

  ChevalleyNilradical(RootSystem r, LieAlgebra a, std::vector<int> m)
      : rs(std::move(r)), algebra(std::move(a)), root_of_basis(std::move(m)) {}
};

struct InvalidRank : std::runtime_error {
  explicit InvalidRank(const std::string& what) : std::runtime_error(what) {}
};

/// Classical nilradicals from the explicit matrix realizations
/// (strictly upper triangular for A; block realizations for B, C, D).
/// Basis order: A: E_{i,j} lex; D: all Et then all Ft, lex; B: D-part then
/// v_q; C: Et then Fh including the diagonal, lex.
ChevalleyNilradical nilradical_classical(SimpleType type, int rank);

/// G2+/F4+ from their fixed relation tables; E6/E7/E8 via a bimultiplicative
/// sign cocycle on the root lattice (all coefficients +-1). Jacobi-verified.
ChevalleyNilradical nilradical_exceptional(SimpleType type);

/// Either of the above, by type.
ChevalleyNilradical nilradical(SimpleType type, int rank = 0);

/// Nilradical extended by the rank-dimensional Cartan, acting by the Cartan
/// integers: [H_i, X_alpha] = <alpha, alpha_i^vee> X_alpha. Cartan first.
LieAlgebra borel(SimpleType type, int rank = 0);

struct GammaNotClosed : std::runtime_error {
  GammaNotClosed(int a, int b)
      : std::runtime_error("Gamma is not closed: roots #" + std::to_string(a) + " + #" +
                           std::to_string(b) + " is a positive root outside Gamma"),
        a(a), b(b) {}
  int a, b;
};

/// u = k (+) sum of root spaces over Gamma. `alpha_values[r]` gives
/// (alpha(H_1), ..., alpha(H_kdim)) for the root of positive index r; values
/// must be additive on Gamma (enforced by the Jacobi check).
LieAlgebra build_u(const ChevalleyNilradical& nil, const std::set<int>& gamma, int k_dim,
                   const std::map<int, QVec>& alpha_values);

/// Decreasing-height chain check: ordering the root vectors by decreasing
/// height (lex tiebreak), every prefix span is an ideal of the next span.
bool ideal_chain_holds(const ChevalleyNilradical& nil);

/// Cartan matrix of the simple roots: a_ij = 2(a_i, a_j)/(a_i, a_i).
std::vector<std::vector<long long>> cartan_matrix(const RootSystem& rs);

/// Highest root (unique maximal-height positive root).
int highest_root_index(const RootSystem& rs);

}  // namespace lk

#endif
