#ifndef LK_LIEALG_HPP
#define LK_LIEALG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lk/exactla.hpp"

namespace lk {

/// Sparse vector in the algebra: sorted (basis index, coefficient), 0-based.
using SparseVec = std::vector<std::pair<int, Rat>>;

/// Structure constants keyed by (i, j) with i < j, 0-based.
using BracketTable = std::map<std::pair<int, int>, SparseVec>;

struct JacobiWitness {
  int i, j, k;     // 1-based basis indices
  QVec defect;     // cyclic sum, nonzero
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("parse error (line " + std::to_string(line) + "): " + what), line(line) {}
  int line;
};

struct JacobiError : std::runtime_error {
  explicit JacobiError(JacobiWitness w)
      : std::runtime_error("Jacobi identity fails on triple (" + std::to_string(w.i) + "," +
                           std::to_string(w.j) + "," + std::to_string(w.k) + ")"),
        witness(std::move(w)) {}
  JacobiWitness witness;
};

struct NotAnIdeal : std::runtime_error {
  NotAnIdeal(int i, int j)
      : std::runtime_error("subspace is not an ideal: [x_" + std::to_string(i) + ", v_" +
                           std::to_string(j) + "] leaves it"),
        basis_index(i), ideal_index(j) {}
  int basis_index, ideal_index;
};

struct NotADerivation : std::runtime_error {
  NotADerivation(int i, int j)
      : std::runtime_error("matrix is not a derivation: fails on pair (x_" + std::to_string(i) +
                           ", x_" + std::to_string(j) + ")"),
        i(i), j(j) {}
  int i, j;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry holds by storage (only i < j kept); the Jacobi identity is
/// verified eagerly at every construction entry point.
class LieAlgebra {
 public:
  LieAlgebra(int dim, BracketTable table, std::string name = "",
             std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& table() const { return table_; }

  /// [x_i, x_j] as a sparse vector (0-based, any i, j).
  SparseVec bracket_basis(int i, int j) const;

  /// [u, v] for coordinate vectors.
  QVec bracket(const QVec& u, const QVec& v) const;

  /// ad(x_i) as a matrix (column j = [x_i, x_j]).
  QMatrix ad(int i) const;

 private:
  int dim_;
  BracketTable table_;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Subspace of a Lie algebra, basis canonical (RREF rows).
struct Subspace {
  int ambient = 0;
  std::vector<QVec> basis;
  std::vector<int> pivots;

  int dim() const { return int(basis.size()); }
  bool contains(const QVec& v) const { return in_rref_span(basis, pivots, v); }
};

Subspace make_subspace(int ambient, const std::vector<QVec>& vectors);

/// OK -> nothing; otherwise the first failing triple in lexicographic order.
std::optional<JacobiWitness> check_jacobi(int dim, const BracketTable& table);
inline std::optional<JacobiWitness> check_jacobi(const LieAlgebra& l) {
  return check_jacobi(l.dim(), l.table());
}

Subspace derived_subalgebra(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);

/// C^1 g = g, C^{k+1} g = [g, C^k g]; stops at the first stationary term.
/// The final term is {0} exactly when the algebra is nilpotent.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);

/// Block-diagonal product; first factor occupies indices 0..dim(l1)-1.
LieAlgebra direct_product(const LieAlgebra& l1, const LieAlgebra& l2);

/// g/h on the complement basis chosen by the pivot columns of the ideal's
/// echelon form. Throws NotAnIdeal with a witness pair.
LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal);

/// Basis of all D with D[x,y] = [Dx,y] + [x,Dy].
std::vector<QMatrix> derivations(const LieAlgebra& l);

bool is_derivation(const LieAlgebra& l, const QMatrix& d, int* bad_i = nullptr, int* bad_j = nullptr);

/// Extend by one generator x_{n+1} acting as [x_{n+1}, x_i] = D x_i.
/// D must be a derivation (verified); the result is Jacobi-checked again.
LieAlgebra adjoin_derivation(const LieAlgebra& l, const QMatrix& d);

/// Parse the structure-constant text format (see README). Throws ParseError
/// or JacobiError.
LieAlgebra from_relations(const std::string& source);

}  // namespace lk

#endif
