#ifndef LK_KOSZUL_HPP
#define LK_KOSZUL_HPP

#include <optional>

#include "lk/cecohom.hpp"
#include "lk/liealg.hpp"

namespace lk {

/// Symmetric bilinear form on the algebra, B_{ij} = B(x_i, x_j).
struct BilinearForm {
  QMatrix m;

  static BilinearForm from_matrix(QMatrix mat);  // checks symmetry
  int dim() const { return m.rows(); }
  bool is_nondegenerate() const;
};

/// Alternating 3-form; components on increasing triples.
struct TriForm {
  int dim = 0;
  TrivCochain comp;  // keys are increasing triples

  bool is_zero() const { return comp.empty(); }
  Rat eval(int i, int j, int k) const;
  bool operator==(const TriForm& o) const = default;
};

struct NotInvariant : std::runtime_error {
  NotInvariant(int z, int x, int y)
      : std::runtime_error("form is not invariant: fails on triple (x_" + std::to_string(z) +
                           ", x_" + std::to_string(x) + ", x_" + std::to_string(y) + ")"),
        z(z), x(x), y(y) {}
  int z, x, y;
};

struct QuadraticUndecided : std::runtime_error {
  explicit QuadraticUndecided(const std::string& why)
      : std::runtime_error("quadraticity decision exceeded resource limits: " + why) {}
};

/// Canonical basis of the invariant symmetric forms (S^2 g*)^g, i.e. the
/// solution space of B([Z,X],Y) = -B(X,[Z,Y]).
std::vector<BilinearForm> invariant_forms(const LieAlgebra& l);

/// I_B with components B([x_i,x_j],x_k); B must be invariant.
TriForm koszul_form(const LieAlgebra& l, const BilinearForm& b);
bool is_invariant(const LieAlgebra& l, const BilinearForm& b, int* z = nullptr, int* x = nullptr,
                  int* y = nullptr);

struct KoszulReport {
  int dim = 0;
  int ell = 0;                       // dim g / C^2 g
  std::vector<BilinearForm> forms;   // basis of (S^2 g*)^g
  std::vector<BilinearForm> ker_i;   // basis of ker I
  std::vector<TriForm> im_i;         // basis of Im I
  bool i_null = false;
  bool i_exact = false;
  bool quadratic = false;
  std::vector<TrivCochain> exact_witnesses;     // gamma with d gamma = (Im I basis elt)
  std::optional<BilinearForm> quadratic_witness;

  int forms_dim() const { return int(forms.size()); }
  int ker_dim() const { return int(ker_i.size()); }
  int im_dim() const { return int(im_i.size()); }
};

/// ker I and Im I; checks dim ker I = ell(ell+1)/2 (the kernel is the
/// symmetric square of g/C^2 g).
std::pair<std::vector<BilinearForm>, std::vector<TriForm>> kernel_and_image(const LieAlgebra& l);

/// I identically zero; cross-validated against the second characterization
/// (the common kernel of all invariant forms equals C^2 g).
bool is_I_null(const LieAlgebra& l);

/// Every Im I basis element a coboundary; witnesses returned alongside.
std::pair<bool, std::vector<TrivCochain>> is_I_exact(const LieAlgebra& l);

/// Existence of a nondegenerate invariant form, decided exactly:
/// common-kernel / common-isotropic shortcuts, then a deterministic witness
/// search, then (rarely) a symbolic determinant over the coefficient field.
std::pair<bool, std::optional<BilinearForm>> is_quadratic(const LieAlgebra& l);

/// Full analysis in one pass (shares the forms basis across the checks).
KoszulReport analyze(const LieAlgebra& l);

}  // namespace lk

#endif
