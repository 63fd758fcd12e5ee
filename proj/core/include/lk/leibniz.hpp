#ifndef LK_LEIBNIZ_HPP
#define LK_LEIBNIZ_HPP

#include <functional>
#include <span>
#include <stdexcept>

#include "lk/liealg.hpp"

namespace lk {

struct DegreeTooHigh : std::runtime_error {
  explicit DegreeTooHigh(int deg)
      : std::runtime_error("Leibniz coboundary limited to degree <= 3, got " +
                           std::to_string(deg)) {}
};

/// Adjoint Leibniz cochain: an arbitrary multilinear map g^{x deg} -> g,
/// stored densely. No symmetry is imposed.
class LeibnizCochain {
 public:
  LeibnizCochain(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  /// Component: coefficient of x_target in psi(x_{args[0]}, ..., x_{args[deg-1]}).
  Rat& at(std::span<const int> args, int target);
  const Rat& at(std::span<const int> args, int target) const;

  /// Value vector psi(args).
  QVec value(std::span<const int> args) const;

  bool is_zero() const;
  bool operator==(const LeibnizCochain& o) const = default;

 private:
  size_t flat(std::span<const int> args) const;
  int dim_, degree_;
  std::vector<Rat> comp_;  // index = flat(args) * dim + target
};

/// The Leibniz coboundary: three-sum formula with signs (-1)^i and (-1)^{j+1}.
/// Input degree is capped at 3.
LeibnizCochain delta(const LieAlgebra& l, const LeibnizCochain& psi);

/// Core evaluator shared with the Chevalley-Eilenberg module: (delta psi)(args)
/// where psi is given as an evaluation callback on one-lower degree.
QVec delta_eval(const LieAlgebra& l, int degree,
                const std::function<QVec(std::span<const int>)>& psi,
                std::span<const int> args);

/// Basis of ZL^2_0 = { symmetric 2-cocycles } = center (x) ker I: the cochains
/// (x, y) -> B(x, y) z for z in a center basis and B in a ker-I basis.
/// Every returned element is verified to satisfy delta psi = 0.
std::vector<LeibnizCochain> zl2_0(const LieAlgebra& l);

/// dim of (center (x) Im I) cap B^3(g, g) inside g (x) Lambda^3 g*.
int coupled_dim(const LieAlgebra& l);

bool is_uncoupling(const LieAlgebra& l);

/// dim HL^2(g,g) = dim H^2(g,g) + dim ZL^2_0 + coupled_dim.
int hl2_dim(const LieAlgebra& l);

}  // namespace lk

#endif
