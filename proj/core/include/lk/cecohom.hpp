#ifndef LK_CECOHOM_HPP
#define LK_CECOHOM_HPP

#include <array>
#include <map>
#include <optional>
#include <span>

#include "lk/liealg.hpp"

namespace lk {

/// Alternating cochain with trivial coefficients: components on strictly
/// increasing index tuples (0-based).
using TrivCochain = std::map<std::vector<int>, Rat>;

/// Alternating cochain with adjoint coefficients: value vector per tuple.
using AdjCochain = std::map<std::vector<int>, QVec>;

enum class Coeffs { Trivial, Adjoint };

/// Evaluate an alternating cochain on an arbitrary argument tuple (with sign).
Rat eval_alternating(const TrivCochain& c, std::span<const int> args);
QVec eval_alternating(const AdjCochain& c, int dim, std::span<const int> args);

/// Chevalley-Eilenberg differential. Both versions are the Leibniz coboundary
/// restricted to alternating cochains (the adjoint one literally runs through
/// the shared delta evaluator; the trivial one is its zero-action
/// specialization). d(d(.)) = 0 is asserted in debug builds for small inputs.
TrivCochain d(const LieAlgebra& l, int degree, const TrivCochain& c);
AdjCochain d(const LieAlgebra& l, int degree, const AdjCochain& c);

/// Matrix of d : C^deg -> C^{deg+1}. Basis tuples in lexicographic order;
/// adjoint components indexed target-major: row/col = target * C(n,k) + tuple.
QMatrix d_matrix(const LieAlgebra& l, int degree, Coeffs coeffs);

/// All increasing `k`-tuples of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> tuples(int n, int k);

/// dim H^0 .. H^n. Refuses dim > 10 (binomial blowup); lower-degree
/// operations work for any dimension.
std::vector<int> betti(const LieAlgebra& l, Coeffs coeffs);

struct BettiCapExceeded : std::runtime_error {
  explicit BettiCapExceeded(int n)
      : std::runtime_error("betti numbers are only computed for dim <= 10, got dim " +
                           std::to_string(n)) {}
};

/// gamma with d gamma = omega (canonical particular solution), or nothing when
/// omega is not a coboundary.
std::optional<TrivCochain> coboundary_witness(const LieAlgebra& l, const TrivCochain& omega3);

/// Coadjoint action on 2-forms: (theta_x gamma)(u, v) = -gamma([x,u],v) - gamma(u,[x,v]).
TrivCochain theta(const LieAlgebra& l, const QVec& x, const TrivCochain& gamma);

/// omega^1 wedge beta for a 1-form omega dual to basis direction `idx` and a
/// 2-form beta (used in the codimension-1 splitting identities).
TrivCochain wedge1(const LieAlgebra& l, const QVec& one_form, const TrivCochain& two_form);

}  // namespace lk

#endif
