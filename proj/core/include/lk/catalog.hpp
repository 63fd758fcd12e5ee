#ifndef LK_CATALOG_HPP
#define LK_CATALOG_HPP

#include <optional>
#include <string>

#include "lk/liealg.hpp"

namespace lk {

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& n) : std::runtime_error("unknown catalog name: " + n) {}
};
struct BadParameters : std::runtime_error {
  explicit BadParameters(const std::string& w) : std::runtime_error(w) {}
};

/// Expected verdicts for acceptance checking. Only values traceable to the
/// source tables are ever set; everything else stays unset.
struct ExpectedFacts {
  std::optional<int> dim;
  std::optional<int> forms_dim;
  std::optional<int> dim_im_i;
  std::optional<bool> i_null;
  std::optional<bool> i_exact;
  std::optional<bool> quadratic;
  /// expected I_B of the distinguished basis form, as 1-based triples
  std::vector<std::pair<std::array<int, 3>, Rat>> i_b;
  /// distinguished invariant form (1-based symmetric entries), when printed
  std::vector<std::pair<std::array<int, 2>, Rat>> b_entries;
  /// expected coboundary witness, as 1-based pairs (d witness = I_B)
  std::vector<std::pair<std::array<int, 2>, Rat>> witness_2form;
  /// expected GCM facts: generators (1-based), matrix, classification tag
  std::vector<int> gcm_generators;
  std::vector<std::vector<long long>> gcm;
  std::string gcm_tag;
  bool gcm_degenerate_weights = false;  // some weight space has dim > 1
};

struct CatalogEntry {
  std::string name;
  std::string params_help;  // e.g. "n >= 3" for parametric families
  bool parametric = false;
};

/// Names: abelian:n, heisenberg:n (odd n >= 3), filiform:n (n >= 3),
/// free2step:m (2 <= m <= 5), g54, g54xC, g54xC2, g54xg54, c_x_g54sq,
/// diamond, g724, g724adj0, g724adjtau, g2plus (= g618), f4plus, e6plus,
/// e7plus, e8plus, aplus:n, bplus:n, cplus:n, dplus:n.
std::vector<CatalogEntry> catalog_entries();

/// Resolve "name" or "name:param". Throws UnknownName / BadParameters.
LieAlgebra catalog_get(const std::string& spec);

/// Expectations for the entry, when the source states any.
ExpectedFacts catalog_expected(const std::string& spec);

/// Convenience builders (also reachable through catalog_get).
LieAlgebra make_abelian(int n);
LieAlgebra make_heisenberg(int dim);
LieAlgebra make_filiform(int n);
LieAlgebra make_free2step(int m);
LieAlgebra make_g54();
LieAlgebra make_diamond();
LieAlgebra make_g724();
/// the displayed nilpotent derivation family of g_{7,2.4}: parameters
/// (xi21; xi52; xi61, xi62; xi71); the (7,6) entry is forced to -xi21
QMatrix g724_nilpotent_derivation(const Rat& xi21, const Rat& xi52, const Rat& xi61,
                                  const Rat& xi62, const Rat& xi71);

}  // namespace lk

#endif
