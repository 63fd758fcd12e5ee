#ifndef LK_RATIONAL_HPP
#define LK_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <vector>

namespace lk {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator); no floating point is used anywhere in the library.
/// Expression templates are off: plain value semantics everywhere.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

using QVec = std::vector<Rat>;

inline bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Render as "p" or "p/q".
inline std::string rat_str(const Rat& r) {
  return r.str();
}

/// Parse "p", "-p", "p/q". Returns nothing on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

}  // namespace lk

#endif
