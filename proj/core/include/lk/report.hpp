#ifndef LK_REPORT_HPP
#define LK_REPORT_HPP

#include <optional>
#include <string>

#include "lk/cecohom.hpp"
#include "lk/koszul.hpp"
#include "lk/liealg.hpp"

// vendored single-header nlohmann/json
#include <json.hpp>

namespace lk {

struct AnalyzeOptions {
  std::optional<Coeffs> betti;
  bool leibniz = false;
};

/// Structured analysis document with a fixed key set (see README):
/// name, dim, ell, dim_derived, dim_center, nilpotent, forms_dim, dim_ker_I,
/// dim_Im_I, I_null, I_exact, quadratic, witnesses, and optional betti /
/// leibniz blocks. All rationals are exact "p/q" strings.
nlohmann::json analysis_json(const LieAlgebra& l, const AnalyzeOptions& opts);

/// Human-readable rendering of the same document.
std::string analysis_text(const nlohmann::json& doc);

struct TableRow {
  std::string entry;
  std::string cell;
  std::string expected;
  std::string got;
  bool pass = true;
  bool conditional = false;  // row computed without stated expectations
};

/// Reproduce the stated table expectations for every built-in entry; extra
/// structure-constant files (conditional rows) may be appended by path.
std::vector<TableRow> report_tables(bool slow, const std::vector<std::string>& extra_files);

/// PASS/FAIL rendering; returns false when any row failed.
bool render_table_rows(const std::vector<TableRow>& rows, std::string& out);

/// Names of the built-in entries the table runner checks.
std::vector<std::string> table_entry_names(bool slow);

nlohmann::json triform_json(const TriForm& t);
nlohmann::json cochain2_json(const TrivCochain& c);
nlohmann::json form_json(const BilinearForm& b);

}  // namespace lk

#endif
