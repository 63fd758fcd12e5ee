#include <cctype>
#include <sstream>

#include "lk/liealg.hpp"

namespace lk {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// term := [coef '*'] index, coef := ['-'] int ['/' int]
// `sign` is the sign carried by the preceding +/- separator.
void parse_term(const std::string& term, int sign, int dim, int line, SparseVec& out) {
  std::string t = strip(term);
  if (t.empty()) throw ParseError(line, "empty term");
  Rat coef = sign;
  size_t star = t.find('*');
  if (star != std::string::npos) {
    auto c = parse_rat(strip(t.substr(0, star)));
    if (!c) throw ParseError(line, "bad coefficient '" + t.substr(0, star) + "'");
    coef *= *c;
    t = strip(t.substr(star + 1));
  } else if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    if (t[0] == '-') coef = -coef;
    t = strip(t.substr(1));
  }
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); }))
    throw ParseError(line, "bad basis index '" + t + "'");
  int k = std::stoi(t);
  if (k < 1 || k > dim) throw ParseError(line, "basis index " + std::to_string(k) + " out of range");
  out.emplace_back(k - 1, coef);
}

}  // namespace

LieAlgebra from_relations(const std::string& source) {
  // line-oriented; ';' acts as a line separator too
  std::vector<std::pair<int, std::string>> lines;
  {
    int lineno = 1;
    std::string cur;
    for (size_t i = 0; i <= source.size(); ++i) {
      char c = i < source.size() ? source[i] : '\n';
      if (c == '\n' || c == ';') {
        size_t h = cur.find('#');
        if (h != std::string::npos) cur.resize(h);
        std::string s = strip(cur);
        if (!s.empty()) lines.emplace_back(lineno, s);
        cur.clear();
        if (c == '\n') ++lineno;
      } else {
        cur += c;
      }
    }
  }

  int dim = -1;
  std::string name;
  BracketTable table;
  for (auto& [lineno, s] : lines) {
    if (s.rfind("dim", 0) == 0 && (s.size() == 3 || std::isspace(s[3]))) {
      if (dim >= 0) throw ParseError(lineno, "duplicate dim line");
      std::string rest = strip(s.substr(3));
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(),
                                       [](char c) { return std::isdigit(c); }))
        throw ParseError(lineno, "bad dimension '" + rest + "'");
      dim = std::stoi(rest);
      if (dim < 1) throw ParseError(lineno, "dimension must be >= 1");
      continue;
    }
    if (s.rfind("name", 0) == 0 && (s.size() == 4 || std::isspace(s[4]))) {
      name = strip(s.substr(4));
      continue;
    }
    if (s[0] != '[') throw ParseError(lineno, "expected 'dim', 'name' or a bracket line");
    if (dim < 0) throw ParseError(lineno, "bracket before dim line");
    size_t close = s.find(']');
    size_t comma = s.find(',');
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw ParseError(lineno, "malformed bracket '[i,j]'");
    std::string is = strip(s.substr(1, comma - 1));
    std::string js = strip(s.substr(comma + 1, close - comma - 1));
    auto parse_index = [&](const std::string& t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); }))
        throw ParseError(lineno, "bad index '" + t + "'");
      return std::stoi(t);
    };
    int i = parse_index(is), j = parse_index(js);
    if (i < 1 || j < 1 || i > dim || j > dim)
      throw ParseError(lineno, "bracket index out of range");
    if (i >= j) throw ParseError(lineno, "bracket requires i < j");
    size_t eq = s.find('=', close);
    if (eq == std::string::npos) throw ParseError(lineno, "missing '='");
    if (table.count({i - 1, j - 1}))
      throw ParseError(lineno, "duplicate bracket [" + is + "," + js + "]");
    std::string rhs = strip(s.substr(eq + 1));
    if (rhs.empty()) throw ParseError(lineno, "empty right-hand side");
    // split into signed terms; '-' inside a fraction cannot occur (q > 0)
    SparseVec v;
    int sign = 1;
    std::string term;
    bool leading = true;
    for (size_t p = 0; p <= rhs.size(); ++p) {
      char c = p < rhs.size() ? rhs[p] : '+';
      if ((c == '+' || c == '-') && !leading && p < rhs.size()) {
        parse_term(term, sign, dim, lineno, v);
        sign = (c == '-') ? -1 : 1;
        term.clear();
      } else if (p == rhs.size()) {
        parse_term(term, sign, dim, lineno, v);
      } else {
        if (!std::isspace(c)) leading = false;
        term += c;
      }
    }
    table[{i - 1, j - 1}] = std::move(v);
  }
  if (dim < 0) throw ParseError(1, "missing dim line");
  return LieAlgebra(dim, std::move(table), name);
}

}  // namespace lk
