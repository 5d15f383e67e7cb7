#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruffles/lumping.hpp"
#include "ruffles/words.hpp"

namespace ruffles {

using ordered_json = nlohmann::ordered_json;

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: '" + s + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed integer list: '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("malformed integer list: '" + s + "'");
  return out;
}

// Word literal a:x1,x2,...,xn, e.g. "2:1,1,0,1,0".
inline RadixWord parse_word(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("malformed word literal (want a:x1,...,xn): '" + s + "'");
  int radix = 0;
  try {
    std::size_t used = 0;
    radix = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed radix in word literal: '" + s + "'");
  }
  return make_word(radix, parse_int_list(s.substr(colon + 1)));
}

// Directed literal with an up:/down: prefix, e.g. "down:2:1,1,0,1,0".
inline DirectedWord parse_directed_word(const std::string& s) {
  if (s.rfind("up:", 0) == 0) return DirectedWord{Direction::up, parse_word(s.substr(3))};
  if (s.rfind("down:", 0) == 0) return DirectedWord{Direction::down, parse_word(s.substr(5))};
  throw std::invalid_argument("directed word literal needs an up:/down: prefix: '" + s + "'");
}

inline std::string format_tuple(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format: " + s);
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Structure-constant table. JSON schema:
//   {"n", "statistic", "classes": [{"label","size"}...],
//    "constants": [{"a","b","c","value"}...]}     (sparse, non-zero only)
// The graded case (distinct factor universes) additionally carries
// "classes_a"/"classes_b". CSV mirrors the sparse list; text is a readable
// summary. All renderings are deterministic byte streams.
inline std::string render_structure(const StructureTable& t, int n, OutputFormat fmt) {
  const int na = static_cast<int>(t.a_labels.size());
  const int nb = static_cast<int>(t.b_labels.size());
  const int nc = static_cast<int>(t.c_labels.size());
  const bool graded = t.a_labels != t.c_labels || t.b_labels != t.c_labels ||
                      t.a_sizes != t.c_sizes || t.b_sizes != t.c_sizes;
  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["n"] = n;
    j["statistic"] = t.c_statistic;
    auto classes = ordered_json::array();
    for (int c = 0; c < nc; ++c)
      classes.push_back({{"label", t.c_labels[static_cast<std::size_t>(c)]},
                         {"size", t.c_sizes[static_cast<std::size_t>(c)]}});
    j["classes"] = classes;
    if (graded) {
      auto ca = ordered_json::array();
      for (int a = 0; a < na; ++a)
        ca.push_back({{"label", t.a_labels[static_cast<std::size_t>(a)]},
                      {"size", t.a_sizes[static_cast<std::size_t>(a)]}});
      auto cb = ordered_json::array();
      for (int b = 0; b < nb; ++b)
        cb.push_back({{"label", t.b_labels[static_cast<std::size_t>(b)]},
                      {"size", t.b_sizes[static_cast<std::size_t>(b)]}});
      j["classes_a"] = ca;
      j["classes_b"] = cb;
    }
    auto constants = ordered_json::array();
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nc; ++c)
          if (t.at(a, b, c) != 0)
            constants.push_back({{"a", t.a_labels[static_cast<std::size_t>(a)]},
                                 {"b", t.b_labels[static_cast<std::size_t>(b)]},
                                 {"c", t.c_labels[static_cast<std::size_t>(c)]},
                                 {"value", t.at(a, b, c)}});
    j["constants"] = constants;
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    std::string out = "a,b,c,value\n";
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nc; ++c)
          if (t.at(a, b, c) != 0)
            out += csv_quote(t.a_labels[static_cast<std::size_t>(a)]) + "," +
                   csv_quote(t.b_labels[static_cast<std::size_t>(b)]) + "," +
                   csv_quote(t.c_labels[static_cast<std::size_t>(c)]) + "," +
                   std::to_string(t.at(a, b, c)) + "\n";
    return out;
  }
  std::ostringstream out;
  out << "statistic " << t.c_statistic << ", n=" << n << ", " << nc << " classes\n";
  for (int c = 0; c < nc; ++c)
    out << "  class " << t.c_labels[static_cast<std::size_t>(c)] << "  size "
        << t.c_sizes[static_cast<std::size_t>(c)] << "\n";
  out << "structure constants (non-zero):\n";
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nc; ++c)
        if (t.at(a, b, c) != 0)
          out << "  C[" << t.a_labels[static_cast<std::size_t>(a)] << "]["
              << t.b_labels[static_cast<std::size_t>(b)] << "]["
              << t.c_labels[static_cast<std::size_t>(c)] << "] = " << t.at(a, b, c) << "\n";
  return out.str();
}

inline std::string render_restructure(const RestructureMatrix& m, int n, const std::string& map,
                                      OutputFormat fmt) {
  const int rows = static_cast<int>(m.row_labels.size());
  const int cols = static_cast<int>(m.col_labels.size());
  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["n"] = n;
    j["map"] = map;
    j["source_statistic"] = m.source_statistic;
    j["target_statistic"] = m.target_statistic;
    auto rj = ordered_json::array();
    for (int r = 0; r < rows; ++r)
      rj.push_back({{"label", m.row_labels[static_cast<std::size_t>(r)]},
                    {"size", m.row_sizes[static_cast<std::size_t>(r)]}});
    auto cj = ordered_json::array();
    for (int c = 0; c < cols; ++c)
      cj.push_back({{"label", m.col_labels[static_cast<std::size_t>(c)]},
                    {"size", m.col_sizes[static_cast<std::size_t>(c)]}});
    j["rows"] = rj;
    j["cols"] = cj;
    auto entries = ordered_json::array();
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (m.at(r, c) != 0)
          entries.push_back({{"row", m.row_labels[static_cast<std::size_t>(r)]},
                             {"col", m.col_labels[static_cast<std::size_t>(c)]},
                             {"value", m.at(r, c)}});
    j["entries"] = entries;
    j["triangular"] = m.triangular;
    auto row_order = ordered_json::array();
    auto col_order = ordered_json::array();
    for (int r : m.row_order) row_order.push_back(m.row_labels[static_cast<std::size_t>(r)]);
    for (int c : m.col_order) col_order.push_back(m.col_labels[static_cast<std::size_t>(c)]);
    j["row_order"] = row_order;
    j["col_order"] = col_order;
    j["diagonal"] = m.diagonal;
    auto unhit = ordered_json::array();
    for (int c : m.unhit_columns) unhit.push_back(m.col_labels[static_cast<std::size_t>(c)]);
    j["unhit_columns"] = unhit;
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    std::string out = "row,col,value\n";
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (m.at(r, c) != 0)
          out += csv_quote(m.row_labels[static_cast<std::size_t>(r)]) + "," +
                 csv_quote(m.col_labels[static_cast<std::size_t>(c)]) + "," +
                 std::to_string(m.at(r, c)) + "\n";
    return out;
  }
  std::ostringstream out;
  out << "restructure constants for " << map << ": " << m.source_statistic << " -> "
      << m.target_statistic << ", n=" << n << "\n";
  out << "rows (" << m.source_statistic << "):";
  for (int r = 0; r < rows; ++r) out << ' ' << m.row_labels[static_cast<std::size_t>(r)];
  out << "\ncols (" << m.target_statistic << "):";
  for (int c = 0; c < cols; ++c) out << ' ' << m.col_labels[static_cast<std::size_t>(c)];
  out << "\n";
  for (int r = 0; r < rows; ++r) {
    out << "  [" << m.row_labels[static_cast<std::size_t>(r)] << "]";
    for (int c = 0; c < cols; ++c) out << ' ' << m.at(r, c);
    out << "\n";
  }
  out << "triangular: " << (m.triangular ? "yes" : "no") << "\n";
  if (m.triangular) {
    out << "diagonal:";
    for (std::int64_t d : m.diagonal) out << ' ' << d;
    out << "\nrow order:";
    for (int r : m.row_order) out << ' ' << m.row_labels[static_cast<std::size_t>(r)];
    out << "\ncol order:";
    for (int c : m.col_order) out << ' ' << m.col_labels[static_cast<std::size_t>(c)];
    out << "\n";
  }
  if (!m.unhit_columns.empty()) {
    out << "unhit columns:";
    for (int c : m.unhit_columns) out << ' ' << m.col_labels[static_cast<std::size_t>(c)];
    out << "\n";
  }
  return out.str();
}

}  // namespace ruffles
