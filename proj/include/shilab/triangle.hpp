#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "shilab/root_system.hpp"
#include "shilab/shi.hpp"

namespace shilab {

/**
 * Height-row layout for per-root data.  Row h (printed top-down from the
 * highest root's height to 1) carries the roots of height h in canonical
 * order, indented by h-1 spaces.  For A_n this is the classical staircase
 * triangle whose bottom row is alpha_1..alpha_n and whose apex is the
 * highest root; the same layout stays well defined (and parseable) for the
 * other families.
 */
inline std::vector<std::vector<int>> height_rows(const RootSystem& rs) {
  int max_h = rs.highest_root().height;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_h));
  for (int r = 0; r < rs.num_positive(); ++r)
    rows[static_cast<std::size_t>(rs.height(r) - 1)].push_back(r);
  return rows;
}

/// Renders one token per positive root (tokens supplied in canonical order).
inline std::string render_triangle(const RootSystem& rs, const std::vector<std::string>& cells) {
  if (static_cast<int>(cells.size()) != rs.num_positive())
    throw FormatError("expected one cell per positive root");
  std::vector<std::vector<int>> rows = height_rows(rs);
  std::string out;
  for (std::size_t h = rows.size(); h-- > 0;) {
    if (!out.empty()) out += '\n';
    out.append(h, ' ');
    for (std::size_t i = 0; i < rows[h].size(); ++i) {
      if (i) out += ' ';
      out += cells[static_cast<std::size_t>(rows[h][i])];
    }
  }
  return out;
}

inline std::string sign_triangle(const RootSystem& rs, const SignType& st) {
  std::vector<std::string> cells;
  for (int8_t v : st.entries) cells.push_back(v < 0 ? "-" : (v > 0 ? "+" : "0"));
  return render_triangle(rs, cells);
}

inline std::string k_triangle(const RootSystem& rs, const KVector& k) {
  std::vector<std::string> cells;
  for (long long v : k) cells.push_back(std::to_string(v));
  return render_triangle(rs, cells);
}

/// Inverse of render_triangle: returns the tokens in canonical root order.
/// Blank lines are ignored; rows must have the right widths.
inline std::vector<std::string> parse_triangle(const RootSystem& rs, const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  std::vector<std::vector<int>> layout = height_rows(rs);
  if (rows.size() != layout.size())
    throw FormatError("triangle has " + std::to_string(rows.size()) + " rows, expected " +
                      std::to_string(layout.size()));
  std::vector<std::string> cells(static_cast<std::size_t>(rs.num_positive()));
  for (std::size_t h = 0; h < layout.size(); ++h) {
    const std::vector<std::string>& row = rows[layout.size() - 1 - h];
    if (row.size() != layout[h].size())
      throw FormatError("triangle row for height " + std::to_string(h + 1) + " has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(layout[h].size()));
    for (std::size_t i = 0; i < row.size(); ++i)
      cells[static_cast<std::size_t>(layout[h][i])] = row[i];
  }
  return cells;
}

inline SignType parse_sign_triangle(const RootSystem& rs, const std::string& text) {
  std::string flat;
  for (const std::string& c : parse_triangle(rs, text)) {
    if (c.size() != 1) throw FormatError("invalid sign cell '" + c + "'");
    flat += c;
  }
  return parse_sign_type(rs, flat);
}

inline KVector parse_k_triangle(const RootSystem& rs, const std::string& text) {
  KVector k;
  for (const std::string& c : parse_triangle(rs, text)) {
    try {
      k.push_back(std::stoll(c));
    } catch (const std::exception&) {
      throw FormatError("invalid k cell '" + c + "'");
    }
  }
  return k;
}

}  // namespace shilab
