#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "lpm/report/io.hpp"

namespace lpm {

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string md_scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Arrays of scalars and nested arrays (matrices) print on one line.
inline bool is_inline(const Json& j) {
  if (is_scalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object()) return false;
  return true;
}

inline std::string md_inline(const Json& j) {
  if (is_scalar(j)) return md_scalar(j);
  if (j.empty()) return "(none)";
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_string(); })) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ", ") + x.get<std::string>();
    return s;
  }
  return "`" + j.dump() + "`";
}

// Objects whose values are all inline become table rows.
inline bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (!is_inline(v)) return false;
  return true;
}

inline std::string md_cell(const Json& j) {
  std::string s = md_inline(j);
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

inline void md_table(std::ostringstream& os, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  os << "|";
  for (const auto& c : cols) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : cols) os << " " << (r.contains(c) ? md_cell(r.at(c)) : "") << " |";
    os << "\n";
  }
  os << "\n";
}

inline void md_object(std::ostringstream& os, const Json& j, int level);

inline void md_value(std::ostringstream& os, const std::string& key, const Json& v, int level) {
  if (is_inline(v)) {
    os << "- **" << key << "**: " << md_inline(v) << "\n";
    return;
  }
  os << "\n" << std::string(static_cast<std::size_t>(std::min(level, 6)), '#') << " " << key << "\n\n";
  if (v.is_object()) {
    md_object(os, v, level + 1);
    return;
  }
  bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return is_flat_object(x); });
  if (flat) {
    md_table(os, v);
    return;
  }
  std::size_t i = 0;
  for (const auto& x : v) md_value(os, key + " " + std::to_string(i++), x, level + 1);
}

inline void md_object(std::ostringstream& os, const Json& j, int level) {
  for (const auto& [k, v] : j.items())
    if (is_inline(v)) md_value(os, k, v, level);
  for (const auto& [k, v] : j.items())
    if (!is_inline(v)) md_value(os, k, v, level);
  os << "\n";
}

}  // namespace detail

/// Markdown view of a report object: scalar fields as a bullet list, lists of
/// flat records as tables, nested records as subsections. Field order follows
/// the JSON object, so both formats come from one source.
inline std::string render_markdown(const Json& j) {
  std::ostringstream os;
  std::string title = j.is_object() && j.contains("report") ? j.at("report").get<std::string>() : "report";
  os << "# " << title << "\n\n";
  if (j.is_object()) detail::md_object(os, j, 2);
  else os << detail::md_inline(j) << "\n";
  std::string s = os.str();
  std::string out;
  for (char c : s)
    if (!(c == '\n' && out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n')) out += c;
  while (out.size() > 1 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

}  // namespace lpm
