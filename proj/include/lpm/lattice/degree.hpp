#pragma once

#include <string>
#include <vector>

#include "lpm/exact/number.hpp"

namespace lpm {

/// Degree label d in {1..9, 8'}; 8' is the second degree-8 type.
struct Degree {
  int d = 1;
  bool prime = false;

  static Degree parse(const std::string& text) {
    std::string s = text;
    bool p = false;
    for (const std::string& suffix : {std::string("'"), std::string("p"), std::string("′")})
      if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
        s.resize(s.size() - suffix.size());
        p = true;
        break;
      }
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(s, &used);
      if (used != s.size()) v = 0;
    } catch (...) {
      v = 0;
    }
    if (v < 1 || v > 9 || (p && v != 8)) throw AlgebraError("invalid degree " + text + " (expected 1..9 or 8')");
    return Degree{v, p};
  }

  /// d with 8' counted as 8.
  int value() const { return d; }
  std::string str() const { return std::to_string(d) + (prime ? "'" : ""); }

  friend bool operator==(const Degree& a, const Degree& b) { return a.d == b.d && a.prime == b.prime; }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
};

/// 1, 2, ..., 8, 8', 9.
inline std::vector<Degree> all_degrees() {
  std::vector<Degree> out;
  for (int d = 1; d <= 9; ++d) {
    out.push_back({d, false});
    if (d == 8) out.push_back({8, true});
  }
  return out;
}

}  // namespace lpm
