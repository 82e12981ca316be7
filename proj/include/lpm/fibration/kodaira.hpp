#pragma once

#include <string>
#include <vector>

#include "lpm/exact/number.hpp"
#include "lpm/roots/roots.hpp"

namespace lpm {

inline long kodaira_euler(const std::string& type) {
  if (type == "II") return 2;
  if (type == "III") return 3;
  if (type == "IV") return 4;
  if (type == "II*") return 10;
  if (type == "III*") return 9;
  if (type == "IV*") return 8;
  if (type.size() >= 2 && type[0] == 'I') {
    bool star = type.back() == '*';
    long n = std::stol(type.substr(1, type.size() - 1 - (star ? 1 : 0)));
    return star ? n + 6 : n;
  }
  throw AlgebraError("unknown Kodaira type " + type);
}

/// Fiber of a root-type component: A_n -> I_{n+1}, D_n -> I*_{n-4}, E6/7/8 -> IV*/III*/II*.
inline std::string fiber_for_component(const std::string& label) {
  auto [kind, n] = detail::parse_component_label(label);
  if (kind == 'A') return "I" + std::to_string(n + 1);
  if (kind == 'D') return "I" + std::to_string(n - 4) + "*";
  if (n == 6) return "IV*";
  if (n == 7) return "III*";
  return "II*";
}

/// Rank carried by a fiber configuration: n - 1 for I_n, Euler - 2 otherwise.
inline long fiber_rank(const std::vector<std::string>& fibers) {
  long r = 0;
  for (const auto& f : fibers) {
    bool multiplicative = f[0] == 'I' && f.back() != '*' && f != "II" && f != "III" && f != "IV";
    r += multiplicative ? std::stol(f.substr(1)) - 1 : kodaira_euler(f) - 2;
  }
  return r;
}

}  // namespace lpm
