#pragma once

#include <regex>
#include <string>
#include <vector>

#include "lpm/lattice/degree.hpp"
#include "lpm/lattice/lattice.hpp"
#include "lpm/roots/roots.hpp"

namespace lpm {

/// Lambda_d: I(1,9-d), or II(1,1) for 8'.
inline IntegralLattice lambda_lattice(const Degree& d) {
  IntegralLattice l = d.prime ? hyperbolic_plane() : odd_unimodular(static_cast<std::size_t>(9 - d.d));
  l.set_name("Lambda(" + d.str() + ")");
  return l;
}

/// f_d = 3l - sum e_i in I(1,9-d); f_8' = 2a + 2b.
inline IntVec anticanonical_class(const Degree& d) {
  if (d.prime) return IntVec{2, 2};
  IntVec v(static_cast<std::size_t>(10 - d.d), Int(-1));
  v[0] = 3;
  return v;
}

/// f_d^perp inside Lambda_d, as a saturated sublattice.
inline Sublattice anticanonical_complement(const Degree& d) {
  auto amb = share(lambda_lattice(d));
  return orthogonal_complement(amb, Sublattice(amb, {anticanonical_class(d)}));
}

/// F_d = <delta_1..delta_d> inside I(1,9).
inline Sublattice marking_span(const Degree& d) {
  auto amb = share(odd_unimodular(9));
  return span(amb, marking_deltas(d).deltas);
}

/// F_d^perp inside I(1,9).
inline Sublattice marking_complement(const Degree& d) {
  Sublattice f = marking_span(d);
  return orthogonal_complement(f.ambient(), f);
}

inline IntegralLattice f_perp_lattice(const Degree& d) {
  return anticanonical_complement(d).as_lattice("f_perp(" + d.str() + ")");
}

inline IntegralLattice F_perp_lattice(const Degree& d) {
  return marking_complement(d).as_lattice("F_perp(" + d.str() + ")");
}

/// Builds a named lattice: I(1,n), II(1,1), ADE labels such as E8 or A2+A1,
/// Lambda(d), F_perp(d) and f_perp(d) for d in 1..9 or 8'.
inline IntegralLattice standard_lattice(const std::string& name) {
  std::smatch m;
  static const std::regex odd(R"(I\(1,\s*(\d+)\))");
  static const std::regex hyp(R"(II\(1,\s*1\))");
  static const std::regex param(R"((Lambda|F_perp|f_perp)\((\d'?p?)\))");
  static const std::regex ade(R"([ADE]\d+(\+[ADE]\d+)*)");
  if (std::regex_match(name, m, odd)) return odd_unimodular(std::stoul(m[1]));
  if (std::regex_match(name, hyp)) return hyperbolic_plane();
  if (std::regex_match(name, m, param)) {
    Degree d = Degree::parse(m[2]);
    if (m[1] == "Lambda") return lambda_lattice(d);
    if (m[1] == "F_perp") return F_perp_lattice(d);
    return f_perp_lattice(d);
  }
  if (std::regex_match(name, ade)) return dynkin_lattice(name);
  throw AlgebraError("unknown lattice name " + name);
}

}  // namespace lpm
