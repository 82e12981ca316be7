#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "lpm/delpezzo/cone.hpp"
#include "lpm/lattice/degree.hpp"
#include "lpm/lattice/enumerate.hpp"
#include "lpm/lattice/lattice.hpp"
#include "lpm/lattice/standard.hpp"
#include "lpm/roots/roots.hpp"

namespace lpm {

/// Picard lattice Lambda_d with the anticanonical class f_d.
struct DelPezzoPair {
  Degree degree;
  LatticePtr picard;
  IntVec anticanonical;

  /// f_d^2: 8 for 8', otherwise d.
  Int anticanonical_degree() const { return picard->norm(anticanonical); }
};

inline DelPezzoPair del_pezzo_pair(const Degree& d) {
  DelPezzoPair p{d, share(lambda_lattice(d)), anticanonical_class(d)};
  if (p.anticanonical_degree() != (d.prime ? 8 : d.d)) throw AlgebraError("anticanonical class has the wrong degree");
  return p;
}

/// Classes v with v.f_d = k and v^2 = k - 2 (smooth rational curves of
/// anticanonical degree k). Enumerated on the positive definite form
/// H(v) = 2 (v.f)^2 / f^2 - v^2, which is bounded by 2k^2/f^2 - k + 2.
inline std::vector<IntVec> rational_curve_classes(const DelPezzoPair& p, long k) {
  const auto& g = p.picard->gram();
  const std::size_t n = p.picard->rank();
  const Rat deg(p.anticanonical_degree());
  IntVec gf = g * p.anticanonical;
  RatMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rat(2) * Rat(gf[i] * gf[j]) / deg - Rat(g(i, j));
  Rat bound = Rat(2 * k * k) / deg - Rat(k - 2);
  std::vector<IntVec> out;
  for_each_short_vector(h, bound, [&](const IntVec& v, const Rat&) {
    if (dot(gf, v) == k && p.picard->norm(v) == k - 2) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// All E with E^2 = -1 and E.f_d = 1, sorted.
inline std::vector<IntVec> exceptional_classes(const DelPezzoPair& p) { return rational_curve_classes(p, 1); }

/// A saturated sublattice L of f_d^perp with its roots split by the default functional.
struct Polarization {
  DelPezzoPair pair;
  Sublattice sublattice;
  std::vector<IntVec> positive_roots;
  std::vector<IntVec> simple_roots;
};

inline Polarization polarize(const DelPezzoPair& p, const std::vector<IntVec>& gens) {
  for (const auto& v : gens)
    if (p.picard->pair(v, p.anticanonical) != 0)
      throw AlgebraError("polarizing vector " + p.picard->format(v) + " is not orthogonal to f_d");
  Sublattice l = gens.empty() ? Sublattice(p.picard, {}, true) : saturation(span(p.picard, gens));
  std::vector<IntVec> roots;
  if (l.rank() > 0) {
    IntegralLattice ll = l.as_lattice();
    if (!is_negative_definite(ll.gram())) throw AlgebraError("polarizing lattice is not negative definite");
    for (const auto& c : enumerate_roots(ll)) {
      IntVec v = p.picard->zero();
      for (std::size_t i = 0; i < c.size(); ++i) v = v + c[i] * l.basis()[i];
      roots.push_back(v);
    }
    std::sort(roots.begin(), roots.end());
  }
  auto ps = positive_and_simple(*p.picard, roots, default_functional(*p.picard));
  return Polarization{p, l, std::move(ps.positive), std::move(ps.simple)};
}

/// Parses "full", "zero", "simple:i,j,..." (1-based indices into the simple
/// roots of f_d^perp) or "roots:v;w;..." (comma-separated Lambda_d coordinates).
inline Polarization parse_polarization(const DelPezzoPair& p, const std::string& spec) {
  if (spec == "zero" || spec == "0") return polarize(p, {});
  Sublattice fperp = anticanonical_complement(p.degree);
  if (spec == "full") return polarize(p, fperp.basis());
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
      if (!item.empty()) parts.push_back(item);
    return parts;
  };
  if (spec.rfind("simple:", 0) == 0) {
    auto full = polarize(p, fperp.basis());
    std::vector<IntVec> gens;
    for (const auto& idx : split(spec.substr(7), ',')) {
      long i = std::stol(idx);
      if (i < 1 || static_cast<std::size_t>(i) > full.simple_roots.size())
        throw AlgebraError("simple root index " + idx + " out of range");
      gens.push_back(full.simple_roots[static_cast<std::size_t>(i - 1)]);
    }
    return polarize(p, gens);
  }
  if (spec.rfind("roots:", 0) == 0) {
    std::vector<IntVec> gens;
    for (const auto& vec : split(spec.substr(6), ';')) {
      IntVec v;
      for (const auto& x : split(vec, ',')) v.push_back(Int(x));
      if (v.size() != p.picard->rank()) throw AlgebraError("polarizing vector has the wrong length");
      gens.push_back(v);
    }
    return polarize(p, gens);
  }
  throw AlgebraError("unknown polarization spec '" + spec + "'");
}

/// Simple roots plus the (-1)-classes meeting every positive root nonnegatively.
/// In Picard rank <= 2 the classes of anticanonical degree 2 and 3 with the
/// same filter are added, since those surfaces may carry no (-1)-curves.
inline ConeDescription effective_cone(const Polarization& pol) {
  std::vector<IntVec> cand = pol.simple_roots;
  auto meets_positive = [&](const IntVec& e) {
    for (const auto& a : pol.positive_roots)
      if (pol.pair.picard->pair(e, a) < 0) return false;
    return true;
  };
  std::vector<long> degrees{1};
  if (pol.pair.picard->rank() <= 2) degrees = {1, 2, 3};
  for (long k : degrees)
    for (const auto& e : rational_curve_classes(pol.pair, k))
      if (meets_positive(e)) cand.push_back(e);
  return ConeDescription{pol.pair.picard, extremal_rays(cand), {}};
}

struct NefFace {
  IntVec simple_root;
  std::vector<IntVec> rays;
};

/// One codimension-1 face of the nef cone per simple root: the nef rays
/// orthogonal to it. Each face is checked to have full codimension-1 rank and
/// to contain f_d.
inline std::vector<NefFace> nef_faces_through_anticanonical(const Polarization& pol) {
  ConeDescription nef = dual_cone(effective_cone(pol));
  const auto& lat = *pol.pair.picard;
  const std::size_t n = lat.rank();
  if (!in_cone(nef.rays, pol.pair.anticanonical)) throw AlgebraError("f_d is not nef");
  std::vector<NefFace> out;
  for (const auto& a : pol.simple_roots) {
    NefFace face{a, {}};
    for (const auto& r : nef.rays)
      if (lat.pair(r, a) == 0) face.rays.push_back(r);
    if (face.rays.empty() || rank(rows_to_matrix(face.rays, n)) + 1 != n)
      throw AlgebraError("hyperplane of " + lat.format(a) + " does not cut a facet of the nef cone");
    if (!in_cone(face.rays, pol.pair.anticanonical))
      throw AlgebraError("facet of " + lat.format(a) + " does not contain f_d");
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace lpm
