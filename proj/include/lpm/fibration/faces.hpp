#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lpm/delpezzo/delpezzo.hpp"
#include "lpm/exact/poly.hpp"
#include "lpm/fibration/fibration.hpp"
#include "lpm/mirror/mirror.hpp"

namespace lpm {

/// A parameter locus of a mirror family with the finite fibers of its members.
struct SubfamilyLocus {
  std::string name;
  std::vector<MultiPoly> equations;  // empty for the whole family
  std::vector<std::string> fibers;   // finite singular fibers of a member
  std::string source;                // "computed" or "input-data"

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& e : equations)
      for (const auto& v : e.used_vars()) out.insert(v);
    return out;
  }
};

/// Intersection of the nef facets of a set of simple roots.
struct NefFaceIntersection {
  std::uint32_t mask;  // over the polarization's simple roots
  std::vector<IntVec> rays;
  std::size_t rank = 0;
  bool contains_anticanonical = false;
};

/// One strata class with the nef faces it corresponds to and the loci realising it.
struct FaceMatch {
  std::size_t node;
  std::string root_type;
  std::vector<NefFaceIntersection> faces;
  std::vector<std::string> variables;  // union of admissible variables over the faces
  std::vector<std::string> predicted;  // finite fibers predicted by the stratum
  std::vector<std::size_t> loci;       // indices of matched loci
};

struct FaceSubfamilyReport {
  Degree degree;
  std::string mode;
  std::map<std::string, IntVec> root_variables;
  std::vector<std::vector<std::string>> orbit_variables;  // admissible orbits as variable sets
  std::vector<SubfamilyLocus> loci;
  std::vector<FaceMatch> matches;
  std::vector<std::size_t> unmatched_loci;
  std::vector<std::size_t> unmatched_nodes;

  /// Every node has exactly one locus and every locus exactly one node.
  bool one_to_one() const {
    if (!unmatched_loci.empty() || !unmatched_nodes.empty()) return false;
    std::vector<int> used(loci.size(), 0);
    for (const auto& m : matches) {
      if (m.loci.size() != 1) return false;
      ++used[m.loci[0]];
    }
    return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
  }
};

/// Pairs strata classes of f_d^perp with nef faces of the polarization `pol`
/// and with parameter loci. A locus matches a class when its fibers equal the
/// predicted ones and its variables lie in the admissible orbits of some face
/// of the class. `root_variables` names the monoid variable of each simple root.
inline FaceSubfamilyReport face_subfamily_report(const Polarization& pol, const StrataPoset& strata,
                                                 const std::map<std::string, IntVec>& root_variables,
                                                 const std::vector<SubfamilyLocus>& loci, const std::string& mode) {
  FaceSubfamilyReport rep{pol.pair.degree, mode, root_variables, {}, loci, {}, {}, {}};
  const auto& lat = *pol.pair.picard;
  const auto& simple = pol.simple_roots;
  const std::size_t n = simple.size();
  std::vector<std::string> var_of(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [v, r] : root_variables)
      if (r == simple[i] || r == -simple[i]) var_of[i] = v;  // a root and its negative name the same face
  auto orbits = admissible_orbits(pol);
  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0; b < orbits.blocks.size(); ++b) {
    std::vector<std::string> vs;
    for (auto i : orbits.blocks[b]) {
      block_of[i] = b;
      if (!var_of[i].empty()) vs.push_back(var_of[i]);
    }
    rep.orbit_variables.push_back(vs);
  }
  // strata simple roots -> polarization simple roots
  std::vector<int> to_pol(strata.simple_roots.size(), -1);
  for (std::size_t j = 0; j < strata.simple_roots.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (strata.simple_roots[j] == simple[i]) to_pol[j] = static_cast<int>(i);

  ConeDescription nef = dual_cone(effective_cone(pol));
  auto face = [&](std::uint32_t mask) {
    NefFaceIntersection f{mask, {}, 0, false};
    for (const auto& r : nef.rays) {
      bool on = true;
      for (std::size_t i = 0; i < n && on; ++i)
        if (mask >> i & 1U) on = lat.pair(r, simple[i]) == 0;
      if (on) f.rays.push_back(r);
    }
    f.rank = f.rays.empty() ? 0 : rank(rows_to_matrix(f.rays, lat.rank()));
    f.contains_anticanonical = !f.rays.empty() && in_cone(f.rays, pol.pair.anticanonical);
    return f;
  };

  std::vector<bool> locus_used(loci.size(), false);
  for (std::size_t k = 0; k < strata.nodes.size(); ++k) {
    const auto& node = strata.nodes[k];
    FaceMatch m{k, node.root_type, {}, {}, node.fibers.fibers, {}};
    std::vector<std::set<std::string>> allowed;
    std::set<std::string> all_vars;
    for (auto smask : node.members) {
      std::uint32_t pmask = 0;
      bool inside = true;
      for (std::size_t j = 0; j < to_pol.size(); ++j)
        if (smask >> j & 1U) {
          if (to_pol[j] < 0) inside = false;
          else pmask |= 1U << to_pol[j];
        }
      if (!inside) continue;
      m.faces.push_back(face(pmask));
      std::set<std::string> vs;
      for (std::size_t i = 0; i < n; ++i)
        if (pmask >> i & 1U)
          for (const auto& v : rep.orbit_variables[block_of[i]]) vs.insert(v);
      all_vars.insert(vs.begin(), vs.end());
      allowed.push_back(std::move(vs));
    }
    m.variables.assign(all_vars.begin(), all_vars.end());
    auto predicted = m.predicted;
    std::sort(predicted.begin(), predicted.end());
    for (std::size_t li = 0; li < loci.size(); ++li) {
      auto fibers = loci[li].fibers;
      std::sort(fibers.begin(), fibers.end());
      if (fibers != predicted) continue;
      auto lv = loci[li].variables();
      bool fits = std::any_of(allowed.begin(), allowed.end(), [&](const std::set<std::string>& a) {
        return std::includes(a.begin(), a.end(), lv.begin(), lv.end());
      });
      if (!fits) continue;
      m.loci.push_back(li);
      locus_used[li] = true;
    }
    if (m.loci.empty()) rep.unmatched_nodes.push_back(k);
    rep.matches.push_back(std::move(m));
  }
  for (std::size_t li = 0; li < loci.size(); ++li)
    if (!locus_used[li]) rep.unmatched_loci.push_back(li);
  return rep;
}

/// Degree-6 subfamily loci in the monoid variables x, y, z of the full A2+A1
/// polarization, with the finite fibers of their members. Taken as input data:
/// the degree-6 family itself is not derived here.
inline std::vector<SubfamilyLocus> dp6_input_loci() {
  const std::vector<std::string> vs{"x", "y", "z"};
  auto P = [&](const std::string& s) { return parse_poly(s, vs); };
  const std::string q = "27*y^2*z^2 - 18*y*z + 4*y + 4*z - 1";
  return {{"generic", {}, {"I1", "I1", "I1", "I1", "I1", "I1"}, "input-data"},
          {"Y1", {P("4*x - 1")}, {"I2", "I1", "I1", "I1", "I1"}, "input-data"},
          {"Y2", {P(q)}, {"I2", "I1", "I1", "I1", "I1"}, "input-data"},
          {"Y12", {P("4*x - 1"), P(q)}, {"I2", "I2", "I1", "I1"}, "input-data"},
          {"Y22", {P("3*y - 1"), P("3*z - 1")}, {"I3", "I1", "I1", "I1"}, "input-data"},
          {"Y122", {P("4*x - 1"), P("3*y - 1"), P("3*z - 1")}, {"I3", "I2", "I1"}, "input-data"}};
}

/// Monoid variables of the degree-6 loci as classes in I(1,3): x = alpha_1,
/// y = alpha_2, z = alpha_3.
inline std::map<std::string, IntVec> dp6_root_variables() {
  return {{"x", {1, -1, -1, -1}}, {"y", {0, -1, 1, 0}}, {"z", {0, 0, -1, 1}}};
}

/// Loci computed from a pencil family: the generic member at `generic` and one
/// locus per non-monomial collision factor, each classified at a rational witness.
inline std::vector<SubfamilyLocus> computed_loci(const PencilFamily& f, const MultiPoly& delta, const ParamValues& generic) {
  auto fibers_at = [&](const ParamValues& pv) {
    std::vector<std::string> out;
    for (const auto& e : classify_fibers(f, delta, pv).fibers)
      for (long k = 0; k < e.location.degree(); ++k) out.push_back(e.type);
    return out;
  };
  std::vector<SubfamilyLocus> out{{"generic", {}, fibers_at(generic), "computed"}};
  LocusReport loc = collision_locus(f, delta);
  if (!loc.locus.is_constant())
    out.push_back({"collision", {loc.locus}, fibers_at(witness_on_locus(f, loc.locus)), "computed"});
  return out;
}

}  // namespace lpm
