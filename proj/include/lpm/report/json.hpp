#pragma once

#include <string>
#include <vector>

#include "lpm/delpezzo/delpezzo.hpp"
#include "lpm/fibration/faces.hpp"
#include "lpm/fibration/fibration.hpp"
#include "lpm/fibration/surface.hpp"
#include "lpm/mirror/mirror.hpp"
#include "lpm/mirror/tables.hpp"
#include "lpm/report/io.hpp"
#include "lpm/roots/roots.hpp"
#include "lpm/theta/theta.hpp"
#include "lpm/verify/verify.hpp"

namespace lpm {

// Integers that fit a machine word are emitted as numbers, larger ones as strings.
inline Json to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json rat_json(const Rat& r) { return Json(r.get_str()); }

inline Json params_json(const ParamValues& pv) {
  Json o = Json::object();
  for (const auto& [k, v] : pv) o[k] = rat_json(v);
  return o;
}

inline Json vectors_json(const IntegralLattice& l, const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(l.format(v));
  return a;
}

inline Json lattice_json(const IntegralLattice& l) {
  return Json{{"name", l.name()}, {"rank", l.rank()}, {"labels", l.labels()}, {"gram", to_json(l.gram())}};
}

inline Json sublattice_json(const Sublattice& s) {
  Json j{{"rank", s.rank()}, {"root_type", sublattice_root_type(s)}, {"basis", s.formatted()}};
  j["gram"] = to_json(s.gram());
  return j;
}

// ---- lattices and roots ------------------------------------------------------------

inline Json to_json(const std::vector<TableRow>& rows) {
  Json a = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.ok();
    a.push_back(Json{{"degree", r.degree.str()},
                     {"f_perp", Json{{"table", r.f_label}, {"gram", to_json(r.f_gram)}, {"matches", r.f_matches}}},
                     {"F_perp", Json{{"table", r.F_label},
                                     {"type", r.F_type},
                                     {"gram", to_json(r.F_gram)},
                                     {"rank_ok", r.F_rank_ok},
                                     {"radical_is_f0", r.radical_is_f0},
                                     {"matches", r.F_matches},
                                     {"quotient_matches_f_perp", r.quotient_matches}}}});
  }
  return Json{{"report", "tables"}, {"all_match", all}, {"rows", a}};
}

inline Json to_json(const RootSystemReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(Json{{"label", c.label}, {"simple_root_indices", c.indices}});
  return Json{{"report", "roots"},
              {"lattice", lattice_json(r.lattice)},
              {"root_count", r.roots.size()},
              {"positive_count", r.positive.size()},
              {"type", r.type()},
              {"components", comps},
              {"simple_roots", vectors_json(r.lattice, r.simple)},
              {"simple_gram", to_json(simple_gram(r.lattice, r.simple))}};
}

// ---- del Pezzo cones -----------------------------------------------------------------

inline Json cone_json(const Polarization& pol, const std::string& spec) {
  const auto& lat = *pol.pair.picard;
  ConeDescription eff = effective_cone(pol);
  ConeDescription nef = dual_cone(eff);
  Json faces = Json::array();
  for (const auto& f : nef_faces_through_anticanonical(pol))
    faces.push_back(Json{{"simple_root", lat.format(f.simple_root)}, {"rays", vectors_json(lat, f.rays)}});
  return Json{{"report", "cone"},
              {"degree", pol.pair.degree.str()},
              {"polarization", spec},
              {"picard", lattice_json(lat)},
              {"anticanonical", lat.format(pol.pair.anticanonical)},
              {"polarizing_lattice", sublattice_json(pol.sublattice)},
              {"simple_roots", vectors_json(lat, pol.simple_roots)},
              {"effective_cone", vectors_json(lat, eff.rays)},
              {"nef_cone", vectors_json(lat, nef.rays)},
              {"nef_lineality", vectors_json(lat, nef.lineality)},
              {"nef_faces_through_anticanonical", faces}};
}

// ---- mirror and strata ------------------------------------------------------------

inline Json to_json(const MirrorPair& m) {
  const auto& big = *m.embedding.target.ambient();
  return Json{{"report", "mirror"},
              {"degree", m.degree.str()},
              {"L", sublattice_json(m.l)},
              {"L_check", sublattice_json(m.lcheck)},
              {"L_check_in_F_perp", vectors_json(big, m.lcheck_image)},
              {"embedding", to_json(m.embedding.map)},
              {"period_domain", "Hom(F_d^perp / <R_L, f_0>, G_m)"},
              {"period_dimension", period_dimension(m.degree, m.l)}};
}

inline Json to_json(const StrataPoset& s) {
  const auto& lat = *s.base.ambient();
  Json nodes = Json::array();
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const auto& n = s.nodes[i];
    nodes.push_back(Json{{"index", i},
                         {"root_type", n.root_type},
                         {"root_rank", n.root_rank},
                         {"dimension", n.dimension},
                         {"members", n.members},
                         {"basis", n.lattice.formatted()},
                         {"predicted_fibers", n.fibers.fibers},
                         {"euler", n.fibers.euler},
                         {"within_budget", n.fibers.within_budget}});
  }
  Json covers = Json::array();
  for (const auto& [a, b] : s.covers) covers.push_back(Json::array({a, b}));
  return Json{{"report", "strata"},
              {"degree", s.degree.str()},
              {"L", sublattice_json(s.base)},
              {"simple_roots", vectors_json(lat, s.simple_roots)},
              {"orbits_approximate", s.orbits_approximate},
              {"nodes", nodes},
              {"covers", covers}};
}

inline Json to_json(const OrbitPartition& o, const IntegralLattice& lat) {
  Json blocks = Json::array();
  for (const auto& b : o.blocks) {
    Json blk = Json::array();
    for (auto i : b) blk.push_back(lat.format(o.simple_roots[i]));
    blocks.push_back(blk);
  }
  return Json{{"blocks", blocks}, {"approximate", o.approximate}};
}

inline Json to_json(const FaceSubfamilyReport& r) {
  Json loci = Json::array();
  for (const auto& l : r.loci) {
    Json eqs = Json::array();
    for (const auto& e : l.equations) eqs.push_back(e.str());
    loci.push_back(Json{{"name", l.name}, {"equations", eqs}, {"fibers", l.fibers}, {"source", l.source}});
  }
  Json matches = Json::array();
  for (const auto& m : r.matches) {
    Json faces = Json::array();
    for (const auto& f : m.faces)
      faces.push_back(Json{{"simple_root_mask", f.mask}, {"rank", f.rank}, {"contains_anticanonical", f.contains_anticanonical}});
    Json names = Json::array();
    for (auto li : m.loci) names.push_back(r.loci[li].name);
    matches.push_back(Json{{"node", m.node},
                           {"root_type", m.root_type},
                           {"faces", faces},
                           {"admissible_variables", m.variables},
                           {"predicted_fibers", m.predicted},
                           {"loci", names}});
  }
  Json unmatched_loci = Json::array(), unmatched_nodes = Json::array();
  for (auto i : r.unmatched_loci) unmatched_loci.push_back(r.loci[i].name);
  for (auto i : r.unmatched_nodes) unmatched_nodes.push_back(i);
  return Json{{"report", "faces"},
              {"degree", r.degree.str()},
              {"mode", r.mode},
              {"orbit_variables", r.orbit_variables},
              {"loci", loci},
              {"matches", matches},
              {"unmatched_loci", unmatched_loci},
              {"unmatched_nodes", unmatched_nodes},
              {"one_to_one", r.one_to_one()}};
}

// ---- theta --------------------------------------------------------------------------

inline Json to_json(const ThetaPresentation& p, const CycleConfig& c) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(r.str());
  return Json{{"report", "theta"},
              {"config", c.name},
              {"components", vectors_json(*c.picard, c.components)},
              {"generators", p.generators},
              {"monoid_vars", p.monoid_vars},
              {"relations", rels}};
}

inline Json missing_counts_json(const CycleConfig& c, const CountTable& counts) {
  Json a = Json::array();
  for (const auto& [key, t] : missing_counts(c, counts))
    a.push_back(Json{{"p", to_json(key.p)}, {"q", to_json(key.q)}, {"m", to_json(key.m)}, {"r", to_json(key.r)},
                     {"description", describe_count_key(c, key)}});
  return a;
}

// ---- fibrations ---------------------------------------------------------------------

inline Json to_json(const LocusReport& l) {
  return Json{{"params", l.params},
              {"discriminant", l.discriminant.str()},
              {"monomial_factors", l.monomial_vars},
              {"locus", l.locus.str()}};
}

inline Json to_json(const FiberReport& r) {
  Json fibers = Json::array();
  for (const auto& e : r.fibers)
    fibers.push_back(Json{{"location", e.location.to_multi("t").str()},
                          {"count", e.location.degree()},
                          {"multiplicity", e.multiplicity},
                          {"type", e.type},
                          {"nodes", e.nodes},
                          {"base_point_nodes", e.base_nodes},
                          {"cusps", e.cusps},
                          {"degenerate_points", e.degenerate}});
  return Json{{"family", r.family},
              {"params", params_json(r.params)},
              {"discriminant", r.delta.str()},
              {"fibers", fibers},
              {"euler_finite", r.euler},
              {"euler_budget", r.budget},
              {"all_classified", r.all_classified},
              {"euler_ok", r.euler_ok()},
              {"consistent", r.consistent}};
}

inline Json to_json(const SurfaceSingularities& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) {
    Json c = Json::array();
    for (const auto& x : p.point) c.push_back(rat_json(x));
    pts.push_back(Json{{"point", c}, {"hessian_rank", p.hessian_rank}, {"type", p.type}});
  }
  return Json{{"coordinates", ProjectiveSurface::vars()}, {"points", pts}, {"unresolved_candidates", s.unresolved}};
}

// ---- verification -------------------------------------------------------------------

inline Json to_json(const VerificationSuite& s, bool timings = false) {
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json j{{"name", c.name}, {"status", c.status}, {"stretch", c.stretch}, {"details", c.details}};
    if (c.budget > 0) j["budget_seconds"] = c.budget;
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(j);
  }
  return Json{{"report", "verify"}, {"ok", s.ok()}, {"checks", checks}};
}

}  // namespace lpm
