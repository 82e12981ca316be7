#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/fibration/fibration.hpp"

namespace lpm {

/// Closure of a pencil family's surface in P^4[a:b:c:d:e]: both relations
/// homogenized in e and evaluated at the parameters.
struct ProjectiveSurface {
  MultiPoly G1, G2;  // over vars()

  static const std::vector<std::string>& vars() {
    static const std::vector<std::string> v{"a", "b", "c", "d", "e"};
    return v;
  }
};

inline ProjectiveSurface projective_surface(const PencilFamily& f, const ParamValues& pv) {
  check_parameters(f, pv);
  auto close = [&](const MultiPoly& g) {
    auto vars = f.vars();
    vars.push_back("e");
    return detail::homogenize(g, PencilFamily::coords(), "e").with_vars(vars).evaluate(pv).with_vars(
        ProjectiveSurface::vars());
  };
  return {close(f.g1), close(f.g2)};
}

/// A rational singular point with the local quadratic data of the surface there.
struct SurfaceSingularPoint {
  std::vector<Rat> point;    // homogeneous, first nonzero coordinate 1
  std::size_t hessian_rank;  // of the quadratic part on the tangent 3-space
  std::string type;          // A1, A>=2, or "other"
};

struct SurfaceSingularities {
  std::vector<SurfaceSingularPoint> points;
  long unresolved = 0;  // candidate coordinate values with no rational root; their points are not listed
};

namespace detail {

/// Renames `from` to `to` and moves it to the last slot of the variable list.
inline MultiPoly rename_last(const MultiPoly& p, const std::string& from, const std::string& to,
                             const std::vector<std::string>& rest) {
  auto vs = rest;
  vs.push_back(from);
  auto ws = rest;
  ws.push_back(to);
  MultiPoly q = p.with_vars(vs);
  std::vector<MultiPoly::Term> terms(q.terms().begin(), q.terms().end());
  return MultiPoly::from_terms(ws, std::move(terms));
}

/// Rational solutions of a zero-dimensional system, by projecting to the last
/// variable, splitting off rational roots and recursing. Counts the
/// irreducible non-linear factors it cannot descend into.
inline void rational_solutions(std::vector<MultiPoly> sys, std::vector<std::string> vars,
                               std::map<std::string, Rat> at, std::vector<std::map<std::string, Rat>>& out,
                               long& unresolved) {
  sys = clean(sys);
  for (const auto& p : sys)
    if (p.is_constant()) return;
  if (vars.empty()) {
    out.push_back(at);
    return;
  }
  if (sys.empty()) throw AlgebraError("singular locus is not zero-dimensional");
  const std::string last = vars.back();
  vars.pop_back();
  std::vector<MultiPoly> renamed;
  for (const auto& p : sys) renamed.push_back(rename_last(p, last, "t", vars));
  UPoly cand;
  if (vars.empty()) {
    for (const auto& p : renamed) cand = UPoly::gcd(cand, UPoly::from_multi(p.with_vars({"t"}), "t"));
    if (cand.degree() < 0) throw AlgebraError("singular locus is not zero-dimensional");
  } else {
    std::vector<std::string> order(vars.rbegin(), vars.rend());
    try {
      cand = eliminate(renamed, order).candidates;
    } catch (const AlgebraError&) {
      throw AlgebraError("singular locus is not zero-dimensional");
    }
  }
  if (cand.degree() < 1) return;
  UPoly rest = cand.squarefree_part().monic();
  for (const auto& r : cand.rational_roots()) {
    rest = UPoly::exact_div(rest, UPoly(std::vector<Rat>{-r, 1}));
    std::vector<MultiPoly> sub;
    for (const auto& p : sys) sub.push_back(p.evaluate(last, r).with_vars(vars.empty() ? std::vector<std::string>{} : vars));
    auto next = at;
    next[last] = r;
    rational_solutions(sub, vars, next, out, unresolved);
  }
  if (rest.degree() > 0) ++unresolved;
}

inline IntVec integer_scaled(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, Int(x.get_den()));
  IntVec out(v.size(), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Int(v[i] * l);
  return out;
}

/// Rank of the quadratic part of the surface at a singular point in the chart
/// coordinate k = 1; negative when both gradients vanish (not a hypersurface point).
inline long local_hessian_rank(const ProjectiveSurface& s, std::size_t k, const std::map<std::string, Rat>& at) {
  const auto& all = ProjectiveSurface::vars();
  std::vector<std::string> loc;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i != k) loc.push_back(all[i]);
  auto chart = [&](const MultiPoly& g) { return g.evaluate(all[k], Rat(1)).with_vars(loc); };
  MultiPoly g = chart(s.G1), h = chart(s.G2);
  auto grad = [&](const MultiPoly& p) {
    std::vector<Rat> v;
    for (const auto& x : loc) {
      MultiPoly d = p.derivative(x).evaluate(at);
      v.push_back(d.is_zero() ? Rat(0) : d.constant_value());
    }
    return v;
  };
  auto zero = [](const std::vector<Rat>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  };
  auto gg = grad(g), gh = grad(h);
  if (zero(gg) && zero(gh)) return -1;
  if (zero(gg)) {
    std::swap(g, h);
    std::swap(gg, gh);
  }
  // grad h = mu grad g at a singular point
  Rat mu = 0;
  for (std::size_t i = 0; i < gg.size(); ++i)
    if (gg[i] != 0) {
      mu = gh[i] / gg[i];
      break;
    }
  MultiPoly lag = h - g * mu;
  IntMatrix kern = integer_kernel(rows_to_matrix({integer_scaled(gg)}, loc.size()));
  const std::size_t n = loc.size();
  RatMatrix hess(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly d = lag.derivative(loc[i]).derivative(loc[j]).evaluate(at);
      hess(i, j) = d.is_zero() ? Rat(0) : d.constant_value();
    }
  RatMatrix k_t = to_rational(kern);
  RatMatrix restricted = k_t * hess * k_t.transpose();
  return static_cast<long>(rank(restricted));
}

}  // namespace detail

/// Rational singular points of the projective closure, chart by chart: in
/// chart k the coordinates before k vanish and coordinate k is 1. The
/// singular locus is cut out by both equations and the 2x2 minors of the
/// Jacobian in all five homogeneous coordinates.
inline SurfaceSingularities surface_singular_points(const PencilFamily& f, const ParamValues& pv) {
  ProjectiveSurface s = projective_surface(f, pv);
  const auto& all = ProjectiveSurface::vars();
  std::vector<MultiPoly> eqs{s.G1, s.G2};
  for (const auto& m : detail::jacobian_minors(s.G1, s.G2, all))
    if (!m.is_zero()) eqs.push_back(m);
  SurfaceSingularities out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::map<std::string, Rat> fixed;
    for (std::size_t i = 0; i < k; ++i) fixed[all[i]] = 0;
    fixed[all[k]] = 1;
    std::vector<std::string> free(all.begin() + static_cast<long>(k) + 1, all.end());
    std::vector<MultiPoly> sys;
    for (const auto& e : eqs) sys.push_back(e.evaluate(fixed).with_vars(free));
    std::vector<std::map<std::string, Rat>> sols;
    detail::rational_solutions(sys, free, {}, sols, out.unresolved);
    for (auto sol : sols) {
      for (const auto& [v, x] : fixed) sol[v] = x;
      SurfaceSingularPoint p{{}, 0, "other"};
      for (const auto& v : all) p.point.push_back(sol.at(v));
      std::map<std::string, Rat> local;
      for (const auto& v : all)
        if (v != all[k]) local[v] = sol.at(v);
      long r = detail::local_hessian_rank(s, k, local);
      p.hessian_rank = r < 0 ? 0 : static_cast<std::size_t>(r);
      if (r == 3) p.type = "A1";
      else if (r == 2) p.type = "A>=2";
      out.points.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace lpm
