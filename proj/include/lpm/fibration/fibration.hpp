#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/mgcd.hpp"
#include "lpm/exact/poly.hpp"
#include "lpm/exact/quotient_ring.hpp"
#include "lpm/exact/resultant.hpp"
#include "lpm/exact/upoly.hpp"
#include "lpm/fibration/family.hpp"
#include "lpm/fibration/kodaira.hpp"

namespace lpm {

using ParamValues = std::map<std::string, Rat>;

/// Singular points of the fibers. Affine part: equations in t, a, b, c after
/// d = t - a - b - c. Boundary part: the closure in P^3[a:b:c:e] with
/// d = t e - a - b - c, whose points on e = 0 are the base points of the pencil.
struct FiberSystem {
  MultiPoly g1, g2;
  std::vector<MultiPoly> minors;  // nonzero 2x2 minors of the Jacobian in (a, b, c)
  MultiPoly q1, q2;               // homogeneous in a, b, c, e; over projective_vars()

  static const std::vector<std::string>& vars() {
    static const std::vector<std::string> v{"t", "a", "b", "c"};
    return v;
  }
  static const std::vector<std::string>& projective_vars() {
    static const std::vector<std::string> v{"t", "a", "b", "c", "e"};
    return v;
  }

  std::vector<MultiPoly> equations() const {
    std::vector<MultiPoly> eqs{g1, g2};
    eqs.insert(eqs.end(), minors.begin(), minors.end());
    return eqs;
  }
};

/// Every parameter has a value and none of the excluded polynomials vanishes.
inline void check_parameters(const PencilFamily& f, const ParamValues& pv) {
  for (const auto& p : f.params)
    if (!pv.count(p)) throw AlgebraError("missing value for parameter " + p);
  for (const auto& [k, v] : pv)
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
      throw AlgebraError("unknown parameter " + k);
  for (const auto& e : f.excluded)
    if (e.evaluate(pv).is_zero()) throw AlgebraError("parameters lie on the excluded locus " + e.str() + " = 0");
}

namespace detail {

/// Multiplies each term by the power of `e` that brings its degree in `coords` to the maximum.
inline MultiPoly homogenize(const MultiPoly& g, const std::vector<std::string>& coords, const std::string& e) {
  std::vector<std::string> vars = g.vars();
  vars.push_back(e);
  MultiPoly p = g.with_vars(vars);
  std::vector<std::size_t> idx;
  for (const auto& c : coords) idx.push_back(p.index_of(c));
  auto deg = [&](const MultiPoly::Term& t) {
    int d = 0;
    for (auto i : idx) d += t.exps[i];
    return d;
  };
  int top = 0;
  for (const auto& t : p.terms()) top = std::max(top, deg(t));
  std::vector<MultiPoly::Term> terms;
  for (auto t : p.terms()) {
    t.exps.back() = top - deg(t);
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

inline std::vector<MultiPoly> jacobian_minors(const MultiPoly& g, const MultiPoly& h, const std::vector<std::string>& vs) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      out.push_back(g.derivative(vs[i]) * h.derivative(vs[j]) - g.derivative(vs[j]) * h.derivative(vs[i]));
  return out;
}

}  // namespace detail

inline FiberSystem fiber_system(const PencilFamily& f, const ParamValues& pv) {
  check_parameters(f, pv);
  auto all = f.vars();
  all.push_back("t");
  auto pall = all;
  pall.push_back("e");
  auto var = [](const std::string& n, const std::vector<std::string>& vs) { return MultiPoly::variable(n, vs); };
  MultiPoly dsub = var("t", all) - var("a", all) - var("b", all) - var("c", all);
  MultiPoly dproj = var("t", pall) * var("e", pall) - var("a", pall) - var("b", pall) - var("c", pall);
  auto affine = [&](const MultiPoly& g) {
    return g.with_vars(all).substitute("d", dsub).evaluate(pv).with_vars(FiberSystem::vars());
  };
  auto proj = [&](const MultiPoly& g) {
    return detail::homogenize(g, PencilFamily::coords(), "e")
        .with_vars(pall)
        .substitute("d", dproj)
        .evaluate(pv)
        .with_vars(FiberSystem::projective_vars());
  };
  FiberSystem s{affine(f.g1), affine(f.g2), {}, proj(f.g1), proj(f.g2)};
  for (const auto& m : detail::jacobian_minors(s.g1, s.g2, {"a", "b", "c"}))
    if (!m.is_zero()) s.minors.push_back(m.primitive_part());
  return s;
}

/// One branch of the projection of a singular locus: polynomials vanishing on
/// each intermediate projection, and a nonzero t-polynomial vanishing on its image.
struct EliminationBranch {
  std::vector<std::vector<MultiPoly>> stages;  // stages[k]: system before eliminating order[k]
  UPoly tpoly;                                 // monic squarefree
};

struct Elimination {
  std::vector<EliminationBranch> branches;
  UPoly candidates;  // monic squarefree; lcm of the branch t-polynomials
};

namespace detail {

inline std::vector<MultiPoly> clean(const std::vector<MultiPoly>& ps) {
  std::vector<MultiPoly> out;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    MultiPoly q = p.primitive_part();
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

/// Eliminates the variables of `order` in turn, leaving t. Contents and common
/// factors split the system into branches whose zero sets cover the original,
/// so resultants never vanish identically. Every branch t-polynomial vanishes
/// on the projection of that branch.
inline void eliminate_rec(std::vector<MultiPoly> sys, const std::vector<std::string>& order, std::size_t level,
                          std::vector<std::vector<MultiPoly>> stages, std::vector<EliminationBranch>& out, int depth) {
  if (depth > 64) throw AlgebraError("elimination split too often");
  sys = clean(sys);
  for (const auto& p : sys)
    if (p.is_constant()) return;  // empty branch
  if (level == order.size()) {
    if (sys.empty()) throw AlgebraError("elimination produced identically zero (degenerate family)");
    UPoly g;
    for (const auto& p : sys) g = UPoly::gcd(g, UPoly::from_multi(p.with_vars({"t"}), "t"));
    if (g.degree() >= 1) out.push_back({std::move(stages), g.squarefree_part()});
    return;
  }
  const std::string& v = order[level];
  const auto vars = sys.empty() ? std::vector<std::string>{} : sys.front().vars();
  std::vector<MultiPoly> with, rest;
  for (const auto& p : sys) (p.degree(v) > 0 ? with : rest).push_back(p);
  auto without = [&](std::initializer_list<const MultiPoly*> drop) {
    std::vector<MultiPoly> r;
    for (const auto& p : sys) {
      bool keep = true;
      for (const auto* d : drop) keep = keep && !(p == *d);
      if (keep) r.push_back(p);
    }
    return r;
  };
  for (const auto& p : with) {
    MultiPoly cont = content_in(p, v);
    if (cont.is_constant()) continue;
    auto x = without({&p}), y = x;
    x.push_back(cont);
    y.push_back(*divide_exact(p, cont));
    eliminate_rec(x, order, level, stages, out, depth + 1);
    eliminate_rec(y, order, level, stages, out, depth + 1);
    return;
  }
  stages.push_back(sys);
  if (with.empty()) {
    eliminate_rec(sys, order, level + 1, std::move(stages), out, depth);
    return;
  }
  std::size_t piv = 0;
  for (std::size_t i = 1; i < with.size(); ++i) {
    int di = with[i].degree(v), dp = with[piv].degree(v);
    if (di < dp || (di == dp && with[i].size() < with[piv].size())) piv = i;
  }
  const MultiPoly& p = with[piv];
  for (std::size_t i = 0; i < with.size(); ++i) {
    if (i == piv) continue;
    MultiPoly g = poly_gcd(p, with[i]);
    if (g.degree(v) < 1) continue;
    stages.pop_back();
    auto x = without({&p, &with[i]}), y = x;
    x.push_back(g);
    y.push_back(*divide_exact(p, g));
    y.push_back(*divide_exact(with[i], g));
    eliminate_rec(x, order, level, stages, out, depth + 1);
    eliminate_rec(y, order, level, stages, out, depth + 1);
    return;
  }
  std::vector<MultiPoly> next = rest;
  for (std::size_t i = 0; i < with.size(); ++i)
    if (i != piv) next.push_back(resultant(p, with[i], v).with_vars(vars));
  if (next.empty()) throw AlgebraError("elimination produced identically zero (degenerate family)");
  eliminate_rec(next, order, level + 1, std::move(stages), out, depth);
}

inline Elimination eliminate(const std::vector<MultiPoly>& sys, const std::vector<std::string>& order) {
  Elimination e;
  eliminate_rec(sys, order, 0, {}, e.branches, 0);
  UPoly acc = UPoly::constant(1);
  for (const auto& b : e.branches) acc = acc * UPoly::exact_div(b.tpoly, UPoly::gcd(acc, b.tpoly));
  e.candidates = acc.monic();
  return e;
}

}  // namespace detail

namespace detail {
inline UPoly base_candidates(const FiberSystem& s);
}

/// Projection of the affine singular locus, eliminating c, b, a; the
/// candidates also include the t-values singular at a base point.
inline Elimination eliminate_singular_locus(const FiberSystem& s) {
  Elimination e = detail::eliminate(s.equations(), {"c", "b", "a"});
  UPoly base = detail::base_candidates(s);
  e.candidates = (e.candidates * UPoly::exact_div(base, UPoly::gcd(e.candidates, base))).monic();
  return e;
}

/// Singular points over one tower branch; every point of the branch has the same kind.
struct PointBranch {
  Tower tower;       // levels t then coordinates
  long points;       // per fiber
  std::string kind;  // node, cusp or degenerate
  bool at_base;      // on e = 0, i.e. at a base point of the pencil
};

/// A factor m(t) of the candidate polynomial with its certified singular points.
struct FiberPiece {
  UPoly modulus;
  std::vector<PointBranch> branches;

  long points() const {
    long n = 0;
    for (const auto& b : branches) n += b.points;
    return n;
  }
  long count(const std::string& kind, bool at_base) const {
    long n = 0;
    for (const auto& b : branches)
      if (b.kind == kind && b.at_base == at_base) n += b.points;
    return n;
  }
};

namespace detail {

/// Tangent-cone test at the points of `t` on the curve {g = h = 0} in the local
/// coordinates `vs`, after substituting `at` (coordinates fixed at the point).
/// Node if the Hessian of the Lagrangian h - mu g restricted to the tangent
/// plane is nondegenerate, cusp if it has rank one, degenerate otherwise.
inline std::string classify_point(const MultiPoly& g0, const MultiPoly& h0, const std::vector<std::string>& vs,
                                  const ParamValues& at, const Tower& t) {
  const MultiPoly* g = &g0;
  const MultiPoly* h = &h0;
  auto value = [&](const MultiPoly& p) { return t.reduce(p.evaluate(at)); };
  auto gradient = [&](const MultiPoly& p) {
    std::vector<MultiPoly> out;
    for (const auto& v : vs) out.push_back(value(p.derivative(v)));
    return out;
  };
  auto first_nonzero = [&](const std::vector<MultiPoly>& v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!t.is_zero(v[i])) return i;
    return std::nullopt;
  };
  auto gg = gradient(*g);
  auto i0 = first_nonzero(gg);
  if (!i0) {
    std::swap(g, h);
    gg = gradient(*g);
    i0 = first_nonzero(gg);
    if (!i0) return "degenerate";
  }
  const std::size_t i = *i0;
  MultiPoly mu = t.mul(value(h->derivative(vs[i])), t.inverse(gg[i]));
  std::vector<std::vector<MultiPoly>> hm(3, std::vector<MultiPoly>(3));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      hm[j][k] = t.reduce(value(h->derivative(vs[j]).derivative(vs[k])) -
                          mu * value(g->derivative(vs[j]).derivative(vs[k])));
  // tangent plane basis g_i e_j - g_j e_i
  std::vector<std::vector<MultiPoly>> basis;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == i) continue;
    std::vector<MultiPoly> v(3, MultiPoly(gg[0].vars()));
    v[j] = gg[i];
    v[i] = -gg[j];
    basis.push_back(std::move(v));
  }
  MultiPoly r[2][2];
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      MultiPoly acc(gg[0].vars());
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) acc = acc + basis[p][j] * hm[j][k] * basis[q][k];
      r[p][q] = t.reduce(acc);
    }
  if (!t.is_zero(r[0][0] * r[1][1] - r[0][1] * r[1][0])) return "node";
  for (const auto& row : r)
    for (const auto& x : row)
      if (!t.is_zero(x)) return "cusp";
  return "degenerate";
}

inline long branch_points(const Tower& t) {
  long n = 1;
  for (std::size_t k = 1; k < t.levels(); ++k) n *= t.degree(k);
  return n;
}

/// Runs `step` on each tower until it returns no children, splitting on zero
/// divisors above the t level. A split at the t level propagates.
template <class Step>
std::vector<Tower> grow_towers(std::vector<Tower> work, Step step) {
  std::vector<Tower> done;
  while (!work.empty()) {
    Tower t = work.back();
    work.pop_back();
    try {
      auto next = step(t);
      if (!next) continue;
      if (next->levels() == t.levels()) done.push_back(*next);
      else work.push_back(*next);
    } catch (const ZeroDivisorSplit& z) {
      if (z.level == 0) throw;
      auto [x, y] = t.split(z);
      work.push_back(x);
      work.push_back(y);
    }
  }
  return done;
}

/// Parts of `t` whose points are not zeros of the triangular set `u`.
inline std::vector<Tower> subtract(const Tower& t, const Tower& u) {
  std::vector<Tower> out;
  std::vector<Tower> work{t};
  while (!work.empty()) {
    Tower x = work.back();
    work.pop_back();
    try {
      bool inside = true;
      for (std::size_t k = 0; k < u.levels() && inside; ++k) inside = x.is_zero(u.modulus(k));
      if (!inside) out.push_back(x);
    } catch (const ZeroDivisorSplit& z) {
      if (z.level == 0) throw;
      auto [a, b] = x.split(z);
      work.push_back(a);
      work.push_back(b);
    }
  }
  return out;
}

/// Towers t -> a -> b -> c for the affine singular points over m(t).
inline std::vector<Tower> affine_points(const FiberSystem& s, const Elimination& e, const UPoly& m) {
  const auto& fv = FiberSystem::vars();
  const std::vector<std::string> names{"a", "b", "c"};
  const auto eqs = s.equations();
  std::vector<Tower> all;
  for (const auto& br : e.branches) {
    if (UPoly::gcd(br.tpoly, m).degree() < 1) continue;
    // level a uses the system before eliminating a, level b the one before eliminating b
    const std::vector<const std::vector<MultiPoly>*> level_polys{&br.stages[2], &br.stages[1], &eqs};
    Tower root = Tower().extend("t", m.to_multi("t").with_vars(fv));
    auto full = grow_towers({root}, [&](const Tower& t) -> std::optional<Tower> {
      const std::size_t lvl = t.levels() - 1;
      if (lvl == 3) return t;
      const auto& v = names[lvl];
      MultiPoly g(fv);
      for (const auto& p : *level_polys[lvl]) g = t.gcd_in(g, p.with_vars(fv), v);
      if (g.is_zero()) throw AlgebraError("singular locus is not finite over the fiber");
      if (g.degree(v) < 1) return std::nullopt;
      return t.extend(v, t.squarefree_in(g, v));
    });
    for (const auto& t : full) {
      std::vector<Tower> parts{t};
      for (const auto& u : all) {
        std::vector<Tower> next;
        for (const auto& x : parts)
          for (auto& y : subtract(x, u)) next.push_back(std::move(y));
        parts = std::move(next);
      }
      all.insert(all.end(), parts.begin(), parts.end());
    }
  }
  return all;
}

/// Chart of the closed fiber near e = 0. Chart k sets coordinate k of (a, b, c)
/// to 1 and the earlier ones to 0; the later ones (`free`) are solved for.
struct BaseChart {
  MultiPoly g, h;                  // fiber equations in the chart
  std::vector<std::string> local;  // the three chart coordinates
  std::vector<std::string> free;
  ParamValues at;                  // e = 0 and the coordinates fixed at 0
  std::vector<MultiPoly> polys;    // singular points on e = 0
  std::vector<MultiPoly> first;    // t-free relations in free[0] when two are free
};

inline std::vector<BaseChart> base_charts(const FiberSystem& s) {
  const auto& pv = FiberSystem::projective_vars();
  const std::vector<std::string> coords{"a", "b", "c"};
  std::vector<BaseChart> out;
  for (std::size_t k = 0; k < 3; ++k) {
    BaseChart c;
    c.at["e"] = Rat(0);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == k) continue;
      c.local.push_back(coords[j]);
      if (j < k) c.at[coords[j]] = Rat(0);
      else c.free.push_back(coords[j]);
    }
    c.local.push_back("e");
    ParamValues chart{{coords[k], Rat(1)}};
    c.g = s.q1.evaluate(chart);
    c.h = s.q2.evaluate(chart);
    MultiPoly gb = c.g.evaluate(c.at), hb = c.h.evaluate(c.at);
    c.polys = {gb, hb};
    for (const auto& mi : jacobian_minors(c.g, c.h, c.local)) c.polys.push_back(mi.evaluate(c.at));
    c.polys = clean(c.polys);
    if (c.free.size() == 2) {
      std::vector<MultiPoly> with;
      for (const auto& p : clean({gb, hb})) (p.degree(c.free[1]) > 0 ? with : c.first).push_back(p);
      if (with.size() == 2) {
        MultiPoly r = resultant(with[0], with[1], c.free[1]);
        if (r.is_zero()) throw AlgebraError("base locus of the pencil is not finite");
        c.first.push_back(r.with_vars(pv));
      }
      if (c.first.empty()) throw AlgebraError("base locus of the pencil is not finite");
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// t-values whose closed fiber is singular at a base point.
inline UPoly base_candidates(const FiberSystem& s) {
  UPoly acc = UPoly::constant(1);
  for (const auto& c : base_charts(s)) {
    std::vector<std::string> order(c.free.rbegin(), c.free.rend());
    Elimination e = eliminate(c.polys, order);
    acc = acc * UPoly::exact_div(e.candidates, UPoly::gcd(acc, e.candidates));
  }
  return acc.monic();
}

/// Singular points of the closed fiber on e = 0 over m(t), with their kinds.
inline std::vector<std::pair<Tower, std::string>> base_points(const FiberSystem& s, const UPoly& m) {
  const auto& pv = FiberSystem::projective_vars();
  std::vector<std::pair<Tower, std::string>> out;
  for (const auto& c : base_charts(s)) {
    Tower root = Tower().extend("t", m.to_multi("t").with_vars(pv));
    auto towers = grow_towers({root}, [&](const Tower& t) -> std::optional<Tower> {
      const std::size_t lvl = t.levels() - 1;
      if (lvl == c.free.size()) {
        for (const auto& p : c.polys)
          if (!t.is_zero(p)) return std::nullopt;
        return t;
      }
      const auto& v = c.free[lvl];
      const auto& use = (lvl == 0 && c.free.size() == 2) ? c.first : c.polys;
      MultiPoly gg(pv);
      for (const auto& p : use) gg = t.gcd_in(gg, p, v);
      if (gg.is_zero()) throw AlgebraError("base locus of the pencil is not finite");
      if (gg.degree(v) < 1) return std::nullopt;
      return t.extend(v, t.squarefree_in(gg, v));
    });
    for (const auto& t : towers)
      grow_towers({t}, [&](const Tower& u) -> std::optional<Tower> {
        out.emplace_back(u, classify_point(c.g, c.h, c.local, c.at, u));
        return std::nullopt;
      });
  }
  return out;
}

}  // namespace detail

/// Certifies the singular points over t-modulus m by triangular decomposition,
/// on the affine chart and at the base points. A zero divisor at the t level
/// propagates as ZeroDivisorSplit{0, ...}.
inline FiberPiece analyze_piece(const FiberSystem& s, const Elimination& e, const UPoly& m) {
  FiberPiece piece{m.monic(), {}};
  for (const auto& t : detail::affine_points(s, e, piece.modulus)) {
    detail::grow_towers({t}, [&](const Tower& u) -> std::optional<Tower> {
      piece.branches.push_back({u, detail::branch_points(u), detail::classify_point(s.g1, s.g2, {"a", "b", "c"}, {}, u), false});
      return std::nullopt;
    });
  }
  for (auto& [t, kind] : detail::base_points(s, piece.modulus))
    piece.branches.push_back({t, detail::branch_points(t), kind, true});
  return piece;
}

/// Splits m(t) until every piece analyses without a zero divisor at the t level.
inline std::vector<FiberPiece> analyze_pieces(const FiberSystem& s, const Elimination& e, const UPoly& m) {
  std::vector<FiberPiece> out;
  std::vector<UPoly> work{m.monic()};
  while (!work.empty()) {
    UPoly cur = work.back();
    work.pop_back();
    if (cur.degree() < 1) continue;
    try {
      out.push_back(analyze_piece(s, e, cur));
    } catch (const ZeroDivisorSplit& z) {
      UPoly f = UPoly::from_multi(z.factor.with_vars({"t"}), "t").monic();
      work.push_back(f);
      work.push_back(UPoly::exact_div(cur, f));
    }
  }
  return out;
}

/// Squarefree monic polynomial whose roots are exactly the t with a singular
/// affine fiber, certified point by point.
inline UPoly certified_singular_polynomial(const PencilFamily& f, const ParamValues& pv) {
  FiberSystem s = fiber_system(f, pv);
  Elimination e = eliminate_singular_locus(s);
  UPoly out = UPoly::constant(1);
  if (e.candidates.degree() < 1) return out;
  for (const auto& p : analyze_pieces(s, e, e.candidates))
    if (p.points() > 0) out = out * p.modulus;
  return out.monic();
}

struct SymbolicOptions {
  std::uint64_t seed = 20240601;
  long value_range = 25;  // sample parameters are nonzero integers in [-range, range]
  int max_total_degree = 8;
  int fresh_checks = 3;
};

/// Discriminant of the pencil as a polynomial in t and the parameters: monic
/// in t, equal to the certified singular polynomial at generic parameters.
/// Built by dense interpolation of the coefficients over random samples and
/// verified at fresh points.
inline MultiPoly singular_fiber_polynomial(const PencilFamily& f, const SymbolicOptions& opt = {}) {
  const std::size_t np = f.params.size();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(-opt.value_range, opt.value_range);
  auto random_point = [&]() {
    for (;;) {
      ParamValues pv;
      for (const auto& p : f.params) {
        long x = 0;
        while (x == 0) x = dist(rng);
        pv[p] = Rat(x);
      }
      bool ok = true;
      for (const auto& e : f.excluded) ok = ok && !e.evaluate(pv).is_zero();
      if (ok) return pv;
    }
  };
  struct Sample {
    ParamValues pv;
    UPoly poly;
  };
  std::vector<Sample> samples;
  int n = -1;
  auto draw = [&]() {
    for (int tries = 0; tries < 200; ++tries) {
      auto pv = random_point();
      UPoly p = certified_singular_polynomial(f, pv);
      if (p.degree() > n) {
        n = p.degree();
        samples.clear();
      }
      if (p.degree() == n) return Sample{pv, p};
    }
    throw AlgebraError("no generic parameter sample found");
  };
  for (int k = 0; k < 3; ++k) samples.push_back(draw());
  if (n < 1) throw AlgebraError("family " + f.name + " has no singular affine fibers");

  auto monomials = [&](int deg) {
    std::vector<std::vector<int>> out{std::vector<int>(np, 0)};
    std::vector<std::vector<int>> frontier = out;
    for (int d = 1; d <= deg; ++d) {
      std::vector<std::vector<int>> next;
      for (const auto& m : frontier)
        for (std::size_t i = 0; i < np; ++i) {
          bool lead = true;  // extend only at or after the last nonzero slot
          for (std::size_t j = i + 1; j < np; ++j) lead = lead && m[j] == 0;
          if (!lead) continue;
          auto e = m;
          ++e[i];
          next.push_back(e);
        }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  };
  auto mono_value = [&](const std::vector<int>& e, const ParamValues& pv) {
    Rat v = 1;
    for (std::size_t i = 0; i < np; ++i)
      for (int k = 0; k < e[i]; ++k) v *= pv.at(f.params[i]);
    return v;
  };

  std::vector<std::string> out_vars{"t"};
  out_vars.insert(out_vars.end(), f.params.begin(), f.params.end());
  for (int deg = 0; deg <= opt.max_total_degree; ++deg) {
    auto monos = monomials(deg);
    const std::size_t m = monos.size();
    while (samples.size() < m + 2) samples.push_back(draw());
    RatMatrix aug(samples.size(), m + static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < samples.size(); ++r) {
      for (std::size_t c = 0; c < m; ++c) aug(r, c) = mono_value(monos[c], samples[r].pv);
      for (int k = 0; k < n; ++k) aug(r, m + static_cast<std::size_t>(k)) = samples[r].poly[static_cast<std::size_t>(k)];
    }
    auto piv = rref(aug);
    bool consistent = piv.empty() || piv.back() < m;
    if (!consistent) continue;
    if (piv.size() < m) {
      samples.push_back(draw());
      --deg;
      continue;
    }
    std::vector<MultiPoly::Term> terms;
    terms.push_back({[&] {
                       std::vector<int> e(np + 1, 0);
                       e[0] = n;
                       return e;
                     }(),
                     Rat(1)});
    for (std::size_t c = 0; c < m; ++c)
      for (int k = 0; k < n; ++k) {
        Rat v = aug(c, m + static_cast<std::size_t>(k));
        if (v == 0) continue;
        std::vector<int> e{k};
        e.insert(e.end(), monos[c].begin(), monos[c].end());
        terms.push_back({e, v});
      }
    MultiPoly cand = MultiPoly::from_terms(out_vars, terms);
    bool verified = true;
    for (int k = 0; k < opt.fresh_checks && verified; ++k) {
      Sample s = draw();
      verified = UPoly::from_multi(cand.evaluate(s.pv).with_vars({"t"}), "t") == s.poly;
      samples.push_back(s);
    }
    if (verified) return cand.primitive_part();
  }
  throw AlgebraError("interpolation of the singular fiber polynomial did not close by degree " +
                     std::to_string(opt.max_total_degree));
}

/// The discriminant at given parameter values, as a polynomial in t.
inline MultiPoly specialize(const MultiPoly& delta, const ParamValues& pv) {
  return delta.evaluate(pv).with_vars({"t"});
}

/// Parameter loci where two singular fibers collide.
struct LocusReport {
  std::vector<std::string> params;
  MultiPoly discriminant;                  // disc_t(Delta)
  std::vector<std::string> monomial_vars;  // coordinate hyperplanes, already excluded
  MultiPoly locus;                         // squarefree cofactor, primitive
};

inline LocusReport collision_locus(const PencilFamily& f, const MultiPoly& delta) {
  LocusReport r;
  r.params = f.params;
  r.discriminant = discriminant(delta, "t").with_vars(f.params);
  MultiPoly sq = squarefree_part(r.discriminant);
  auto [exps, rest] = split_monomial(sq);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) r.monomial_vars.push_back(sq.vars()[i]);
  r.locus = rest.primitive_part();
  return r;
}

/// A rational point on the locus off the excluded loci: one parameter of
/// degree one is solved after fixing the others to small positive integers.
inline ParamValues witness_on_locus(const PencilFamily& f, const MultiPoly& locus) {
  const auto& vars = locus.vars();
  for (const auto& v : vars) {
    if (locus.degree(v) != 1) continue;
    std::vector<std::string> others;
    for (const auto& w : vars)
      if (w != v) others.push_back(w);
    for (long base = 1; base <= 12; ++base) {
      ParamValues pv;
      for (std::size_t k = 0; k < others.size(); ++k) pv[others[k]] = Rat(base + static_cast<long>(k));
      MultiPoly lin = locus.evaluate(pv);
      auto cs = lin.coefficients(v);
      if (cs.size() != 2 || cs[1].is_zero()) continue;
      Rat c0 = cs[0].is_zero() ? Rat(0) : cs[0].constant_value();
      pv[v] = -c0 / cs[1].constant_value();
      bool ok = true;
      for (const auto& p : f.params)
        if (!pv.count(p)) ok = false;
      for (const auto& e : f.excluded) ok = ok && !e.evaluate(pv).is_zero();
      if (ok) return pv;
    }
  }
  throw AlgebraError("no rational witness found on the locus " + locus.str());
}

/// One group of singular fibers sharing a location factor. Point counts are per fiber.
struct FiberEntry {
  UPoly location;    // monic; a rational root gives a linear factor
  int multiplicity;  // in the discriminant
  std::string type;  // I_n, II, or "unclassified"
  long nodes, base_nodes, cusps, degenerate;
};

struct FiberReport {
  std::string family;
  ParamValues params;
  MultiPoly delta;  // specialised discriminant in t
  std::vector<FiberEntry> fibers;
  long euler = 0;   // sum of deg(location) * e(type) over classified fibers
  long budget = 0;  // 12 - d
  bool all_classified = true;
  bool consistent = true;  // squarefree part of delta equals the certified polynomial

  bool euler_ok() const { return all_classified && euler == budget; }
};

/// Kodaira type from the singular points and the discriminant multiplicity.
/// A node at a base point counts twice: resolving the pencil there adds a
/// fiber component through it, which meets the rest of the fiber twice.
inline std::string fiber_type(long nodes, long base_nodes, long cusps, long degenerate, int multiplicity) {
  const long n = nodes + 2 * base_nodes;
  if (cusps == 0 && degenerate == 0 && n == multiplicity && n > 0) return "I" + std::to_string(n);
  if (n == 0 && cusps == 1 && degenerate == 0 && multiplicity == 2) return "II";
  return "unclassified";
}

inline FiberReport classify_fibers(const PencilFamily& f, const MultiPoly& delta, const ParamValues& pv) {
  FiberReport rep;
  rep.family = f.name;
  rep.params = pv;
  rep.budget = f.euler_budget();
  rep.delta = specialize(delta, pv);
  FiberSystem s = fiber_system(f, pv);
  Elimination e = eliminate_singular_locus(s);
  UPoly dt = UPoly::from_multi(rep.delta, "t");
  if (dt.degree() < 1) {
    rep.consistent = e.candidates.degree() < 1 || certified_singular_polynomial(f, pv).degree() < 1;
    return rep;
  }
  UPoly certified = UPoly::constant(1);
  for (const auto& [g, mult] : yun(dt)) {
    std::vector<UPoly> locs;
    UPoly rest = g.monic();
    for (const auto& r : g.rational_roots()) {
      UPoly lin(std::vector<Rat>{-r, 1});
      locs.push_back(lin);
      rest = UPoly::exact_div(rest, lin);
    }
    if (rest.degree() > 0) locs.push_back(rest.monic());
    for (const auto& loc : locs)
      for (const auto& piece : analyze_pieces(s, e, loc)) {
        FiberEntry fe{piece.modulus,           mult, "", piece.count("node", false), piece.count("node", true),
                      piece.count("cusp", false) + piece.count("cusp", true),
                      piece.count("degenerate", false) + piece.count("degenerate", true)};
        fe.type = fiber_type(fe.nodes, fe.base_nodes, fe.cusps, fe.degenerate, mult);
        if (piece.points() > 0) certified = certified * piece.modulus;
        if (fe.type == "unclassified") rep.all_classified = false;
        else rep.euler += fe.location.degree() * kodaira_euler(fe.type);
        rep.fibers.push_back(std::move(fe));
      }
  }
  rep.consistent = dt.squarefree_part() == certified_singular_polynomial(f, pv) && certified.monic() == dt.squarefree_part();
  std::sort(rep.fibers.begin(), rep.fibers.end(), [](const FiberEntry& a, const FiberEntry& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.location.degree() < b.location.degree();
  });
  return rep;
}

}  // namespace lpm
