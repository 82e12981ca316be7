#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lpm/delpezzo/cone.hpp"
#include "lpm/exact/poly.hpp"
#include "lpm/lattice/lattice.hpp"
#include "lpm/lattice/standard.hpp"

namespace lpm {

/// Pic of the Hirzebruch surface F_n in the basis (s, f): s^2 = -n, s.f = 1, f^2 = 0.
inline IntegralLattice hirzebruch_lattice(int n) {
  IntMatrix g(2, 2);
  g(0, 0) = -n;
  g(0, 1) = g(1, 0) = 1;
  return IntegralLattice(g, {"s", "f"}, "Pic(F" + std::to_string(n) + ")");
}

/// A cycle C_1 + ... + C_k of rational curves with the monoid P of curve classes.
struct CycleConfig {
  std::string name;
  LatticePtr picard;
  std::vector<IntVec> components;
  std::vector<std::string> monoid_labels;
  std::vector<IntVec> monoid_generators;

  std::size_t size() const { return components.size(); }

  IntVec anticanonical() const {
    IntVec s = picard->zero();
    for (const auto& c : components) s = s + c;
    return s;
  }

  /// Cyclic intersection pattern (1 between neighbours, 2 for a two-cycle, 0
  /// otherwise), independent pointed monoid containing every component.
  void validate() const {
    const std::size_t k = size();
    if (k == 0) throw AlgebraError("cycle has no components");
    for (const auto& c : components)
      if (c.size() != picard->rank()) throw AlgebraError("component class has the wrong length");
    for (std::size_t i = 0; i < k && k >= 2; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        bool adjacent = j == i + 1 || (i == 0 && j == k - 1);
        Int want = adjacent ? (k == 2 ? 2 : 1) : 0;
        if (picard->pair(components[i], components[j]) != want)
          throw AlgebraError("non-cyclic configuration: C" + std::to_string(i + 1) + ".C" + std::to_string(j + 1) +
                             " = " + to_string(picard->pair(components[i], components[j])));
      }
    if (monoid_labels.size() != monoid_generators.size()) throw AlgebraError("monoid labels and generators differ in number");
    if (monoid_generators.empty()) throw AlgebraError("monoid has no generators");
    if (rank(rows_to_matrix(monoid_generators, picard->rank())) != monoid_generators.size())
      throw AlgebraError("monoid generators are linearly dependent");
    for (const auto& g : monoid_generators)
      if (in_cone(monoid_generators, -g)) throw AlgebraError("monoid is not pointed");
    for (const auto& c : components)
      if (!in_cone(monoid_generators, c))
        throw AlgebraError("component " + picard->format(c) + " is outside the monoid cone");
  }
};

/// F_2 with C = (s, f, s + 2f, f); x <-> s, y <-> f.
inline CycleConfig f2_config() {
  auto pic = share(hirzebruch_lattice(2));
  return CycleConfig{"f2", pic, {{1, 0}, {0, 1}, {1, 2}, {0, 1}}, {"x", "y"}, {{1, 0}, {0, 1}}};
}

/// P^1 x P^1 with C = (a, b, a, b) in II(1,1); x <-> a, y <-> b.
inline CycleConfig p1p1_config() {
  auto pic = share(hyperbolic_plane());
  return CycleConfig{"p1p1", pic, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}, {"x", "y"}, {{1, 0}, {0, 1}}};
}

/// F_1 with C = (s, f, s + f, f); x <-> s, y <-> f.
inline CycleConfig f1_config() {
  auto pic = share(hirzebruch_lattice(1));
  return CycleConfig{"f1", pic, {{1, 0}, {0, 1}, {1, 1}, {0, 1}}, {"x", "y"}, {{1, 0}, {0, 1}}};
}

/// Degree-6 weak del Pezzo with L = A2 + A1, in I(1,3) coordinates (l, e1, e2, e3).
/// Simple roots a1 = l - e1 - e2 - e3, a2 = e2 - e1, a3 = e3 - e2 and E = e1
/// generate the effective cone. The cycle (a2, a3, l - e3, l, a1, E) sums to f_6.
/// Monoid variables x, y, z, w for a1, a2, a3, E.
inline CycleConfig dp6_config() {
  auto pic = share(lambda_lattice(Degree::parse("6")));
  const IntVec a1{1, -1, -1, -1}, a2{0, -1, 1, 0}, a3{0, 0, -1, 1}, e{0, 1, 0, 0};
  return CycleConfig{"dp6", pic, {a2, a3, {1, 0, 0, -1}, {1, 0, 0, 0}, a1, e}, {"x", "y", "z", "w"}, {a1, a2, a3, e}};
}

inline CycleConfig builtin_config(const std::string& name) {
  if (name == "dp6") return dp6_config();
  if (name == "f2") return f2_config();
  if (name == "p1p1") return p1p1_config();
  if (name == "f1") return f1_config();
  throw AlgebraError("unknown cycle configuration " + name);
}

// ---- fan -------------------------------------------------------------------

struct Fan {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> cones;  // rays first, then 2-cones
};

inline Fan build_fan(const CycleConfig& c) {
  c.validate();
  Fan fan{c.size(), {}};
  for (std::size_t i = 0; i < fan.k; ++i) fan.cones.push_back({i});
  if (fan.k == 2) fan.cones.push_back({0, 1});
  if (fan.k >= 3)
    for (std::size_t i = 0; i < fan.k; ++i) {
      std::size_t j = (i + 1) % fan.k;
      fan.cones.push_back({std::min(i, j), std::max(i, j)});
    }
  return fan;
}

/// r in B(Z): nonnegative with support empty, a single index, or two cyclic neighbours.
inline bool in_fan_support(const IntVec& r) {
  const std::size_t k = r.size();
  std::vector<std::size_t> sup;
  for (std::size_t i = 0; i < k; ++i) {
    if (r[i] < 0) return false;
    if (r[i] > 0) sup.push_back(i);
  }
  if (sup.size() <= 1) return true;
  if (sup.size() > 2) return false;
  return sup[1] == sup[0] + 1 || (sup[0] == 0 && sup[1] == k - 1);
}

inline IntVec dual_basis_point(std::size_t k, std::size_t i, long mult = 1) {
  IntVec v(k, Int(0));
  v[i] = mult;
  return v;
}

// ---- structure constants -----------------------------------------------------

/// One candidate term of theta_p * theta_q: curve class beta = sum m_j g_j and
/// output point r, with the forced count when a default rule applies.
struct StructureTerm {
  IntVec m;
  IntVec beta;
  IntVec r;
  std::optional<long> count;
  std::string rule;  // "zero", "component", "fiber" or "required"
};

namespace detail {

/// First H = sum h_i C_i, h_i in 0..3, with H.g > 0 on every monoid generator.
inline std::optional<IntVec> bounding_weights(const CycleConfig& c) {
  const std::size_t k = c.size();
  IntVec h(k, Int(0));
  std::optional<IntVec> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == k) {
      IntVec cls = c.picard->zero();
      for (std::size_t j = 0; j < k; ++j) cls = cls + h[j] * c.components[j];
      for (const auto& g : c.monoid_generators)
        if (c.picard->pair(cls, g) <= 0) return;
      found = h;
      return;
    }
    for (long v = 0; v <= 3 && !found; ++v) {
      h[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return found;
}

}  // namespace detail

/// All (beta, r) with beta in P, r in B(Z) and beta.C_i = p_i + q_i - r_i for
/// every component; the enumeration is bounded by H.beta <= H.(p + q).
inline std::vector<StructureTerm> structure_terms(const CycleConfig& c, const IntVec& p, const IntVec& q) {
  c.validate();
  const std::size_t k = c.size();
  if (p.size() != k || q.size() != k || !in_fan_support(p) || !in_fan_support(q))
    throw AlgebraError("structure constants need points of B(Z)");
  auto h = detail::bounding_weights(c);
  if (!h) throw AlgebraError("unbounded enumeration: no class pairs positively with the whole monoid");
  IntVec hcls = c.picard->zero();
  for (std::size_t j = 0; j < k; ++j) hcls = hcls + (*h)[j] * c.components[j];
  Int budget = 0;
  for (std::size_t i = 0; i < k; ++i) budget += (*h)[i] * (p[i] + q[i]);
  const std::size_t ng = c.monoid_generators.size();
  std::vector<Int> weight(ng);
  for (std::size_t j = 0; j < ng; ++j) weight[j] = c.picard->pair(hcls, c.monoid_generators[j]);

  const IntVec anti = c.anticanonical();
  std::vector<StructureTerm> out;
  IntVec m(ng, Int(0));
  std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int used) {
    if (j == ng) {
      IntVec beta = c.picard->zero();
      for (std::size_t t = 0; t < ng; ++t) beta = beta + m[t] * c.monoid_generators[t];
      IntVec r(k);
      for (std::size_t i = 0; i < k; ++i) r[i] = p[i] + q[i] - c.picard->pair(beta, c.components[i]);
      if (!in_fan_support(r)) return;
      StructureTerm term{m, beta, r, std::nullopt, "required"};
      if (is_zero(beta)) {
        term.count = 1;
        term.rule = "zero";
      } else if (std::find(c.components.begin(), c.components.end(), beta) != c.components.end()) {
        term.count = 1;
        term.rule = "component";
      } else if (c.picard->norm(beta) == 0 && c.picard->pair(beta, anti) == 2) {
        term.count = 1;
        term.rule = "fiber";
      }
      out.push_back(std::move(term));
      return;
    }
    for (Int v = 0; used + v * weight[j] <= budget; ++v) {
      m[j] = v;
      rec(j + 1, used + v * weight[j]);
    }
    m[j] = 0;
  };
  rec(0, Int(0));
  std::sort(out.begin(), out.end(), [](const StructureTerm& a, const StructureTerm& b) {
    return std::tie(a.m, a.r) < std::tie(b.m, b.r);
  });
  return out;
}

struct CountKey {
  IntVec p, q, m, r;
  bool operator<(const CountKey& o) const { return std::tie(p, q, m, r) < std::tie(o.p, o.q, o.m, o.r); }
};

using CountTable = std::map<CountKey, long>;

struct ThetaPresentation {
  std::vector<std::string> generators;  // theta_{C_i^*} renamed a, b, c, ...
  std::vector<std::string> monoid_vars;
  std::vector<MultiPoly> relations;
};

/// Terms of the non-adjacent generator products that no default rule covers
/// and the table does not supply.
inline std::vector<std::pair<CountKey, StructureTerm>> missing_counts(const CycleConfig& c,
                                                                      const CountTable& counts = {}) {
  std::vector<std::pair<CountKey, StructureTerm>> out;
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      IntVec p = dual_basis_point(k, i), q = dual_basis_point(k, j);
      for (auto& t : structure_terms(c, p, q)) {
        CountKey key{p, q, t.m, t.r};
        if (!t.count && !counts.count(key)) out.emplace_back(key, t);
      }
    }
  return out;
}

inline std::string describe_count_key(const CycleConfig& c, const CountKey& key) {
  auto point = [](const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += (v[i] == 1 ? "" : to_string(v[i])) + "C" + std::to_string(i + 1) + "*";
    }
    return s.empty() ? std::string("0") : s;
  };
  IntVec beta = c.picard->zero();
  for (std::size_t t = 0; t < key.m.size(); ++t) beta = beta + key.m[t] * c.monoid_generators[t];
  return "(p = " + point(key.p) + ", q = " + point(key.q) + ", beta = " + c.picard->format(beta) +
         ", r = " + point(key.r) + ")";
}

/// Relations theta_i theta_j = sum N x^m theta_r for every non-adjacent pair
/// i < j, with theta_r = theta_u^{r_u} theta_v^{r_v} on the cone of r.
/// Needs k >= 4: smaller cycles have no non-adjacent pairs.
inline ThetaPresentation presentation(const CycleConfig& c, const CountTable& counts = {}) {
  c.validate();
  const std::size_t k = c.size();
  if (k < 4) throw AlgebraError("presentation by pairwise products needs a cycle of length at least 4");
  if (k > 26) throw AlgebraError("cycle too long to name generators");
  auto missing = missing_counts(c, counts);
  if (!missing.empty()) {
    std::string msg = "count required for";
    for (const auto& [key, t] : missing) msg += " " + describe_count_key(c, key);
    throw AlgebraError(msg);
  }
  ThetaPresentation out;
  for (std::size_t i = 0; i < k; ++i) out.generators.push_back(std::string(1, static_cast<char>('a' + i)));
  out.monoid_vars = c.monoid_labels;
  std::vector<std::string> vars = out.generators;
  vars.insert(vars.end(), out.monoid_vars.begin(), out.monoid_vars.end());
  auto var = [&](const std::string& v) { return MultiPoly::variable(v, vars); };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      IntVec p = dual_basis_point(k, i), q = dual_basis_point(k, j);
      MultiPoly rel = var(out.generators[i]) * var(out.generators[j]);
      for (const auto& t : structure_terms(c, p, q)) {
        long n = t.count ? *t.count : counts.at(CountKey{p, q, t.m, t.r});
        MultiPoly mono = MultiPoly::constant(Rat(n), vars);
        for (std::size_t g = 0; g < t.m.size(); ++g) mono = mono * var(out.monoid_vars[g]).pow(t.m[g].get_ui());
        for (std::size_t u = 0; u < k; ++u)
          if (t.r[u] > 0) mono = mono * var(out.generators[u]).pow(t.r[u].get_ui());
        rel = rel - mono;
      }
      out.relations.push_back(rel);
    }
  return out;
}

}  // namespace lpm
