#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpm/delpezzo/delpezzo.hpp"
#include "lpm/fibration/kodaira.hpp"
#include "lpm/lattice/isometry.hpp"
#include "lpm/lattice/lattice.hpp"
#include "lpm/lattice/standard.hpp"
#include "lpm/roots/roots.hpp"

namespace lpm {

/// Pairing-preserving map f_d^perp -> F_d^perp. Row i of `map` is the image,
/// in I(1,9) coordinates, of the i-th basis vector of `source`.
struct Embedding {
  Degree degree;
  Sublattice source;
  Sublattice target;
  IntMatrix map;

  IntVec image(const IntVec& v) const {
    auto c = source.coordinates(v);
    if (!c) throw AlgebraError("vector is not in f_d^perp");
    IntVec out(target.ambient()->rank(), Int(0));
    for (std::size_t i = 0; i < c->size(); ++i) out = out + (*c)[i] * map.row(i);
    return out;
  }

  /// Gram preservation and orthogonality to the marking classes.
  void validate() const {
    const auto& amb = *target.ambient();
    IntMatrix g = source.gram();
    for (std::size_t i = 0; i < source.rank(); ++i) {
      IntVec u = map.row(i);
      if (!target.contains(u)) throw AlgebraError("embedding image leaves F_d^perp");
      for (std::size_t j = 0; j < source.rank(); ++j)
        if (amb.pair(u, map.row(j)) != g(i, j)) throw AlgebraError("embedding does not preserve the Gram matrix");
    }
  }
};

/// Representatives of embeddings f_d^perp -> F_d^perp modulo isometries of
/// F_d^perp fixing f_0. Every automorphism of the quotient lifts (extend by the
/// identity on the radical) and radical shifts are isometries fixing f_0, so
/// all embeddings form one class; the list always has exactly one entry.
inline std::vector<Embedding> enumerate_embeddings(const Degree& d) {
  Sublattice src = anticanonical_complement(d);
  Sublattice tgt = marking_complement(d);
  auto flat = share(tgt.as_lattice());
  auto rq = radical_and_quotient(flat);
  auto t = is_isometric(src.as_lattice(), rq.quotient);
  if (!t) throw AlgebraError("f_d^perp is not isometric to F_d^perp modulo its radical");
  IntMatrix map(src.rank(), tgt.ambient()->rank());
  for (std::size_t i = 0; i < src.rank(); ++i) {
    IntVec flat_coords(flat->rank(), Int(0));
    for (std::size_t j = 0; j < rq.complement.size(); ++j) flat_coords = flat_coords + (*t)(j, i) * rq.complement[j];
    IntVec amb(tgt.ambient()->rank(), Int(0));
    for (std::size_t k = 0; k < flat_coords.size(); ++k) amb = amb + flat_coords[k] * tgt.basis()[k];
    map.set_row(i, amb);
  }
  Embedding e{d, src, tgt, map};
  e.validate();
  return {e};
}

/// Complement of L inside f_d^perp; saturated because it is an orthogonal complement.
inline Sublattice mirror_complement(const Degree& d, const Sublattice& l) {
  std::vector<IntVec> gens = l.basis();
  gens.push_back(anticanonical_class(d));
  return orthogonal_complement(l.ambient(), span(l.ambient(), gens));
}

struct MirrorPair {
  Degree degree;
  Sublattice l;
  Sublattice lcheck;
  Embedding embedding;
  std::vector<IntVec> lcheck_image;  // in I(1,9)
};

inline MirrorPair mirror_lattice(const Degree& d, const Sublattice& l, const Embedding& emb) {
  emb.validate();
  const auto& amb = *l.ambient();
  if (!is_saturated_rows(l.basis(), amb.rank())) throw AlgebraError("polarizing lattice is not saturated");
  for (const auto& v : l.basis())
    if (amb.pair(v, anticanonical_class(d)) != 0) throw AlgebraError("polarizing lattice is not inside f_d^perp");
  if (l.rank() > 0 && !is_negative_definite(l.gram())) throw AlgebraError("polarizing lattice is not negative definite");
  Sublattice lc = mirror_complement(d, l);
  std::vector<IntVec> img;
  for (const auto& v : lc.basis()) img.push_back(emb.image(v));
  return MirrorPair{d, l, lc, emb, img};
}

/// Root type of a negative (semi)definite sublattice, "0" when rank 0.
inline std::string sublattice_root_type(const Sublattice& s) {
  if (s.rank() == 0) return "0";
  return root_system(s.as_lattice()).type();
}

/// Rank of the span of the roots of a sublattice.
inline std::size_t root_rank(const Sublattice& s) {
  if (s.rank() == 0) return 0;
  auto roots = enumerate_roots(s.as_lattice());
  if (roots.empty()) return 0;
  return rank(rows_to_matrix(roots, s.rank()));
}

/// Dimension of Hom(F_d^perp / <R_L, f_0>, G_m): (9 - d) - rank R_L, with 8' counted as 8.
inline long period_dimension(const Degree& d, const Sublattice& l) {
  return static_cast<long>(9 - d.d) - static_cast<long>(root_rank(l));
}

// ---- Coxeter graph automorphisms ------------------------------------------------

/// All permutations p of the simple roots with G(p(i), p(j)) = G(i, j).
inline std::vector<std::vector<std::size_t>> diagram_automorphisms(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || gram(c, c) != gram(i, i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = gram(c, perm[j]) == gram(i, j);
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      place(i + 1);
      used[c] = false;
    }
  };
  place(0);
  return out;
}

struct OrbitPartition {
  std::vector<IntVec> simple_roots;
  std::vector<std::vector<std::size_t>> blocks;  // indices into simple_roots
  bool approximate = true;
};

/// True when the simple roots span `l` itself, so diagram automorphisms are
/// isometries of l.
inline bool spanned_by_roots(const Sublattice& l, const std::vector<IntVec>& simple) {
  if (simple.size() != l.rank()) return false;
  if (simple.empty()) return true;
  return span(l.ambient(), simple).same_as(l);
}

inline std::vector<std::vector<std::size_t>> orbit_blocks(std::size_t n,
                                                          const std::vector<std::vector<std::size_t>>& group) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& g : group) orbit.insert(g[i]);
    orbit.insert(i);
    for (auto j : orbit) seen[j] = true;
    blocks.emplace_back(orbit.begin(), orbit.end());
  }
  return blocks;
}

/// Partition of the simple roots of R_L under diagram automorphisms; the
/// identity group is used when R_L does not span L.
inline OrbitPartition admissible_orbits(const Polarization& pol) {
  OrbitPartition out{pol.simple_roots, {}, true};
  const auto& lat = *pol.pair.picard;
  std::vector<std::vector<std::size_t>> group;
  if (spanned_by_roots(pol.sublattice, pol.simple_roots)) group = diagram_automorphisms(simple_gram(lat, pol.simple_roots));
  out.blocks = orbit_blocks(pol.simple_roots.size(), group);
  return out;
}

// ---- strata ----------------------------------------------------------------------

struct FiberPrediction {
  std::vector<std::string> fibers;  // root-type fibers first, then I1 padding
  long euler = 0;
  bool within_budget = true;
};

/// Finite fibers predicted for a root type on a surface of type d, padded with
/// I1 up to Euler number 12 - d.
inline FiberPrediction predict_fibers(const Degree& d, const std::vector<AdeComponent>& comps) {
  FiberPrediction out;
  for (const auto& c : comps) {
    out.fibers.push_back(fiber_for_component(c.label));
    out.euler += kodaira_euler(out.fibers.back());
  }
  const long budget = 12 - d.d;
  out.within_budget = out.euler <= budget;
  while (out.euler < budget) {
    out.fibers.push_back("I1");
    out.euler += 1;
  }
  return out;
}

struct StrataNode {
  Sublattice lattice;
  std::vector<std::uint32_t> members;  // closed simple-root subsets in this orbit class
  std::string root_type;
  std::size_t root_rank = 0;
  long dimension = 0;
  FiberPrediction fibers;
};

struct StrataPoset {
  Degree degree;
  Sublattice base;
  std::vector<IntVec> simple_roots;  // of f_d^perp
  std::vector<StrataNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  bool orbits_approximate = true;
};

/// Overlattices sat<L, A> for subsets A of the simple roots of f_d^perp,
/// grouped into classes under diagram automorphisms fixing L. Nodes are sorted
/// by root rank, then type; covers are the transitive reduction of inclusion.
inline StrataPoset strata_poset(const Degree& d, const Sublattice& l) {
  auto pair = del_pezzo_pair(d);
  auto full = polarize(pair, anticanonical_complement(d).basis());
  const auto& delta = full.simple_roots;
  const std::size_t n = delta.size();
  const auto& amb = *pair.picard;

  std::uint32_t base_mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (l.contains(delta[i])) base_mask |= 1u << i;
  {
    std::vector<IntVec> in_l;
    for (std::size_t i = 0; i < n; ++i)
      if (base_mask >> i & 1u) in_l.push_back(delta[i]);
    std::size_t r = in_l.empty() ? 0 : rank(rows_to_matrix(in_l, amb.rank()));
    if (r != root_rank(l)) throw AlgebraError("roots of L are not spanned by simple roots of f_d^perp");
  }

  std::vector<std::vector<std::size_t>> group;
  if (spanned_by_roots(anticanonical_complement(d), delta)) {
    std::vector<IntVec> base_roots;
    for (std::size_t i = 0; i < n; ++i)
      if (base_mask >> i & 1u) base_roots.push_back(delta[i]);
    bool l_is_root_span = base_roots.empty() ? l.rank() == 0 : span(pair.picard, base_roots).same_as(l);
    if (l_is_root_span)
      for (auto& g : diagram_automorphisms(simple_gram(amb, delta))) {
        std::uint32_t img = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (base_mask >> i & 1u) img |= 1u << g[i];
        if (img == base_mask) group.push_back(g);
      }
  }
  auto apply = [&](const std::vector<std::size_t>& g, std::uint32_t m) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) out |= 1u << g[i];
    return out;
  };

  // closed subsets: simple roots contained in sat<L, A>
  std::map<std::uint32_t, Sublattice> closed;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if ((a & base_mask) != base_mask) continue;
    std::vector<IntVec> gens = l.basis();
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1u) gens.push_back(delta[i]);
    Sublattice lp = gens.empty() ? Sublattice(pair.picard, {}, true) : saturation(span(pair.picard, gens));
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lp.contains(delta[i])) c |= 1u << i;
    closed.emplace(c, lp);
  }

  StrataPoset out{d, l, delta, {}, {}, true};
  std::map<std::uint32_t, std::size_t> class_of;
  for (const auto& [mask, lp] : closed) {
    if (class_of.count(mask)) continue;
    std::set<std::uint32_t> orbit{mask};
    for (const auto& g : group) orbit.insert(apply(g, mask));
    StrataNode node{lp, {}, "0", 0, 0, {}};
    for (auto m : orbit)
      if (closed.count(m)) node.members.push_back(m);
    std::vector<AdeComponent> comps;
    if (lp.rank() > 0) {
      auto rs = root_system(lp.as_lattice());
      comps = rs.components;
      node.root_type = rs.type();
      node.root_rank = rs.simple.size();
    }
    node.dimension = static_cast<long>(9 - d.d) - static_cast<long>(node.root_rank);
    node.fibers = predict_fibers(d, comps);
    for (auto m : node.members) class_of[m] = out.nodes.size();
    out.nodes.push_back(std::move(node));
  }
  // canonical order: root rank, then type, then smallest member
  std::vector<std::size_t> order(out.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = out.nodes[a];
    const auto& y = out.nodes[b];
    if (x.root_rank != y.root_rank) return x.root_rank < y.root_rank;
    if (x.root_type != y.root_type) return x.root_type < y.root_type;
    return x.members.front() < y.members.front();
  });
  std::vector<StrataNode> sorted;
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = i;
    sorted.push_back(out.nodes[order[i]]);
  }
  out.nodes = std::move(sorted);
  for (auto& [m, c] : class_of) c = pos[c];

  const std::size_t k = out.nodes.size();
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
  for (const auto& [m1, c1] : class_of)
    for (const auto& [m2, c2] : class_of)
      if (c1 != c2 && (m1 & m2) == m1 && m1 != m2) below[c1][c2] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t m = 0; m < k && direct; ++m)
        if (below[i][m] && below[m][j]) direct = false;
      if (direct) out.covers.emplace_back(i, j);
    }
  return out;
}

}  // namespace lpm
