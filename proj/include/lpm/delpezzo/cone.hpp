#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/number.hpp"
#include "lpm/lattice/lattice.hpp"

namespace lpm {

/// Exact Phase I simplex with Bland's rule: is v a nonnegative combination of gens?
inline bool in_cone(const std::vector<IntVec>& gens, const IntVec& v) {
  const std::size_t n = v.size(), k = gens.size();
  if (is_zero(v)) return true;
  if (k == 0) return false;
  // rows: sum_j lambda_j gens[j][i] + art_i = v_i, signs flipped so rhs >= 0
  const std::size_t cols = k + n;
  RatMatrix t(n, cols + 1);
  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    int sign = v[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t(i, j) = Rat(gens[j][i] * sign);
    t(i, k + i) = 1;
    t(i, cols) = Rat(v[i] * sign);
    basis[i] = k + i;
  }
  auto reduced_cost = [&](std::size_t j) {
    // phase I cost: 1 on artificials
    Rat c = j >= k ? Rat(1) : Rat(0);
    for (std::size_t i = 0; i < n; ++i)
      if (basis[i] >= k) c -= t(i, j);
    return c;
  };
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = n;
    Rat best;
    for (std::size_t i = 0; i < n; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, cols) / t(i, enter);
      if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == n) break;  // unbounded direction cannot occur in phase I
    Rat piv = t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  Rat infeas = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (basis[i] >= k) infeas += t(i, cols);
  return infeas == 0;
}

inline IntVec primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

/// Extremal generators of the cone spanned by `gens` (primitive, deduplicated,
/// sorted). Redundant generators are removed one at a time by LP.
inline std::vector<IntVec> extremal_rays(const std::vector<IntVec>& gens) {
  std::set<IntVec> uniq;
  for (const auto& g : gens)
    if (!is_zero(g)) uniq.insert(primitive(g));
  std::vector<IntVec> rays(uniq.begin(), uniq.end());
  for (std::size_t j = 0; j < rays.size();) {
    std::vector<IntVec> others;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (i != j) others.push_back(rays[i]);
    if (in_cone(others, rays[j])) rays.erase(rays.begin() + static_cast<long>(j));
    else ++j;
  }
  return rays;
}

struct HCone {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

namespace detail {

/// Double description for a pointed cone {x : A x >= 0} with rank A = n.
/// Adjacency is combinatorial: two rays are adjacent when their common active
/// set has at least n - 2 constraints and no third ray is active on all of it.
inline std::vector<IntVec> double_description(const std::vector<IntVec>& a, std::size_t n) {
  using Bits = std::vector<std::uint64_t>;
  const std::size_t words = (a.size() + 63) / 64;
  std::vector<std::size_t> chosen;
  {
    std::vector<IntVec> acc;
    for (std::size_t i = 0; i < a.size() && chosen.size() < n; ++i) {
      acc.push_back(a[i]);
      if (rank(rows_to_matrix(acc, n)) == acc.size()) chosen.push_back(i);
      else acc.pop_back();
    }
  }
  if (chosen.size() != n) throw AlgebraError("double description needs a full-rank constraint matrix");
  std::vector<IntVec> sel;
  for (std::size_t i : chosen) sel.push_back(a[i]);
  auto inv = inverse(to_rational(rows_to_matrix(sel, n)));

  struct Ray {
    IntVec v;
    Bits zeros;
  };
  auto active = [&](const IntVec& v, const std::vector<std::size_t>& done) {
    Bits z(words, 0);
    for (std::size_t i : done)
      if (dot(a[i], v) == 0) z[i / 64] |= std::uint64_t(1) << (i % 64);
    return z;
  };
  auto count = [](const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  };
  auto contains = [](const Bits& big, const Bits& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
      if ((big[i] & small[i]) != small[i]) return false;
    return true;
  };
  std::vector<std::size_t> done = chosen;
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec v = primitive_ray(inv->col(j));
    rays.push_back(Ray{v, active(v, done)});
  }
  std::vector<bool> used(a.size(), false);
  for (std::size_t i : chosen) used[i] = true;

  for (std::size_t c = 0; c < a.size(); ++c) {
    if (used[c]) continue;
    const IntVec& h = a[c];
    std::vector<std::size_t> plus, zero, minus;
    std::vector<Int> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].v);
      (val[i] > 0 ? plus : val[i] < 0 ? minus : zero).push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t i : plus) next.push_back(rays[i]);
    for (std::size_t i : zero) next.push_back(rays[i]);
    for (std::size_t p : plus)
      for (std::size_t m : minus) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[m].zeros[w];
        if (n >= 2 && count(common) < n - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != m && contains(rays[r].zeros, common)) adjacent = false;
        if (!adjacent) continue;
        IntVec w = primitive(val[p] * rays[m].v - val[m] * rays[p].v);
        next.push_back(Ray{w, common});
      }
    for (auto& r : next)
      if (dot(h, r.v) == 0) r.zeros[c / 64] |= std::uint64_t(1) << (c % 64);
    done.push_back(c);
    rays = std::move(next);
  }
  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Extreme rays and lineality space of {x : a_i . x >= 0}.
inline HCone h_cone_rays(const std::vector<IntVec>& a, std::size_t n) {
  HCone out;
  if (a.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, Int(0));
      e[i] = 1;
      out.lineality.push_back(e);
    }
    return out;
  }
  IntMatrix am = rows_to_matrix(a, n);
  IntMatrix ker = integer_kernel(am);
  for (std::size_t i = 0; i < ker.rows(); ++i) out.lineality.push_back(ker.row(i));
  if (ker.rows() == 0) {
    out.rays = detail::double_description(a, n);
    return out;
  }
  // restrict to the row space W: x = W^T y, constraints (A W^T) y >= 0 are pointed
  IntMatrix h = hermite_rows(am);
  const std::size_t k = h.rows();
  IntMatrix aw = am * h.transpose();
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < aw.rows(); ++i) rows.push_back(aw.row(i));
  for (const auto& y : detail::double_description(rows, k)) {
    IntVec x(n, Int(0));
    for (std::size_t j = 0; j < k; ++j) x = x + y[j] * h.row(j);
    out.rays.push_back(primitive(x));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

/// Cone given by extremal rays in a lattice; the dual is taken under the pairing.
struct ConeDescription {
  LatticePtr ambient;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

inline ConeDescription dual_cone(const ConeDescription& c) {
  const std::size_t n = c.ambient->rank();
  std::vector<IntVec> normals;
  for (const auto& r : c.rays) normals.push_back(c.ambient->gram() * r);
  for (const auto& l : c.lineality) {
    IntVec g = c.ambient->gram() * l;
    normals.push_back(g);
    normals.push_back(-g);
  }
  HCone h = h_cone_rays(normals, n);
  return ConeDescription{c.ambient, extremal_rays(h.rays), h.lineality};
}

}  // namespace lpm
