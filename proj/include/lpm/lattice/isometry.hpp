#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lpm/lattice/enumerate.hpp"
#include "lpm/lattice/lattice.hpp"

namespace lpm {

namespace detail {

/// Isometry between positive definite Gram matrices: T with T^T G2 T = G1.
inline std::optional<IntMatrix> definite_isometry(const IntMatrix& g1, const IntMatrix& g2) {
  const std::size_t n = g1.rows();
  if (n == 0) return IntMatrix(0, 0);
  if (determinant(g1) != determinant(g2)) return std::nullopt;
  IntMatrix u = lll_reduce(g1);
  IntMatrix b1 = u * g1 * u.transpose();
  Int maxnorm = 0;
  for (std::size_t i = 0; i < n; ++i) maxnorm = std::max(maxnorm, b1(i, i));
  std::map<Int, std::vector<IntVec>> by_norm;
  for_each_short_vector(to_rational(g2), Rat(maxnorm), [&](const IntVec& v, const Rat& q) {
    by_norm[q.get_num()].push_back(v);
  });
  for (auto& [k, vs] : by_norm) std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < n; ++i)
    if (by_norm[b1(i, i)].empty()) return std::nullopt;

  auto pair2 = [&](const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < n; ++b) s += x[a] * g2(a, b) * y[b];
    }
    return s;
  };
  std::vector<IntVec> images(n);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (const auto& y : by_norm[b1(i, i)]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = pair2(y, images[j]) == b1(i, j);
      if (!ok) continue;
      images[i] = y;
      if (place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  IntMatrix y = rows_to_matrix(images, n);
  IntMatrix rows = unimodular_inverse(u) * y;  // row i: image of the i-th original basis vector
  IntMatrix t = rows.transpose();
  if (!(t.transpose() * g2 * t == g1)) throw AlgebraError("isometry search produced an invalid map");
  return t;
}

/// Rank-2 unimodular indefinite case, decided by parity; T found by a box search.
inline std::optional<IntMatrix> hyperbolic_rank2_isometry(const IntMatrix& g1, const IntMatrix& g2) {
  auto even = [](const IntMatrix& g) { return g(0, 0) % 2 == 0 && g(1, 1) % 2 == 0; };
  if (even(g1) != even(g2)) return std::nullopt;
  auto pair2 = [&](long a0, long a1, long b0, long b1) -> Int {
    return Int(a0 * b0) * g2(0, 0) + Int(a0 * b1 + a1 * b0) * g2(0, 1) + Int(a1 * b1) * g2(1, 1);
  };
  for (long box = 1; box <= 16; box *= 2)
    for (long p = -box; p <= box; ++p)
      for (long q = -box; q <= box; ++q) {
        if (pair2(p, q, p, q) != g1(0, 0)) continue;
        for (long r = -box; r <= box; ++r)
          for (long s = -box; s <= box; ++s) {
            if (p * s - q * r != 1 && p * s - q * r != -1) continue;
            if (pair2(r, s, r, s) != g1(1, 1) || pair2(p, q, r, s) != g1(0, 1)) continue;
            IntMatrix t(2, 2);
            t(0, 0) = p;
            t(1, 0) = q;
            t(0, 1) = r;
            t(1, 1) = s;
            return t;
          }
      }
  throw AlgebraError("rank-2 isometry search exhausted its box");
}

}  // namespace detail

/// Decides whether two lattices are isometric. On success returns T whose
/// columns are the images of the basis of `a` in coordinates of `b`, so that
/// T^T G_b T = G_a. Degenerate inputs are reduced modulo the radical first.
inline std::optional<IntMatrix> is_isometric(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank();
  if (b.rank() != n) return std::nullopt;
  auto sa = signature(a.gram()), sb = signature(b.gram());
  if (sa != sb) return std::nullopt;
  auto [pos, neg, zero] = sa;
  if (n == 0) return IntMatrix(0, 0);
  if (pos > 0 && neg > 0) {
    if (n == 2 && zero == 0 && abs(determinant(a.gram())) == 1)
      return detail::hyperbolic_rank2_isometry(a.gram(), b.gram());
    throw AlgebraError("isometry testing of indefinite lattices is limited to unimodular rank 2");
  }
  const bool negate = neg > 0;
  if (zero == 0) return detail::definite_isometry(negate ? IntMatrix(-a.gram()) : a.gram(),
                                                  negate ? IntMatrix(-b.gram()) : b.gram());
  // semidefinite: L = R + C with C a complement of the radical
  auto ra = radical_and_quotient(share(a)), rb = radical_and_quotient(share(b));
  const IntMatrix& qa = ra.quotient.gram();
  const IntMatrix& qb = rb.quotient.gram();
  auto tq = detail::definite_isometry(negate ? IntMatrix(-qa) : qa, negate ? IntMatrix(-qb) : qb);
  if (!tq) return std::nullopt;
  const std::size_t r = ra.radical.rank();
  auto basis_rows = [&](const RadicalQuotient& rq) {
    std::vector<IntVec> rows = rq.radical.basis();
    rows.insert(rows.end(), rq.complement.begin(), rq.complement.end());
    return rows_to_matrix(rows, n);
  };
  IntMatrix w1 = basis_rows(ra), w2 = basis_rows(rb);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < n - r; ++j) m(r + i, r + j) = (*tq)(i, j);
  IntMatrix t = w2.transpose() * m * unimodular_inverse(w1.transpose());
  if (!(t.transpose() * b.gram() * t == a.gram())) throw AlgebraError("lifted isometry is invalid");
  return t;
}

}  // namespace lpm
