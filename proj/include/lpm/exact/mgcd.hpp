#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/poly.hpp"

namespace lpm {

namespace detail {

inline std::string main_var(const MultiPoly& a, const MultiPoly& b) {
  for (const auto& v : a.vars())
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return {};
}

/// Pseudo-remainder of a by b in `v`.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, const std::string& v) {
  const int db = b.degree(v);
  MultiPoly lb = b.leading_coefficient_in(v);
  MultiPoly xv = MultiPoly::variable(v, a.vars());
  while (!a.is_zero() && a.degree(v) >= db) {
    MultiPoly la = a.leading_coefficient_in(v);
    a = lb * a - la * xv.pow(static_cast<unsigned>(a.degree(v) - db)) * b;
  }
  return a;
}

}  // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
inline MultiPoly content_in(const MultiPoly& p, const std::string& v) {
  MultiPoly g(p.vars());
  for (const auto& c : p.coefficients(v)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

inline MultiPoly primitive_in(const MultiPoly& p, const std::string& v) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, v));
  return *q;
}

/// Multivariate gcd over Q by recursive primitive remainder sequences; the
/// result is integer primitive with positive leading coefficient (zero iff
/// both inputs are zero).
inline MultiPoly poly_gcd(const MultiPoly& a0, const MultiPoly& b0) {
  auto [a, b] = MultiPoly::unify(a0, b0);
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  const std::string v = detail::main_var(a, b);
  if (v.empty()) return MultiPoly::constant(1, a.vars());
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree(v) > 0) {
    MultiPoly r = detail::pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_in(r, v);
  }
  MultiPoly g = pb.is_zero() ? pa : MultiPoly::constant(1, a.vars());
  return (c * g).primitive_part();
}

/// Squarefree part: f / gcd(f, df/dv for every v).
inline MultiPoly squarefree_part(const MultiPoly& f) {
  if (f.is_zero() || f.is_constant()) return f.primitive_part();
  MultiPoly g = f;
  for (const auto& v : f.used_vars()) g = poly_gcd(g, f.derivative(v));
  return divide_exact(f, g)->primitive_part();
}

/// Splits f = m * rest where m is the largest monomial dividing f; returns the
/// exponent of each variable in m and the cofactor.
inline std::pair<std::vector<int>, MultiPoly> split_monomial(const MultiPoly& f) {
  std::vector<int> e(f.vars().size(), 0);
  if (f.is_zero()) return {e, f};
  for (std::size_t i = 0; i < e.size(); ++i) {
    int lo = f.terms().front().exps[i];
    for (const auto& t : f.terms()) lo = std::min(lo, t.exps[i]);
    e[i] = lo;
  }
  std::vector<MultiPoly::Term> terms;
  for (auto t : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) t.exps[i] -= e[i];
    terms.push_back(std::move(t));
  }
  return {e, MultiPoly::from_terms(f.vars(), std::move(terms))};
}

}  // namespace lpm
