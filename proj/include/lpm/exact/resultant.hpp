#pragma once

#include <string>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/poly.hpp"

namespace lpm {

namespace detail {

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw AlgebraError("Bareiss step produced an inexact division");
  return *q;
}

}  // namespace detail

/// Sylvester matrix of f and g with respect to `var`; entries are polynomials
/// in the remaining variables.
inline Matrix<MultiPoly> sylvester_matrix(const MultiPoly& f0, const MultiPoly& g0, const std::string& var) {
  auto [f, g] = MultiPoly::unify(f0, g0);
  if (!f.has_var(var)) f = f.with_vars([&] { auto v = f.vars(); v.push_back(var); return v; }());
  if (!g.has_var(var)) g = g.with_vars(f.vars());
  const int m = f.degree(var), n = g.degree(var);
  auto fc = f.coefficients(var), gc = g.coefficients(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  MultiPoly zero(f.vars());
  Matrix<MultiPoly> s(size, size, zero);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + m - k)) = fc[static_cast<std::size_t>(k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + n - k)) = gc[static_cast<std::size_t>(k)];
  return s;
}

/// Resultant of f and g with respect to `var`, as the Sylvester determinant
/// computed by fraction-free Bareiss elimination.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) throw AlgebraError("resultant of the zero polynomial");
  if (f.degree(var) < 1 || g.degree(var) < 1)
    throw AlgebraError("resultant needs positive degree in " + var);
  auto s = sylvester_matrix(f, g, var);
  bool numeric = true;
  for (std::size_t i = 0; i < s.rows() && numeric; ++i)
    for (std::size_t j = 0; j < s.cols() && numeric; ++j) numeric = s(i, j).is_constant();
  MultiPoly det;
  if (numeric) {
    RatMatrix r(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) r(i, j) = s(i, j).constant_value();
    det = MultiPoly::constant(determinant(r), s(0, 0).vars());
  } else {
    det = bareiss_determinant(s, detail::exact_quotient);
  }
  std::vector<std::string> rest;
  for (const auto& v : det.vars())
    if (v != var) rest.push_back(v);
  return det.with_vars(rest);
}

/// Discriminant with the classical sign: (-1)^(n(n-1)/2) res(f, f') / lc(f).
inline MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
  const int n = f.degree(var);
  if (n < 1) throw AlgebraError("discriminant needs positive degree in " + var);
  std::vector<std::string> rest;
  for (const auto& v : f.vars())
    if (v != var) rest.push_back(v);
  MultiPoly lc = f.leading_coefficient_in(var).with_vars(rest);
  if (n == 1) return MultiPoly::constant(1, rest);
  MultiPoly r = resultant(f, f.derivative(var), var);
  auto q = divide_exact(r, lc);
  if (!q) throw AlgebraError("leading coefficient does not divide the resultant");
  return (n * (n - 1) / 2) % 2 ? -*q : *q;
}

}  // namespace lpm
