#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/number.hpp"

namespace lpm {

/// Exact LDL^T of a positive definite rational matrix: q(v) = sum_i d_i (v_i + sum_{j>i} mu(j,i) v_j)^2.
struct LdlForm {
  RatMatrix mu;  // mu(j, i) for j > i
  RatVec d;
};

inline LdlForm ldl_decompose(const RatMatrix& q) {
  const std::size_t n = q.rows();
  RatMatrix l = RatMatrix::identity(n);
  RatVec d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = q(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[k];
    if (s <= 0) throw AlgebraError("form is not positive definite");
    d[j] = s;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat t = q(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[k];
      l(i, j) = t / d[j];
    }
  }
  return {std::move(l), std::move(d)};
}

namespace detail {

/// Smallest and largest integers k with (k - c)^2 <= x; empty when lo > hi.
inline std::pair<Int, Int> integer_window(const Rat& c, const Rat& x) {
  if (x < 0) return {Int(1), Int(0)};
  Int fx = floor_of(x);
  Int s;
  mpz_sqrt(s.get_mpz_t(), fx.get_mpz_t());
  auto inside = [&](const Int& k) {
    Rat diff = Rat(k) - c;
    return diff * diff <= x;
  };
  Int hi = floor_of(c) + s + 2;
  while (!inside(hi) && Rat(hi) > c) hi -= 1;
  Int lo = ceil_of(c) - s - 2;
  while (!inside(lo) && Rat(lo) < c) lo += 1;
  if (!inside(hi) || !inside(lo)) return {Int(1), Int(0)};
  return {lo, hi};
}

}  // namespace detail

/// Fincke-Pohst enumeration of every integer vector v with v^T Q v <= bound
/// for a positive definite Q. The callback receives (v, q(v)); the zero vector
/// is skipped unless `include_zero`.
inline void for_each_short_vector(const RatMatrix& q, const Rat& bound,
                                  const std::function<void(const IntVec&, const Rat&)>& f,
                                  bool include_zero = false) {
  const std::size_t n = q.rows();
  if (n == 0) {
    if (include_zero) f(IntVec{}, Rat(0));
    return;
  }
  LdlForm ldl = ldl_decompose(q);
  IntVec v(n, Int(0));
  std::vector<Rat> remaining(n + 1);
  remaining[n] = bound;
  // recursive descent from the last coordinate down
  std::function<void(std::size_t)> descend = [&](std::size_t idx) {
    const std::size_t i = idx - 1;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= ldl.mu(j, i) * v[j];
    Rat budget = remaining[i + 1] / ldl.d[i];
    auto [lo, hi] = detail::integer_window(c, budget);
    for (Int k = lo; k <= hi; ++k) {
      v[i] = k;
      Rat diff = Rat(k) - c;
      remaining[i] = remaining[i + 1] - ldl.d[i] * diff * diff;
      if (i == 0) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (!zero || include_zero) f(v, bound - remaining[0]);
      } else {
        descend(i);
      }
    }
    v[i] = 0;
  };
  descend(n);
}

/// All vectors with q(v) <= bound, sorted lexicographically.
inline std::vector<IntVec> short_vectors(const RatMatrix& q, const Rat& bound) {
  std::vector<IntVec> out;
  for_each_short_vector(q, bound, [&](const IntVec& v, const Rat&) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

/// All vectors with q(v) == value, sorted lexicographically.
inline std::vector<IntVec> vectors_of_norm(const IntMatrix& q, const Int& value) {
  std::vector<IntVec> out;
  for_each_short_vector(to_rational(q), Rat(value), [&](const IntVec& v, const Rat& nv) {
    if (nv == value) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// LLL reduction (delta = 3/4) of the standard basis under a positive definite
/// integer Gram matrix. Returns a unimodular U whose rows are the reduced basis.
inline IntMatrix lll_reduce(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix u = IntMatrix::identity(n);
  if (n <= 1) return u;
  auto inner = [&](std::size_t i, std::size_t j) {
    Int s = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (u(i, a) == 0) continue;
      for (std::size_t b = 0; b < n; ++b) s += u(i, a) * gram(a, b) * u(j, b);
    }
    return Rat(s);
  };
  const Rat delta(3, 4);
  RatMatrix mu(n, n);
  RatVec bstar(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rat s = inner(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * bstar[k];
        mu(i, j) = s / bstar[j];
      }
      Rat s = inner(i, i);
      for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
      bstar[i] = s;
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Rat m = mu(k, j);
      Int r = floor_of(m + Rat(1, 2));
      if (r != 0) {
        for (std::size_t a = 0; a < n; ++a) u(k, a) -= r * u(j, a);
        gram_schmidt();
      }
    }
    if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      ++k;
    } else {
      u.swap_rows(k, k - 1);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

}  // namespace lpm
