#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/number.hpp"

namespace lpm {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw AlgebraError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw AlgebraError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Rows [r0, r1) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t r1) const {
    Matrix m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
    return m;
  }

  Matrix col_block(std::size_t c0, std::size_t c1) const {
    Matrix m(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = c0; j < c1; ++j) m(i, j - c0) = (*this)(i, j);
    return m;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& v : m.data_) v = -v;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix shape mismatch in +");
    Matrix m(a);
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch in *");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw AlgebraError("matrix-vector shape mismatch");
    std::vector<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

/// Converts a rational matrix with integral entries; throws otherwise.
inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw AlgebraError("matrix entry is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

inline IntMatrix rows_to_matrix(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

inline bool is_zero_scalar(const Int& v) { return v == 0; }
inline bool is_zero_scalar(const Rat& v) { return v == 0; }
inline Int one_like(const Int&) { return Int(1); }
inline Rat one_like(const Rat&) { return Rat(1); }

/// Fraction-free Bareiss determinant over an exact commutative ring; the
/// divisions by the previous pivot are exact and go through `divide_exact`.
template <typename T, typename DivideExact>
T bareiss_determinant(Matrix<T> m, DivideExact divide_exact) {
  if (!m.square()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw AlgebraError("determinant of an empty matrix");
  T prev = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_scalar(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero_scalar(m(p, k))) ++p;
      if (p == n) return m(k, k);  // zero of the right shape
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev);
      }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

inline Int determinant(const IntMatrix& m) {
  if (m.rows() == 0 && m.cols() == 0) return Int(1);
  return bareiss_determinant(m, [](const Int& a, const Int& b) { return Int(a / b); });
}

inline Rat determinant(const RatMatrix& m) {
  if (m.rows() == 0 && m.cols() == 0) return Rat(1);
  return bareiss_determinant(m, [](const Rat& a, const Rat& b) { return Rat(a / b); });
}

/// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const RatMatrix& m) {
  RatMatrix c(m);
  return rref(c).size();
}

inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw AlgebraError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.col_block(n, 2 * n);
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rational(m));
  if (!inv) throw AlgebraError("matrix is singular");
  return to_integer(*inv);
}

/// Solves x * A = b for a row vector x (A given by rows); nullopt if inconsistent.
inline std::optional<RatVec> solve_row_combination(const RatMatrix& rows, const RatVec& target) {
  const std::size_t k = rows.rows(), n = rows.cols();
  RatMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = rows(i, j);
    aug(j, k) = target[j];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  RatVec x(k, Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, k);
  return x;
}

/// Smith normal form: U * A * V = S with U, V unimodular and
/// S = diag(d1, d2, ...) where d1 | d2 | ... and all d_i >= 0.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix s(a), u = IntMatrix::identity(m), v = IntMatrix::identity(n);

  auto row_op = [&](std::size_t target, std::size_t src, const Int& q) {  // row_t -= q row_s
    for (std::size_t j = 0; j < n; ++j) s(target, j) -= q * s(src, j);
    for (std::size_t j = 0; j < m; ++j) u(target, j) -= q * u(src, j);
  };
  auto col_op = [&](std::size_t target, std::size_t src, const Int& q) {  // col_t -= q col_s
    for (std::size_t i = 0; i < m; ++i) s(i, target) -= q * s(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, target) -= q * v(i, src);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    s.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    s.swap_cols(x, y);
    v.swap_cols(x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry in the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (!found || abs(s(i, j)) < best)) {
          found = true;
          best = abs(s(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_r(t, pi);
    swap_c(t, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        row_op(i, t, q);
        if (s(i, t) != 0) {
          swap_r(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        col_op(j, t, q);
        if (s(t, j) != 0) {
          swap_c(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_op(t, i, Int(-1));  // row_t += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(s), std::move(u), std::move(v), t};
}

/// Basis (as rows) of the integer kernel {x : A x = 0}; always saturated.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix k(n - snf.rank, n);
  for (std::size_t j = snf.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(j - snf.rank, i) = snf.V(i, j);
  return k;
}

/// Hermite normal form of the row lattice (rows spanning the same Z-module,
/// echelon, positive pivots, reduced above pivots). Zero rows are dropped.
inline IntMatrix hermite_rows(const IntMatrix& a) {
  IntMatrix h(a);
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        for (std::size_t j = 0; j < n; ++j) h(i, j) -= q * h(r, j);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && h(r, c) != 0) {
      if (h(r, c) < 0)
        for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(h(i, c), h(r, c));
        if (q != 0)
          for (std::size_t j = 0; j < n; ++j) h(i, j) -= q * h(r, j);
      }
      ++r;
    }
  }
  return h.row_block(0, r);
}

}  // namespace lpm
