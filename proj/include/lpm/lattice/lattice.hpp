#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/number.hpp"
#include "lpm/lattice/enumerate.hpp"

namespace lpm {

/// Free abelian group with a symmetric integer pairing and named basis vectors.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  IntegralLattice(IntMatrix gram, std::vector<std::string> labels, std::string name = {})
      : gram_(std::move(gram)), labels_(std::move(labels)), name_(std::move(name)) {
    if (!gram_.is_symmetric()) throw AlgebraError("Gram matrix is not symmetric");
    if (labels_.empty())
      for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("b" + std::to_string(i + 1));
    if (labels_.size() != gram_.rows()) throw AlgebraError("label count differs from rank");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j]) throw AlgebraError("duplicate basis label " + labels_[i]);
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Int pair(const IntVec& u, const IntVec& v) const {
    if (u.size() != rank() || v.size() != rank()) throw AlgebraError("vector length differs from lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += u[i] * gram_(i, j) * v[j];
    }
    return s;
  }
  Int norm(const IntVec& v) const { return pair(v, v); }

  IntVec zero() const { return IntVec(rank(), Int(0)); }
  IntVec unit(std::size_t i) const {
    IntVec v = zero();
    v[i] = 1;
    return v;
  }
  IntVec unit(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw AlgebraError("unknown basis label " + label);
    return unit(static_cast<std::size_t>(it - labels_.begin()));
  }

  /// Pretty form such as "3l - e1 - e2".
  std::string format(const IntVec& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      Int c = abs(v[i]);
      std::string body = (c == 1 ? "" : c.get_str()) + labels_[i];
      if (out.empty()) out = v[i] < 0 ? "-" + body : body;
      else out += (v[i] < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
    return a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
  std::string name_;
};

using LatticePtr = std::shared_ptr<const IntegralLattice>;

inline LatticePtr share(IntegralLattice l) { return std::make_shared<const IntegralLattice>(std::move(l)); }

/// Integer coordinates relative to a lattice's basis.
struct LatticeVector {
  LatticePtr parent;
  IntVec coords;

  LatticeVector(LatticePtr p, IntVec c) : parent(std::move(p)), coords(std::move(c)) {
    if (!parent || coords.size() != parent->rank()) throw AlgebraError("coordinate length differs from lattice rank");
  }
  std::string str() const { return parent->format(coords); }
};

inline Int pairing(const LatticeVector& u, const LatticeVector& v) {
  if (u.parent != v.parent && !(*u.parent == *v.parent))
    throw AlgebraError("pairing of vectors from different lattices");
  return u.parent->pair(u.coords, v.coords);
}

/// Sublattice stored by an explicit basis in ambient coordinates.
class Sublattice {
 public:
  Sublattice(LatticePtr ambient, std::vector<IntVec> basis, bool saturated = false);

  const LatticePtr& ambient() const { return ambient_; }
  const std::vector<IntVec>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  bool saturated() const { return saturated_; }

  IntMatrix basis_matrix() const { return rows_to_matrix(basis_, ambient_->rank()); }

  /// Induced Gram matrix B G B^T.
  IntMatrix gram() const {
    IntMatrix g(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i; j < rank(); ++j) g(i, j) = g(j, i) = ambient_->pair(basis_[i], basis_[j]);
    return g;
  }

  IntegralLattice as_lattice(std::string name = {}) const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rank(); ++i) labels.push_back("v" + std::to_string(i + 1));
    return IntegralLattice(gram(), labels, std::move(name));
  }

  /// Integer coordinates of v in this basis, if v lies in the sublattice.
  std::optional<IntVec> coordinates(const IntVec& v) const {
    if (rank() == 0) return is_zero(v) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
    auto x = solve_row_combination(to_rational(basis_matrix()), RatVec(v.begin(), v.end()));
    if (!x) return std::nullopt;
    IntVec out;
    for (const auto& c : *x) {
      if (!is_integer(c)) return std::nullopt;
      out.push_back(c.get_num());
    }
    return out;
  }
  bool contains(const IntVec& v) const { return coordinates(v).has_value(); }

  /// True when both sublattices are the same subgroup.
  bool same_as(const Sublattice& o) const {
    if (o.rank() != rank()) return false;
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    for (const auto& v : basis_)
      if (!o.contains(v)) return false;
    return true;
  }

  std::vector<std::string> formatted() const {
    std::vector<std::string> out;
    for (const auto& v : basis_) out.push_back(ambient_->format(v));
    return out;
  }

 private:
  LatticePtr ambient_;
  std::vector<IntVec> basis_;
  bool saturated_;
};

/// Basis of the saturation of the row span of `b` (rank r rows).
inline std::vector<IntVec> saturated_basis(const IntMatrix& b) {
  if (b.rows() == 0) return {};
  auto snf = smith_normal_form(b);
  IntMatrix w = unimodular_inverse(snf.V);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < snf.rank; ++i) out.push_back(w.row(i));
  return out;
}

inline bool is_saturated_rows(const std::vector<IntVec>& basis, std::size_t n) {
  if (basis.empty()) return true;
  auto snf = smith_normal_form(rows_to_matrix(basis, n));
  if (snf.rank != basis.size()) return false;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) return false;
  return true;
}

inline Sublattice::Sublattice(LatticePtr ambient, std::vector<IntVec> basis, bool saturated)
    : ambient_(std::move(ambient)), basis_(std::move(basis)), saturated_(saturated) {
  for (const auto& v : basis_)
    if (v.size() != ambient_->rank()) throw AlgebraError("basis vector length differs from ambient rank");
  if (!basis_.empty() && lpm::rank(basis_matrix()) != basis_.size())
    throw AlgebraError("sublattice basis is not linearly independent");
  if (saturated_ && !is_saturated_rows(basis_, ambient_->rank()))
    throw AlgebraError("sublattice flagged saturated is not primitive");
}

/// Sublattice generated by arbitrary (possibly dependent) vectors.
inline Sublattice span(const LatticePtr& ambient, const std::vector<IntVec>& gens) {
  if (gens.empty()) return Sublattice(ambient, {}, true);
  IntMatrix h = hermite_rows(rows_to_matrix(gens, ambient->rank()));
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
  bool sat = is_saturated_rows(basis, ambient->rank());
  return Sublattice(ambient, std::move(basis), sat);
}

inline Sublattice saturation(const Sublattice& s) {
  if (s.saturated()) return s;
  return Sublattice(s.ambient(), saturated_basis(s.basis_matrix()), true);
}

/// Short basis of the same group: LLL under the coordinate dot product, then
/// each vector signed so its first nonzero entry is positive.
inline std::vector<IntVec> reduce_basis(const std::vector<IntVec>& basis, std::size_t n) {
  if (basis.empty()) return basis;
  IntMatrix b = rows_to_matrix(basis, n);
  IntMatrix u = lll_reduce(b * b.transpose());
  IntMatrix r = u * b;
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    IntVec v = r.row(i);
    for (const auto& x : v)
      if (x != 0) {
        if (x < 0) v = -v;
        break;
      }
    out.push_back(v);
  }
  return out;
}

/// {v : v.s = 0 for all s in S}, saturated.
inline Sublattice orthogonal_complement(const LatticePtr& ambient, const Sublattice& s) {
  const std::size_t n = ambient->rank();
  if (s.rank() == 0) {
    std::vector<IntVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(ambient->unit(i));
    return Sublattice(ambient, all, true);
  }
  IntMatrix bg = s.basis_matrix() * ambient->gram();
  IntMatrix k = integer_kernel(bg);
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < k.rows(); ++i) basis.push_back(k.row(i));
  return Sublattice(ambient, reduce_basis(basis, n), true);
}

/// Radical R of the pairing together with a complement C: the rows of R then C
/// form a basis of the lattice, and the quotient Gram is the Gram of C.
struct RadicalQuotient {
  Sublattice radical;
  IntegralLattice quotient;
  std::vector<IntVec> complement;  // lifts of the quotient basis
  IntMatrix projection;            // ambient coords (row) * projection = quotient coords
};

inline RadicalQuotient radical_and_quotient(const LatticePtr& l) {
  const std::size_t n = l->rank();
  IntMatrix k = integer_kernel(l->gram());
  std::vector<IntVec> rad;
  for (std::size_t i = 0; i < k.rows(); ++i) rad.push_back(k.row(i));
  if (!rad.empty()) {
    IntMatrix h = hermite_rows(rows_to_matrix(rad, n));
    rad.clear();
    for (std::size_t i = 0; i < h.rows(); ++i) rad.push_back(h.row(i));
  }
  Sublattice radical(l, rad, true);
  std::vector<IntVec> comp;
  IntMatrix proj;
  if (rad.empty()) {
    for (std::size_t i = 0; i < n; ++i) comp.push_back(l->unit(i));
    proj = IntMatrix::identity(n);
  } else {
    auto snf = smith_normal_form(rows_to_matrix(rad, n));
    IntMatrix w = unimodular_inverse(snf.V);  // rows: radical span first, then complement
    for (std::size_t i = rad.size(); i < n; ++i) comp.push_back(w.row(i));
    proj = snf.V.col_block(rad.size(), n);
  }
  IntMatrix g(comp.size(), comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j) g(i, j) = l->pair(comp[i], comp[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < comp.size(); ++i) labels.push_back("q" + std::to_string(i + 1));
  return RadicalQuotient{radical, IntegralLattice(g, labels, l->name().empty() ? "" : l->name() + "/rad"),
                         comp, proj};
}

/// Signature (positive, negative, zero) by symmetric Gaussian elimination over Q.
inline std::tuple<std::size_t, std::size_t, std::size_t> signature(const IntMatrix& gram) {
  RatMatrix a = to_rational(gram);
  const std::size_t n = a.rows();
  std::size_t pos = 0, neg = 0;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // no diagonal pivot: combine two coordinates with a nonzero off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    a.swap_rows(k, p);
    a.swap_cols(k, p);
    Rat piv = a(k, k);
    (piv > 0 ? pos : neg) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / piv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return {pos, neg, n - pos - neg};
}

inline bool is_negative_definite(const IntMatrix& g) {
  auto [p, m, z] = signature(g);
  return p == 0 && z == 0;
}
inline bool is_negative_semidefinite(const IntMatrix& g) {
  auto [p, m, z] = signature(g);
  (void)m;
  (void)z;
  return p == 0;
}

// ---- named lattices -------------------------------------------------------

/// I(1,n): basis l, e1..en with l^2 = 1, ei^2 = -1.
inline IntegralLattice odd_unimodular(std::size_t n) {
  IntMatrix g(n + 1, n + 1);
  std::vector<std::string> labels{"l"};
  g(0, 0) = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    g(i, i) = -1;
    labels.push_back("e" + std::to_string(i));
  }
  return IntegralLattice(g, labels, "I(1," + std::to_string(n) + ")");
}

/// II(1,1): basis a, b with a^2 = b^2 = 0, a.b = 1.
inline IntegralLattice hyperbolic_plane() {
  IntMatrix g{{0, 1}, {1, 0}};
  return IntegralLattice(g, {"a", "b"}, "II(1,1)");
}

}  // namespace lpm
