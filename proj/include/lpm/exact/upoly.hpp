#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/number.hpp"
#include "lpm/exact/poly.hpp"

namespace lpm {

/// Dense univariate polynomial over Q; c[k] is the coefficient of x^k and the
/// top coefficient is nonzero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Rat& v) { return UPoly(std::vector<Rat>{v}); }
  static UPoly x() { return UPoly(std::vector<Rat>{0, 1}); }

  static UPoly from_multi(const MultiPoly& p, const std::string& var) {
    auto used = p.used_vars();
    if (used.size() > 1 || (used.size() == 1 && used[0] != var))
      throw AlgebraError("polynomial is not univariate in " + var + ": " + p.str());
    if (p.is_zero()) return UPoly();
    if (!p.has_var(var)) return constant(p.constant_value());
    auto cs = p.coefficients(var);
    std::vector<Rat> c;
    c.reserve(cs.size());
    for (const auto& k : cs) c.push_back(k.is_zero() ? Rat(0) : k.constant_value());
    return UPoly(std::move(c));
  }

  MultiPoly to_multi(const std::string& var) const {
    std::vector<MultiPoly::Term> terms;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) terms.push_back({{static_cast<int>(k)}, c_[k]});
    return MultiPoly::from_terms({var}, std::move(terms));
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
  Rat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  Rat eval(const Rat& v) const {
    Rat acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * v + c_[k];
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    UPoly r(*this);
    Rat inv = 1 / c_.back();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  /// Integer primitive part with positive leading coefficient.
  UPoly primitive() const {
    if (c_.empty()) return *this;
    return UPoly::from_multi(to_multi("x").primitive_part(), "x");
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * Rat(-1); }
  friend UPoly operator*(const UPoly& a, const Rat& s) {
    std::vector<Rat> r(a.c_);
    for (auto& v : r) v *= s;
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw AlgebraError("polynomial division by zero");
    std::vector<Rat> r(a.c_);
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
    Rat inv = 1 / b.lc();
    for (int k = a.degree(); k >= b.degree(); --k) {
      Rat f = r[static_cast<std::size_t>(k)] * inv;
      if (f == 0) continue;
      std::size_t shift = static_cast<std::size_t>(k - b.degree());
      q[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[shift + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Monic gcd (zero iff both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
    return q;
  }

  UPoly squarefree_part() const {
    if (degree() < 1) return monic();
    return exact_div(*this, gcd(*this, derivative())).monic();
  }

  /// Rational roots, ascending, by the rational root test on the primitive part.
  std::vector<Rat> rational_roots() const;

  std::string str(const std::string& var = "t") const { return to_multi(var).str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Yun's algorithm: monic pairwise coprime squarefree factors with multiplicities,
/// ascending by multiplicity.
inline std::vector<std::pair<UPoly, int>> yun(const UPoly& f) {
  if (f.degree() < 1) throw AlgebraError("squarefree decomposition of a constant");
  std::vector<std::pair<UPoly, int>> out;
  UPoly fp = f.derivative();
  UPoly a = UPoly::gcd(f, fp);
  UPoly b = UPoly::exact_div(f, a);
  UPoly c = UPoly::exact_div(fp, a);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = UPoly::gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = UPoly::exact_div(b, a);
    c = UPoly::exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

inline std::vector<Rat> UPoly::rational_roots() const {
  std::vector<Rat> roots;
  if (degree() < 1) return roots;
  UPoly p = squarefree_part().primitive();
  // strip zero roots
  std::size_t z = 0;
  while (z < p.c_.size() && p.c_[z] == 0) ++z;
  if (z > 0) {
    roots.push_back(Rat(0));
    p = UPoly(std::vector<Rat>(p.c_.begin() + static_cast<long>(z), p.c_.end()));
  }
  if (p.degree() >= 1) {
    Int a0 = abs(p.c_.front().get_num()), an = abs(p.c_.back().get_num());
    auto divisors = [](const Int& n) {
      std::vector<Int> ds;
      for (Int k = 1; k * k <= n; ++k)
        if (n % k == 0) {
          ds.push_back(k);
          if (k * k != n) ds.push_back(Int(n / k));
        }
      return ds;
    };
    // the factor search is only used on small fiber polynomials
    for (const Int& num : divisors(a0))
      for (const Int& den : divisors(an))
        for (int sign : {1, -1}) {
          Rat r(num * sign, den);
          r.canonicalize();
          if (p.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Squarefree decomposition of a univariate polynomial. Factors are integer
/// primitive with positive leading coefficient, ordered by ascending
/// multiplicity and then by canonical term order.
inline std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& f) {
  auto used = f.used_vars();
  if (f.is_zero() || used.empty()) throw AlgebraError("squarefree decomposition of a constant");
  if (used.size() > 1) throw AlgebraError("squarefree decomposition needs a univariate input: " + f.str());
  const std::string var = used[0];
  std::vector<std::pair<MultiPoly, int>> out;
  for (auto& [g, m] : yun(UPoly::from_multi(f, var))) out.emplace_back(g.to_multi(var).primitive_part(), m);
  return out;
}

}  // namespace lpm
