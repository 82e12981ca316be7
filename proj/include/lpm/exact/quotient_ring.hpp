#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/poly.hpp"

namespace lpm {

/// Thrown when a computation over a product of fields meets a zero divisor.
/// `factor` is a monic proper divisor of the modulus at `level`; callers
/// restart on the two factors (dynamic evaluation).
struct ZeroDivisorSplit {
  std::size_t level;
  MultiPoly factor;
};

/// Triangular set m_0(x_0), m_1(x_0, x_1), ... with each m_k monic in x_k and
/// squarefree over the previous levels. Elements are polynomials reduced
/// modulo every level; the ring is a product of number fields.
class Tower {
 public:
  Tower() = default;

  std::size_t levels() const { return mods_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MultiPoly& modulus(std::size_t k) const { return mods_[k]; }
  int degree(std::size_t k) const { return mods_[k].degree(vars_[k]); }

  /// Dimension over Q.
  long dimension() const {
    long d = 1;
    for (std::size_t k = 0; k < levels(); ++k) d *= degree(k);
    return d;
  }

  /// Adds a level; `poly` must be monic of positive degree in `var` over this tower.
  Tower extend(const std::string& var, const MultiPoly& poly) const {
    if (poly.degree(var) < 1) throw AlgebraError("tower level needs positive degree in " + var);
    Tower t(*this);
    t.vars_.push_back(var);
    t.mods_.push_back(reduce(poly));
    return t;
  }

  Tower prefix(std::size_t k) const {
    Tower t;
    t.vars_.assign(vars_.begin(), vars_.begin() + static_cast<long>(k));
    t.mods_.assign(mods_.begin(), mods_.begin() + static_cast<long>(k));
    return t;
  }

  /// The two towers obtained by replacing the modulus at `s.level` by the
  /// factor and by its cofactor.
  std::pair<Tower, Tower> split(const ZeroDivisorSplit& s) const {
    const std::size_t k = s.level;
    Tower low = prefix(k);
    MultiPoly f = low.monic_in(s.factor, vars_[k]);
    MultiPoly cof = low.divmod_in(mods_[k], f, vars_[k]).first;
    cof = low.monic_in(cof, vars_[k]);
    auto rebuild = [&](const MultiPoly& m) {
      Tower t = low.extend(vars_[k], m);
      for (std::size_t j = k + 1; j < levels(); ++j) t = t.extend(vars_[j], mods_[j]);
      return t;
    };
    return {rebuild(f), rebuild(cof)};
  }

  /// Normal form modulo the triangular set (top level first).
  MultiPoly reduce(MultiPoly p) const {
    for (std::size_t k = levels(); k-- > 0;) p = reduce_level(std::move(p), k);
    return p;
  }

  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return reduce(a * b); }

  /// Exact zero test; a nonzero zero divisor raises ZeroDivisorSplit.
  bool is_zero(const MultiPoly& e) const {
    MultiPoly r = reduce(e);
    if (r.is_zero()) return true;
    inverse(r);
    return false;
  }

  MultiPoly inverse(const MultiPoly& e) const { return inverse_at(reduce(e), static_cast<long>(levels()) - 1); }

  /// Makes a polynomial in `v` (a variable outside the tower) monic; zero stays zero.
  MultiPoly monic_in(const MultiPoly& p0, const std::string& v) const {
    MultiPoly p = reduce(p0);
    if (p.is_zero()) return p;
    MultiPoly lc = p.leading_coefficient_in(v);
    return reduce(p * inverse(lc));
  }

  /// Division by a polynomial monic in `v`.
  std::pair<MultiPoly, MultiPoly> divmod_in(const MultiPoly& a, const MultiPoly& b, const std::string& v) const {
    const int db = b.degree(v);
    MultiPoly r = reduce(a);
    MultiPoly q(r.vars());
    MultiPoly xv = MultiPoly::variable(v, r.vars());
    while (!r.is_zero() && r.degree(v) >= db) {
      MultiPoly t = r.leading_coefficient_in(v) * xv.pow(static_cast<unsigned>(r.degree(v) - db));
      q = q + t;
      r = reduce(r - t * b);
    }
    return {q, r};
  }

  /// Monic gcd in `v` over the tower.
  MultiPoly gcd_in(const MultiPoly& a0, const MultiPoly& b0, const std::string& v) const {
    MultiPoly a = monic_in(a0, v), b = monic_in(b0, v);
    if (a.is_zero()) return b;
    while (!b.is_zero()) {
      MultiPoly r = divmod_in(a, b, v).second;
      a = std::move(b);
      b = monic_in(r, v);
    }
    return a;
  }

  MultiPoly squarefree_in(const MultiPoly& p0, const std::string& v) const {
    MultiPoly p = monic_in(p0, v);
    if (p.degree(v) < 1) return p;
    MultiPoly g = gcd_in(p, p.derivative(v), v);
    return monic_in(divmod_in(p, g, v).first, v);
  }

 private:
  MultiPoly reduce_level(MultiPoly p, std::size_t k) const {
    const std::string& v = vars_[k];
    const MultiPoly& m = mods_[k];
    const int dm = m.degree(v);
    if (p.degree(v) < dm) return p;
    MultiPoly xv = MultiPoly::variable(v, p.vars());
    while (!p.is_zero() && p.degree(v) >= dm) {
      MultiPoly t = p.leading_coefficient_in(v) * xv.pow(static_cast<unsigned>(p.degree(v) - dm));
      p = p - t * m;
    }
    return p;
  }

  /// Inverse of a reduced element that involves levels 0..k only.
  MultiPoly inverse_at(MultiPoly e, long k) const {
    while (k >= 0 && !e.depends_on(vars_[static_cast<std::size_t>(k)])) --k;
    if (k < 0) {
      if (e.is_zero()) throw AlgebraError("division by zero in a quotient ring");
      return MultiPoly::constant(Rat(1 / e.constant_value()), e.vars());
    }
    const std::size_t lvl = static_cast<std::size_t>(k);
    const std::string& v = vars_[lvl];
    Tower low = prefix(lvl);
    // extended Euclid on (m_k, e) over the lower levels: s1 * e == r1 (mod m_k)
    MultiPoly r0 = mods_[lvl], r1 = low.monic_in(e, v);
    MultiPoly s0 = MultiPoly::constant(0, e.vars());
    MultiPoly s1 = low.reduce(low.inverse(e.leading_coefficient_in(v)));
    while (!r1.is_zero()) {
      auto [q, r] = low.divmod_in(r0, r1, v);
      MultiPoly s2 = low.reduce(s0 - q * s1);
      r0 = std::move(r1);
      s0 = std::move(s1);
      if (r.is_zero()) {
        r1 = r;
        break;
      }
      MultiPoly inv = low.inverse(r.leading_coefficient_in(v));
      r1 = low.reduce(r * inv);
      s1 = low.reduce(s2 * inv);
    }
    if (r0.degree(v) > 0) throw ZeroDivisorSplit{lvl, r0};
    return reduce(s0);
  }

  std::vector<std::string> vars_;
  std::vector<MultiPoly> mods_;
};

/// Element of Q[t]/(m(t)) for a monic univariate modulus m.
class QuotientRingElement {
 public:
  QuotientRingElement(const MultiPoly& modulus, const MultiPoly& rep) {
    auto used = modulus.used_vars();
    if (used.size() != 1) throw AlgebraError("quotient ring modulus must be univariate");
    var_ = used[0];
    MultiPoly m = modulus.with_vars({var_});
    ring_ = Tower().extend(var_, m.monic());
    rep_ = ring_.reduce(rep.with_vars({var_}));
  }

  const MultiPoly& representative() const { return rep_; }
  MultiPoly modulus() const { return ring_.modulus(0); }
  bool is_zero() const { return rep_.is_zero(); }

  /// Inverse; a zero-divisor representative raises ZeroDivisorSplit.
  QuotientRingElement inverse() const { return with(ring_.inverse(rep_)); }

  friend QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a.with(a.rep_ + b.rep_);
  }
  friend QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a.with(a.rep_ - b.rep_);
  }
  friend QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a.with(a.ring_.mul(a.rep_, b.rep_));
  }
  friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a.rep_ == b.rep_ && a.modulus() == b.modulus();
  }

 private:
  QuotientRingElement with(const MultiPoly& rep) const {
    QuotientRingElement e(*this);
    e.rep_ = ring_.reduce(rep.with_vars({var_}));
    return e;
  }

  std::string var_;
  Tower ring_;
  MultiPoly rep_;
};

}  // namespace lpm
