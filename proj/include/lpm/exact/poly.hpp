#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/number.hpp"

namespace lpm {

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted in descending graded lexicographic order with respect
/// to the declared variable order and never carry a zero coefficient, so two
/// polynomials over the same variable list are equal iff their term vectors are.
class MultiPoly {
 public:
  using Exps = std::vector<int>;
  struct Term {
    Exps exps;
    Rat coef;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_vars(); }

  static MultiPoly constant(const Rat& c, std::vector<std::string> vars = {}) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({Exps(p.vars_.size(), 0), c});
    return p;
  }

  /// The polynomial `name`; the variable is appended to `vars` if absent.
  static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {}) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    MultiPoly p(std::move(vars));
    Exps e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_.push_back({std::move(e), Rat(1)});
    return p;
  }

  static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    MultiPoly p(std::move(vars));
    for (const auto& t : terms)
      if (t.exps.size() != p.vars_.size()) throw AlgebraError("exponent length mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exps) == 0);
  }
  Rat constant_value() const {
    if (!is_constant()) throw AlgebraError("polynomial is not constant: " + str());
    return terms_.empty() ? Rat(0) : terms_[0].coef;
  }
  /// Coefficient of the leading term in the canonical order.
  Rat leading_coefficient() const { return terms_.empty() ? Rat(0) : terms_[0].coef; }

  bool has_var(const std::string& v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
  }
  std::size_t index_of(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw AlgebraError("unknown variable " + v);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  /// Degree in `v`; -1 for the zero polynomial, 0 if `v` is absent.
  int degree(const std::string& v) const {
    if (terms_.empty()) return -1;
    if (!has_var(v)) return 0;
    std::size_t i = index_of(v);
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[i]);
    return d;
  }
  int total_degree() const { return terms_.empty() ? -1 : total(terms_[0].exps); }

  bool depends_on(const std::string& v) const { return degree(v) > 0; }

  std::vector<std::string> used_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (const auto& t : terms_)
        if (t.exps[i] > 0) {
          out.push_back(vars_[i]);
          break;
        }
    return out;
  }

  /// Same polynomial over another variable list, which must contain every used variable.
  MultiPoly with_vars(const std::vector<std::string>& vars) const {
    MultiPoly p(vars);
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(vars.begin(), vars.end(), vars_[i]);
      if (it == vars.end()) {
        for (const auto& t : terms_)
          if (t.exps[i] > 0) throw AlgebraError("variable " + vars_[i] + " dropped while in use");
        map[i] = vars.size();
      } else {
        map[i] = static_cast<std::size_t>(it - vars.begin());
      }
    }
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exps e(vars.size(), 0);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (map[i] < vars.size()) e[map[i]] = t.exps[i];
      p.terms_.push_back({std::move(e), t.coef});
    }
    p.normalize();
    return p;
  }

  /// Coefficients with respect to `v`: result[k] multiplies v^k.
  std::vector<MultiPoly> coefficients(const std::string& v) const {
    std::vector<MultiPoly> out;
    if (terms_.empty()) return out;
    if (!has_var(v)) return {*this};
    std::size_t i = index_of(v);
    out.assign(static_cast<std::size_t>(degree(v)) + 1, MultiPoly(vars_));
    for (const auto& t : terms_) {
      Term u = t;
      u.exps[i] = 0;
      out[static_cast<std::size_t>(t.exps[i])].terms_.push_back(std::move(u));
    }
    for (auto& c : out) c.normalize();
    return out;
  }

  MultiPoly leading_coefficient_in(const std::string& v) const {
    auto cs = coefficients(v);
    return cs.empty() ? MultiPoly(vars_) : cs.back();
  }

  MultiPoly derivative(const std::string& v) const {
    MultiPoly p(vars_);
    if (!has_var(v)) return p;
    std::size_t i = index_of(v);
    for (const auto& t : terms_) {
      if (t.exps[i] == 0) continue;
      Term u = t;
      u.coef *= t.exps[i];
      u.exps[i] -= 1;
      p.terms_.push_back(std::move(u));
    }
    p.normalize();
    return p;
  }

  /// Replaces `v` by `value` (Horner in `v`).
  MultiPoly substitute(const std::string& v, const MultiPoly& value) const {
    if (!has_var(v)) return *this;
    auto cs = coefficients(v);
    MultiPoly acc(vars_);
    for (std::size_t k = cs.size(); k-- > 0;) acc = acc * value + cs[k];
    return acc;
  }

  MultiPoly evaluate(const std::string& v, const Rat& value) const {
    if (!has_var(v)) return *this;
    std::size_t i = index_of(v);
    MultiPoly p(vars_);
    for (const auto& t : terms_) {
      Term u = t;
      u.coef *= pow_rat(value, t.exps[i]);
      u.exps[i] = 0;
      if (u.coef != 0) p.terms_.push_back(std::move(u));
    }
    p.normalize();
    return p;
  }

  MultiPoly evaluate(const std::map<std::string, Rat>& values) const {
    MultiPoly p = *this;
    for (const auto& [k, v] : values) p = p.evaluate(k, v);
    return p;
  }

  /// Integer primitive part with positive leading coefficient.
  MultiPoly primitive_part() const {
    if (terms_.empty()) return *this;
    Int den = 1;
    for (const auto& t : terms_) den = lcm(den, t.coef.get_den());
    Int g = 0;
    for (const auto& t : terms_) {
      Rat scaled = t.coef * den;
      g = gcd(g, scaled.get_num());
    }
    Rat scale(den, g);
    scale.canonicalize();
    if (terms_[0].coef < 0) scale = -scale;
    return (*this) * scale;
  }

  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    return (*this) * Rat(1 / terms_[0].coef);
  }

  MultiPoly operator-() const {
    MultiPoly p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const Rat& s) {
    MultiPoly p(a.vars_);
    if (s == 0) return p;
    p.terms_ = a.terms_;
    for (auto& t : p.terms_) t.coef *= s;
    return p;
  }
  friend MultiPoly operator*(const Rat& s, const MultiPoly& a) { return a * s; }

  friend MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
    auto [a, b] = unify(a0, b0);
    MultiPoly p(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return p;
    const std::size_t n = a.vars_.size();
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Exps e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = s.exps[i] + t.exps[i];
        out.push_back({std::move(e), s.coef * t.coef});
      }
    p.terms_ = std::move(out);
    p.normalize();
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(1, vars_), base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  /// Equality as polynomials, independent of declared variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_.size() == b.terms_.size() && equal_terms(a, b);
    return (a - b).is_zero();
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical string: terms in descending grlex order, factors in declared order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rat c = t.coef;
      bool neg = c < 0;
      if (neg) c = -c;
      std::string mono = monomial_str(t.exps);
      std::string body;
      if (mono.empty()) body = c.get_str();
      else if (c == 1) body = mono;
      else body = c.get_str() + "*" + mono;
      if (first) out += neg ? "-" + body : body;
      else out += (neg ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

  /// Merges variable lists (first operand's order, then new names in order).
  static std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> vars = a.vars_;
    for (const auto& v : b.vars_)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    return {a.vars_ == vars ? a : a.with_vars(vars), b.with_vars(vars)};
  }

  static bool grlex_greater(const Exps& a, const Exps& b) {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }

  static Rat pow_rat(const Rat& v, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
  }

 private:
  static int total(const Exps& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  static bool equal_terms(const MultiPoly& a, const MultiPoly& b) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

  void check_vars() const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw AlgebraError("duplicate variable " + vars_[i]);
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exps == t.exps) out.back().coef += t.coef;
      else out.push_back(std::move(t));
      if (out.back().coef == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  static MultiPoly merge(const MultiPoly& a0, const MultiPoly& b0, bool subtract) {
    auto [a, b] = unify(a0, b0);
    MultiPoly p(a.vars_);
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_greater(a.terms_[i].exps, b.terms_[j].exps))) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exps, a.terms_[i].exps)) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        p.terms_.push_back(std::move(t));
      } else {
        Rat c = subtract ? Rat(a.terms_[i].coef - b.terms_[j].coef)
                         : Rat(a.terms_[i].coef + b.terms_[j].coef);
        if (c != 0) p.terms_.push_back({a.terms_[i].exps, c});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::string monomial_str(const Exps& e) const {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

inline bool is_zero_scalar(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(1, p.vars()); }

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& a0, const MultiPoly& b0) {
  if (b0.is_zero()) throw AlgebraError("division by the zero polynomial");
  auto [a, b] = MultiPoly::unify(a0, b0);
  const auto& vars = a.vars();
  if (b.is_constant()) return a * Rat(1 / b.constant_value());
  const auto& lead = b.terms().front();
  std::vector<MultiPoly::Term> quotient;
  MultiPoly r = a;
  while (!r.is_zero()) {
    const auto& rt = r.terms().front();
    MultiPoly::Exps e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      e[i] = rt.exps[i] - lead.exps[i];
      if (e[i] < 0) return std::nullopt;
    }
    MultiPoly::Term q{std::move(e), rt.coef / lead.coef};
    quotient.push_back(q);
    r = r - MultiPoly::from_terms(vars, {q}) * b;
  }
  return MultiPoly::from_terms(vars, std::move(quotient));
}

/// Parser for the canonical grammar: rationals, identifiers, + - * ^, parentheses,
/// and division by nonzero constants.
class PolyParser {
 public:
  PolyParser(std::string text, std::vector<std::string> vars) : s_(std::move(text)), vars_(std::move(vars)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    std::vector<std::string> order = vars_;
    for (const auto& v : seen_)
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    return p.with_vars(order);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg +
                       " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      if (accept('+')) p = p + term();
      else if (accept('-')) p = p - term();
      else return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p = p * Rat(1 / d.constant_value());
      } else {
        return p;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (std::find(seen_.begin(), seen_.end(), name) == seen_.end()) seen_.push_back(name);
      return MultiPoly::variable(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  std::vector<std::string> vars_;
  std::vector<std::string> seen_;
  std::size_t pos_ = 0;
};

/// Parses `text`; declared `vars` come first in the variable order, then any
/// further identifiers in order of first appearance.
inline MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars = {}) {
  return PolyParser(text, vars).parse();
}

}  // namespace lpm
