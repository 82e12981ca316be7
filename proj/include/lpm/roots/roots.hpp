#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpm/exact/matrix.hpp"
#include "lpm/lattice/degree.hpp"
#include "lpm/lattice/enumerate.hpp"
#include "lpm/lattice/lattice.hpp"

namespace lpm {

/// Norm -2 vectors of a negative (semi)definite lattice, sorted. In the
/// semidefinite case one lift per root class modulo the radical is returned.
inline std::vector<IntVec> enumerate_roots(const IntegralLattice& l) {
  auto [pos, neg, zero] = signature(l.gram());
  (void)neg;
  if (pos > 0) throw AlgebraError("root enumeration needs a negative (semi)definite lattice");
  if (zero == 0) return vectors_of_norm(IntMatrix(-l.gram()), Int(2));
  auto rq = radical_and_quotient(share(l));
  std::vector<IntVec> out;
  for (const auto& c : vectors_of_norm(IntMatrix(-rq.quotient.gram()), Int(2))) {
    IntVec v = l.zero();
    for (std::size_t i = 0; i < c.size(); ++i) v = v + c[i] * rq.complement[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Linear functional on coordinates. An empty weight vector means "sign of the
/// first nonzero coordinate"; `lex_fallback` breaks ties that way.
struct Functional {
  IntVec weights;
  bool lex_fallback = false;

  int sign(const IntVec& v) const {
    Int s = weights.empty() ? Int(0) : dot(weights, v);
    if (s != 0) return s > 0 ? 1 : -1;
    if (!lex_fallback && !weights.empty()) return 0;
    for (const auto& x : v)
      if (x != 0) return x > 0 ? 1 : -1;
    return 0;
  }
};

/// Pairing against the ambient vector (N, N-1, ..., 1).
inline Functional default_functional(const IntegralLattice& l) {
  const std::size_t n = l.rank();
  IntVec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(n - i);
  return Functional{l.gram() * w, true};
}

struct PositiveSimple {
  std::vector<IntVec> positive;
  std::vector<IntVec> simple;
};

/// Positive roots by the functional, simple roots as the indecomposable positives.
inline PositiveSimple positive_and_simple(const IntegralLattice& l, const std::vector<IntVec>& roots,
                                          const Functional& fn) {
  PositiveSimple out;
  for (const auto& r : roots) {
    int s = fn.sign(r);
    if (s == 0) throw AlgebraError("non-generic functional: vanishes on root " + l.format(r));
    if (s > 0) out.positive.push_back(r);
  }
  std::sort(out.positive.begin(), out.positive.end());
  std::vector<IntVec> sums;
  for (std::size_t i = 0; i < out.positive.size(); ++i)
    for (std::size_t j = i + 1; j < out.positive.size(); ++j) sums.push_back(out.positive[i] + out.positive[j]);
  std::sort(sums.begin(), sums.end());
  for (const auto& p : out.positive)
    if (!std::binary_search(sums.begin(), sums.end(), p)) out.simple.push_back(p);
  if (out.positive.size() * 2 != roots.size()) throw AlgebraError("root set is not closed under negation");
  // simple roots must form a basis in which every positive root is a nonnegative integer combination
  if (!out.simple.empty()) {
    RatMatrix s = to_rational(rows_to_matrix(out.simple, l.rank()));
    if (rank(s) != out.simple.size()) throw AlgebraError("simple roots are linearly dependent");
    for (const auto& p : out.positive) {
      auto c = solve_row_combination(s, RatVec(p.begin(), p.end()));
      if (!c) throw AlgebraError("positive root outside the span of the simple roots");
      for (const auto& x : *c)
        if (!is_integer(x) || x < 0) throw AlgebraError("positive root is not a nonnegative combination of simple roots");
    }
  }
  return out;
}

/// Coefficients of a positive root in the simple-root basis.
inline IntVec simple_coordinates(const std::vector<IntVec>& simple, const IntVec& v, std::size_t n) {
  auto c = solve_row_combination(to_rational(rows_to_matrix(simple, n)), RatVec(v.begin(), v.end()));
  if (!c) throw AlgebraError("vector outside the span of the simple roots");
  IntVec out;
  for (const auto& x : *c) {
    if (!is_integer(x)) throw AlgebraError("vector is not an integral combination of simple roots");
    out.push_back(x.get_num());
  }
  return out;
}

struct AdeComponent {
  std::string label;
  std::vector<std::size_t> indices;  // into the simple-root list
  std::size_t rank() const { return indices.size(); }
};

namespace detail {

inline std::pair<char, int> parse_component_label(const std::string& label) {
  if (label.size() < 2 || (label[0] != 'A' && label[0] != 'D' && label[0] != 'E'))
    throw AlgebraError("bad ADE label " + label);
  return {label[0], std::stoi(label.substr(1))};
}

inline bool component_before(const AdeComponent& a, const AdeComponent& b) {
  if (a.rank() != b.rank()) return a.rank() > b.rank();
  auto [la, na] = parse_component_label(a.label);
  auto [lb, nb] = parse_component_label(b.label);
  (void)na;
  (void)nb;
  if (la != lb) return la > lb;  // E before D before A at equal rank
  return a.indices < b.indices;
}

}  // namespace detail

/// ADE components of the Coxeter graph of simple roots given by their Gram matrix.
inline std::vector<AdeComponent> classify_ade(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) != -2) throw AlgebraError("simple root of norm " + gram(i, i).get_str() + ", expected -2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gram(i, j) != 0 && gram(i, j) != 1) throw AlgebraError("not simply-laced: pairing " + gram(i, j).get_str());
      if (gram(i, j) == 1) adj[i].push_back(j);
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<AdeComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    std::size_t edges = 0;
    for (std::size_t v : members) edges += adj[v].size();
    edges /= 2;
    if (edges != members.size() - 1) throw AlgebraError("not a Dynkin diagram: cycle in component");
    std::vector<std::size_t> branch;
    for (std::size_t v : members) {
      if (adj[v].size() > 3) throw AlgebraError("not a Dynkin diagram: vertex of degree > 3");
      if (adj[v].size() == 3) branch.push_back(v);
    }
    const int m = static_cast<int>(members.size());
    std::string label;
    if (branch.empty()) {
      label = "A" + std::to_string(m);
    } else if (branch.size() > 1) {
      throw AlgebraError("not a Dynkin diagram: several branch points");
    } else {
      std::vector<int> arms;
      for (std::size_t start : adj[branch[0]]) {
        int len = 1;
        std::size_t prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
          std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) label = "D" + std::to_string(m);
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) label = "E" + std::to_string(m);
      else throw AlgebraError("not a Dynkin diagram: arms do not match D or E");
    }
    out.push_back({label, members});
  }
  std::sort(out.begin(), out.end(), detail::component_before);
  return out;
}

inline std::string ade_type(const std::vector<AdeComponent>& comps) {
  if (comps.empty()) return "0";
  std::string s;
  for (const auto& c : comps) s += (s.empty() ? "" : "+") + c.label;
  return s;
}

/// Gram matrix of the simple roots in a lattice.
inline IntMatrix simple_gram(const IntegralLattice& l, const std::vector<IntVec>& simple) {
  IntMatrix g(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) g(i, j) = l.pair(simple[i], simple[j]);
  return g;
}

struct RootSystemReport {
  IntegralLattice lattice;
  std::vector<IntVec> roots;
  std::vector<IntVec> positive;
  std::vector<IntVec> simple;
  std::vector<AdeComponent> components;
  std::string type() const { return ade_type(components); }
};

inline RootSystemReport root_system(const IntegralLattice& l, const std::optional<Functional>& fn = std::nullopt) {
  RootSystemReport rep{l, enumerate_roots(l), {}, {}, {}};
  auto ps = positive_and_simple(l, rep.roots, fn ? *fn : default_functional(l));
  rep.positive = std::move(ps.positive);
  rep.simple = std::move(ps.simple);
  rep.components = classify_ade(simple_gram(l, rep.simple));
  return rep;
}

// ---- Dynkin lattices --------------------------------------------------------

/// Negative definite Gram matrix of a root lattice with the given label, e.g. "A2+A1".
inline IntMatrix dynkin_gram(const std::string& label) {
  std::vector<std::pair<char, int>> parts;
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t plus = label.find('+', start);
    std::string part = label.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    auto pc = detail::parse_component_label(part);
    if (pc.second < 1 || (pc.first == 'D' && pc.second < 4) || (pc.first == 'E' && (pc.second < 6 || pc.second > 8)))
      throw AlgebraError("bad ADE label " + part);
    parts.push_back(pc);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  std::size_t total = 0;
  for (auto& p : parts) total += static_cast<std::size_t>(p.second);
  IntMatrix g(total, total);
  std::size_t off = 0;
  for (auto [kind, n] : parts) {
    const std::size_t m = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < m; ++i) g(off + i, off + i) = -2;
    auto link = [&](std::size_t i, std::size_t j) { g(off + i, off + j) = g(off + j, off + i) = 1; };
    if (kind == 'A') {
      for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1);
    } else if (kind == 'D') {
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(m - 3, m - 1);
    } else {
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(2, m - 1);
    }
    off += m;
  }
  return g;
}

inline IntegralLattice dynkin_lattice(const std::string& label) {
  IntMatrix g = dynkin_gram(label);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.rows(); ++i) labels.push_back("r" + std::to_string(i + 1));
  return IntegralLattice(g, labels, label);
}

/// Closed-form root count of a root lattice type.
inline long root_count(const std::string& label) {
  if (label == "0") return 0;
  long total = 0;
  std::size_t start = 0;
  for (;;) {
    std::size_t plus = label.find('+', start);
    auto [kind, n] = detail::parse_component_label(label.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (kind == 'A') total += static_cast<long>(n) * (n + 1);
    else if (kind == 'D') total += 2L * n * (n - 1);
    else total += n == 6 ? 72 : n == 7 ? 126 : 240;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return total;
}

/// Label of a degenerate lattice: quotient type with a tilde on its first
/// component when the radical has rank 1.
inline std::string affine_label(std::size_t radical_rank, const std::string& quotient_type) {
  if (radical_rank == 0) return quotient_type;
  if (quotient_type == "0") return radical_rank == 1 ? "(0)" : "0^" + std::to_string(radical_rank);
  if (radical_rank == 1) return "~" + quotient_type;
  return quotient_type + "+0^" + std::to_string(radical_rank);
}

// ---- marking classes in I(1,9) ------------------------------------------------

/// alpha_0 = l - e1 - e2 - e3 and alpha_i = e_i - e_{i+1}, i = 1..8, in I(1,9).
inline IntVec alpha_class(int i) {
  IntVec v(10, Int(0));
  if (i == 0) {
    v[0] = 1;
    v[1] = v[2] = v[3] = -1;
  } else {
    if (i < 1 || i > 8) throw AlgebraError("alpha index out of range");
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(i) + 1] = -1;
  }
  return v;
}

/// f_0 = 3l - e1 - ... - e9.
inline IntVec f0_class() {
  IntVec v(10, Int(-1));
  v[0] = 3;
  return v;
}

struct MarkingClasses {
  Degree degree;
  std::vector<IntVec> deltas;
};

/// delta_1..delta_d in I(1,9); their sum is f_0.
inline MarkingClasses marking_deltas(const Degree& deg) {
  MarkingClasses m{deg, {}};
  const IntVec f0 = f0_class();
  if (deg.prime) {
    for (int i = 1; i <= 6; ++i) m.deltas.push_back(alpha_class(9 - i));
    m.deltas.push_back(alpha_class(0));
    IntVec last = f0 - alpha_class(0);
    for (int j = 8; j >= 3; --j) last = last - alpha_class(j);
    m.deltas.push_back(last);
  } else {
    const int d = deg.d;
    for (int i = 1; i <= d - 1; ++i) m.deltas.push_back(alpha_class(9 - i));
    IntVec last = f0;
    for (int j = 8; j >= 10 - d; --j) last = last - alpha_class(j);
    m.deltas.push_back(last);
  }
  auto ambient = odd_unimodular(9);
  IntVec sum(10, Int(0));
  for (const auto& v : m.deltas) sum = sum + v;
  if (sum != f0) throw AlgebraError("marking classes do not sum to f0");
  const std::size_t k = m.deltas.size();
  if (k >= 2) {
    for (std::size_t i = 0; i < k; ++i) {
      if (ambient.norm(m.deltas[i]) != -2) throw AlgebraError("marking class of norm != -2");
      // a two-cycle meets in two points
      Int expected = k == 2 ? 2 : 1;
      if (ambient.pair(m.deltas[i], m.deltas[(i + 1) % k]) != expected)
        throw AlgebraError("consecutive marking classes do not meet as a cycle");
    }
  }
  return m;
}

}  // namespace lpm
